// Copyright 2026 The VTD Toolkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vtd/types.hpp"

namespace vtd {

struct ImageSetSpec {
  std::string id;
  std::uint32_t count = 0;
  std::vector<std::string> tasks;
};

// Training-split presets: detection 70K, segmentation 6.5K, tracking 280K,
// and the 31K-image MOTS subset of the tracking set.
ImageSetSpec preset_set(const std::string& id);
// Sets used during joint training: detection, segmentation, MOTS subset.
std::vector<ImageSetSpec> joint_training_sets();

enum class SamplingStrategy { kRoundRobin, kNone, kUniform, kWeighted };

std::optional<SamplingStrategy> parse_strategy(const std::string& name);
std::string strategy_name(SamplingStrategy s);

struct SampleRef {
  std::uint32_t set = 0;    // index into SchedulePlan::sets
  std::uint32_t index = 0;  // sample index within the set
  friend bool operator==(const SampleRef&, const SampleRef&) = default;
};

struct Batch {
  std::vector<SampleRef> samples;
  // Set index when every sample comes from one set.
  std::optional<std::uint32_t> single_set() const;
  friend bool operator==(const Batch&, const Batch&) = default;
};

struct SchedulePlan {
  std::vector<ImageSetSpec> sets;
  SamplingStrategy strategy = SamplingStrategy::kRoundRobin;
  std::uint64_t seed = 0;
  std::uint32_t batch_size = 1;
  std::uint32_t epochs = 1;
  std::vector<std::size_t> epoch_starts;  // index of each epoch's first batch
  std::vector<Batch> batches;
};

// Deterministic batch schedule.
//  round_robin: per epoch, each set is seed-shuffled and cut into batches;
//               sets take turns in declared order, exhausted sets drop out.
//  none:        one seed-shuffled pass over the union of all sets per epoch.
//  uniform /
//  weighted:    every batch picks its set at random (uniformly / in
//               proportion to set size); each set is consumed from a
//               shuffled pool that refills only once exhausted. An epoch has
//               as many batches as round_robin would produce.
// Throws ValidationError on an empty set list, empty sets, batch_size < 1
// or epochs < 1.
SchedulePlan build_schedule(const std::vector<ImageSetSpec>& sets, std::uint32_t batch_size,
                            SamplingStrategy strategy, std::uint64_t seed, std::uint32_t epochs);

// Removes joints scored below the threshold (score set to 0) and drops
// pose labels left without a visible joint. Labels without a graph pass
// through untouched.
FrameSet filter_pose_pseudolabels(const FrameSet& labels, double threshold = 0.2);

// Pixels with confidence below the threshold become the ignore index.
// Throws ValidationError when the map carries no confidence channel.
SemanticMap filter_seg_pseudolabels(const SemanticMap& map, double threshold = 0.3);

enum class StageKind { kPretrain, kJoint, kFinetune };

struct LrDirective {
  double multiplier = 1.0;
  std::vector<int> decay_epochs;
  double decay_factor = 0.1;
};

struct Stage {
  std::string name;
  StageKind kind = StageKind::kJoint;
  std::vector<std::string> tasks;
  int epochs = 0;
  LrDirective lr;
  std::vector<std::string> data;            // image sets fed to the stage
  std::vector<std::string> trainable;       // modules updated in the stage
  std::string sampler;                      // empty when single-set
  nlohmann::json pseudo_labels = nlohmann::json::array();
  nlohmann::json metadata = nlohmann::json::object();  // opaque trainer hints
};

struct StagePlan {
  std::vector<Stage> stages;
};

struct CurriculumConfig {
  int joint_epochs = 12;
  std::vector<int> decay_epochs = {8, 11};
  int finetune_epochs = 6;
  double finetune_lr_mult = 0.1;
  bool use_pseudolabels = true;
  bool use_mots_subset = true;
};

// Pretrain (two sub-stages) -> joint over all ten tasks -> one finetune
// stage per task decoder with everything else frozen.
// Throws ValidationError on negative epochs or decay epochs outside the
// joint stage.
StagePlan curriculum_plan(const CurriculumConfig& config = {});

// JSON documents (version 1), keys sorted.
nlohmann::json schedule_to_json(const SchedulePlan& plan);
nlohmann::json stage_plan_to_json(const StagePlan& plan);

// The ten task decoders in canonical order.
const std::vector<std::string>& task_decoders();

}  // namespace vtd
