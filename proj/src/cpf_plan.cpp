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

#include "vtd/cpf_plan.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "vtd/errors.hpp"

namespace vtd {

using nlohmann::json;

namespace {

// Seeded generator with platform-independent derived draws (the standard
// distributions are implementation-defined).
class PlanRng {
 public:
  explicit PlanRng(std::uint64_t seed) : gen_(seed) {}

  // Uniform integer in [0, n) by rejection sampling.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = gen_();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 gen_;
};

std::vector<std::uint32_t> shuffled_range(std::uint32_t n, PlanRng& rng) {
  std::vector<std::uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  rng.shuffle(v);
  return v;
}

std::uint64_t batches_per_epoch(const std::vector<ImageSetSpec>& sets, std::uint32_t batch_size) {
  std::uint64_t total = 0;
  for (const auto& s : sets) total += (s.count + batch_size - 1) / batch_size;
  return total;
}

}  // namespace

ImageSetSpec preset_set(const std::string& id) {
  if (id == "detection") return {id, 70000, {"tag", "det", "pose", "drivable", "lane"}};
  if (id == "segmentation") return {id, 6500, {"ins", "sem"}};
  if (id == "tracking") return {id, 280000, {"mot", "mots"}};
  if (id == "mots_subset") return {id, 31000, {"mot", "mots"}};
  throw ValidationError("unknown image set preset '" + id + "'");
}

std::vector<ImageSetSpec> joint_training_sets() {
  return {preset_set("detection"), preset_set("segmentation"), preset_set("mots_subset")};
}

std::optional<SamplingStrategy> parse_strategy(const std::string& name) {
  if (name == "round_robin") return SamplingStrategy::kRoundRobin;
  if (name == "none") return SamplingStrategy::kNone;
  if (name == "uniform") return SamplingStrategy::kUniform;
  if (name == "weighted") return SamplingStrategy::kWeighted;
  return std::nullopt;
}

std::string strategy_name(SamplingStrategy s) {
  switch (s) {
    case SamplingStrategy::kRoundRobin: return "round_robin";
    case SamplingStrategy::kNone: return "none";
    case SamplingStrategy::kUniform: return "uniform";
    case SamplingStrategy::kWeighted: return "weighted";
  }
  return "unknown";
}

std::optional<std::uint32_t> Batch::single_set() const {
  if (samples.empty()) return std::nullopt;
  for (const auto& s : samples) {
    if (s.set != samples.front().set) return std::nullopt;
  }
  return samples.front().set;
}

SchedulePlan build_schedule(const std::vector<ImageSetSpec>& sets, std::uint32_t batch_size,
                            SamplingStrategy strategy, std::uint64_t seed, std::uint32_t epochs) {
  if (sets.empty()) throw ValidationError("schedule needs at least one image set");
  if (batch_size < 1) throw ValidationError("batch size must be at least 1");
  if (epochs < 1) throw ValidationError("epochs must be at least 1");
  for (const auto& s : sets) {
    if (s.count == 0) throw ValidationError("image set '" + s.id + "' is empty");
  }
  SchedulePlan plan{sets, strategy, seed, batch_size, epochs, {}, {}};
  PlanRng rng(seed);
  const auto num_sets = static_cast<std::uint32_t>(sets.size());

  auto cut = [&](std::uint32_t set, const std::vector<std::uint32_t>& order) {
    std::vector<Batch> out;
    for (std::size_t i = 0; i < order.size(); i += batch_size) {
      Batch b;
      for (std::size_t k = i; k < std::min(order.size(), i + batch_size); ++k) b.samples.push_back({set, order[k]});
      out.push_back(std::move(b));
    }
    return out;
  };

  // Pools for the stochastic strategies persist across epochs.
  std::vector<std::vector<std::uint32_t>> pools(num_sets);
  std::vector<std::size_t> pool_pos(num_sets, 0);
  const std::uint64_t total_count = std::accumulate(
      sets.begin(), sets.end(), std::uint64_t{0}, [](std::uint64_t a, const ImageSetSpec& s) { return a + s.count; });

  for (std::uint32_t epoch = 0; epoch < epochs; ++epoch) {
    plan.epoch_starts.push_back(plan.batches.size());
    switch (strategy) {
      case SamplingStrategy::kRoundRobin: {
        std::vector<std::vector<Batch>> per_set(num_sets);
        for (std::uint32_t s = 0; s < num_sets; ++s) per_set[s] = cut(s, shuffled_range(sets[s].count, rng));
        std::vector<std::size_t> next(num_sets, 0);
        bool emitted = true;
        while (emitted) {
          emitted = false;
          for (std::uint32_t s = 0; s < num_sets; ++s) {
            if (next[s] >= per_set[s].size()) continue;
            plan.batches.push_back(std::move(per_set[s][next[s]++]));
            emitted = true;
          }
        }
        break;
      }
      case SamplingStrategy::kNone: {
        std::vector<SampleRef> all;
        all.reserve(total_count);
        for (std::uint32_t s = 0; s < num_sets; ++s) {
          for (std::uint32_t i = 0; i < sets[s].count; ++i) all.push_back({s, i});
        }
        rng.shuffle(all);
        for (std::size_t i = 0; i < all.size(); i += batch_size) {
          Batch b;
          b.samples.assign(all.begin() + static_cast<std::ptrdiff_t>(i),
                           all.begin() + static_cast<std::ptrdiff_t>(std::min(all.size(), i + batch_size)));
          plan.batches.push_back(std::move(b));
        }
        break;
      }
      case SamplingStrategy::kUniform:
      case SamplingStrategy::kWeighted: {
        const std::uint64_t n_batches = batches_per_epoch(sets, batch_size);
        for (std::uint64_t k = 0; k < n_batches; ++k) {
          std::uint32_t s = 0;
          if (strategy == SamplingStrategy::kUniform) {
            s = static_cast<std::uint32_t>(rng.below(num_sets));
          } else {
            std::uint64_t r = rng.below(total_count);
            while (r >= sets[s].count) r -= sets[s].count, ++s;
          }
          if (pool_pos[s] >= pools[s].size()) {
            pools[s] = shuffled_range(sets[s].count, rng);
            pool_pos[s] = 0;
          }
          Batch b;
          const std::size_t end = std::min(pools[s].size(), pool_pos[s] + batch_size);
          for (; pool_pos[s] < end; ++pool_pos[s]) b.samples.push_back({s, pools[s][pool_pos[s]]});
          plan.batches.push_back(std::move(b));
        }
        break;
      }
    }
  }
  return plan;
}

FrameSet filter_pose_pseudolabels(const FrameSet& labels, double threshold) {
  FrameSet out = labels;
  for (Frame& f : out.frames) {
    std::vector<Label> kept;
    kept.reserve(f.labels.size());
    for (Label& l : f.labels) {
      if (l.graph) {
        for (Joint& j : l.graph->joints) {
          if (j.score < threshold) j.score = 0.0;
        }
        if (l.graph->visible_count() == 0) continue;
      }
      kept.push_back(std::move(l));
    }
    f.labels = std::move(kept);
  }
  return out;
}

SemanticMap filter_seg_pseudolabels(const SemanticMap& map, double threshold) {
  if (!map.has_confidence() || map.confidence.size() != map.classes.size()) {
    throw ValidationError("segmentation pseudo-labels need a per-pixel confidence channel");
  }
  SemanticMap out = map;
  for (std::size_t i = 0; i < out.classes.size(); ++i) {
    if (static_cast<double>(out.confidence[i]) < threshold) out.classes[i] = kIgnoreIndex;
  }
  return out;
}

const std::vector<std::string>& task_decoders() {
  static const std::vector<std::string> kDecoders = {"tag", "sem", "drivable", "lane", "det",
                                                     "ins", "pose", "mot", "mots", "flow"};
  return kDecoders;
}

namespace {

json optimizer_hint(const char* optimizer, double lr, int batch, int epochs, std::vector<int> steps) {
  return json{{"optimizer", optimizer}, {"lr", lr}, {"batch_size", batch}, {"epochs", epochs},
              {"lr_steps", std::move(steps)}};
}

std::vector<std::string> finetune_data(const std::string& task, bool mots_subset) {
  if (task == "ins" || task == "sem") return {"segmentation"};
  if (task == "mots") return {"mots_subset"};
  if (task == "mot" || task == "flow") return {mots_subset ? "mots_subset" : "tracking"};
  return {"detection"};
}

}  // namespace

StagePlan curriculum_plan(const CurriculumConfig& config) {
  if (config.joint_epochs < 0 || config.finetune_epochs < 0) {
    throw ValidationError("epoch counts must be non-negative");
  }
  for (int e : config.decay_epochs) {
    if (e < 0 || e > config.joint_epochs) {
      throw ValidationError("decay epoch " + std::to_string(e) + " lies outside the joint stage");
    }
  }
  if (!(config.finetune_lr_mult > 0)) throw ValidationError("finetune lr multiplier must be positive");

  StagePlan plan;
  {
    Stage s;
    s.name = "pretrain_detection_tracking";
    s.kind = StageKind::kPretrain;
    s.tasks = {"det", "mot"};
    s.epochs = 12;
    s.lr = {1.0, {8, 11}, 0.1};
    s.data = {"detection", "tracking"};
    s.trainable = {"feature_extractor", "decoder_det", "decoder_mot"};
    s.metadata = {{"hyperparameters", optimizer_hint("SGD", 0.02, 16, 12, {8, 11})},
                  {"procedure", "QDTrack on the detection and full tracking sets"}};
    plan.stages.push_back(std::move(s));
  }
  {
    Stage s;
    s.name = "pretrain_segmentation_pose";
    s.kind = StageKind::kPretrain;
    s.tasks = {"ins", "mots", "pose"};
    s.epochs = 12;
    s.lr = {1.0, {8, 11}, 0.1};
    s.data = {"segmentation", "mots_subset", "detection"};
    s.trainable = {"decoder_ins", "decoder_pose"};
    s.metadata = {{"hyperparameters",
                   {{"ins", optimizer_hint("SGD", 0.01, 16, 12, {8, 11})},
                    {"pose", optimizer_hint("SGD", 0.02, 16, 36, {24, 33})}}},
                  {"procedure", "QDTrack-MOTS mask decoder training with the rest frozen"}};
    plan.stages.push_back(std::move(s));
  }
  {
    Stage s;
    s.name = "joint";
    s.kind = StageKind::kJoint;
    s.tasks = task_decoders();
    s.epochs = config.joint_epochs;
    s.lr = {1.0, config.decay_epochs, 0.1};
    s.data = {"detection", "segmentation", config.use_mots_subset ? "mots_subset" : "tracking"};
    s.trainable = {"all"};
    s.sampler = "round_robin";
    if (config.use_pseudolabels) {
      s.pseudo_labels = json::array(
          {json{{"task", "pose"}, {"source", "single_task_baseline"}, {"filter", "joint_score"}, {"threshold", 0.2}},
           json{{"task", "sem"}, {"source", "single_task_baseline"}, {"filter", "pixel_confidence"}, {"threshold", 0.3}}});
    }
    s.metadata = {{"hyperparameters", optimizer_hint("AdamW", 0.0001, 16, 12, {8, 11})}};
    plan.stages.push_back(std::move(s));
  }
  if (config.finetune_epochs > 0) {
    for (const std::string& task : task_decoders()) {
      Stage s;
      s.name = "finetune_" + task;
      s.kind = StageKind::kFinetune;
      s.tasks = {task};
      s.epochs = config.finetune_epochs;
      s.lr = {config.finetune_lr_mult, {}, 0.1};
      s.data = finetune_data(task, config.use_mots_subset);
      s.trainable = {"decoder_" + task};
      plan.stages.push_back(std::move(s));
    }
  }
  return plan;
}

json schedule_to_json(const SchedulePlan& plan) {
  json sets = json::array();
  for (const auto& s : plan.sets) sets.push_back({{"id", s.id}, {"count", s.count}, {"tasks", s.tasks}});
  json batches = json::array();
  for (const Batch& b : plan.batches) {
    json indices = json::array();
    for (const auto& r : b.samples) indices.push_back(r.index);
    if (auto set = b.single_set()) {
      batches.push_back({{"set", plan.sets[*set].id}, {"indices", std::move(indices)}});
    } else {
      json ids = json::array();
      for (const auto& r : b.samples) ids.push_back(plan.sets[r.set].id);
      batches.push_back({{"set", "mixed"}, {"sets", std::move(ids)}, {"indices", std::move(indices)}});
    }
  }
  return {{"version", 1},
          {"kind", "schedule"},
          {"strategy", strategy_name(plan.strategy)},
          {"seed", plan.seed},
          {"batch_size", plan.batch_size},
          {"epochs", plan.epochs},
          {"sets", std::move(sets)},
          {"epoch_starts", plan.epoch_starts},
          {"batches", std::move(batches)}};
}

json stage_plan_to_json(const StagePlan& plan) {
  static const std::map<StageKind, const char*> kKinds = {
      {StageKind::kPretrain, "pretrain"}, {StageKind::kJoint, "joint"}, {StageKind::kFinetune, "finetune"}};
  json stages = json::array();
  for (const Stage& s : plan.stages) {
    json st = {{"name", s.name},
               {"kind", kKinds.at(s.kind)},
               {"tasks", s.tasks},
               {"epochs", s.epochs},
               {"lr", {{"multiplier", s.lr.multiplier}, {"decay_epochs", s.lr.decay_epochs},
                       {"decay_factor", s.lr.decay_factor}}},
               {"data", s.data},
               {"trainable", s.trainable},
               {"pseudo_labels", s.pseudo_labels},
               {"metadata", s.metadata}};
    if (!s.sampler.empty()) st["sampler"] = s.sampler;
    if (s.kind == StageKind::kFinetune) st["frozen"] = "all_except_trainable";
    stages.push_back(std::move(st));
  }
  return {{"version", 1}, {"kind", "curriculum"}, {"stages", std::move(stages)}};
}

}  // namespace vtd
