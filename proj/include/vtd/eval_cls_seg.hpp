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
#include <span>
#include <string>
#include <vector>

#include "vtd/score.hpp"
#include "vtd/types.hpp"

namespace vtd {

enum class TagAttribute { kWeather, kScene };

struct TaggingOptions {
  // Drop frames whose ground-truth tag is "undefined" instead of scoring
  // "undefined" as an ordinary seventh class.
  bool exclude_undefined_gt = false;
};

// Top-1 accuracy over ground-truth frames; predictions are looked up by
// frame key and a missing prediction counts as wrong.
// Throws ValidationError when no ground-truth frame is scored or a
// ground-truth frame lacks the attribute.
TaskScore tagging_accuracy(const FrameSet& preds, const FrameSet& gts, TagAttribute attribute,
                           const TaggingOptions& options = {});

// Rows are ground-truth classes, columns predicted classes. `missed`
// counts ground-truth pixels that received no prediction at all.
class ConfusionMatrix {
 public:
  ConfusionMatrix() = default;
  explicit ConfusionMatrix(int n_classes)
      : n_(n_classes), counts_(static_cast<std::size_t>(n_classes) * n_classes, 0),
        missed_(n_classes, 0) {}

  int size() const { return n_; }
  std::uint64_t operator()(int gt, int pred) const { return counts_[static_cast<std::size_t>(gt) * n_ + pred]; }
  std::uint64_t& operator()(int gt, int pred) { return counts_[static_cast<std::size_t>(gt) * n_ + pred]; }
  std::uint64_t missed(int gt) const { return missed_[gt]; }
  std::uint64_t& missed(int gt) { return missed_[gt]; }

  ConfusionMatrix& operator+=(const ConfusionMatrix& other);
  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> counts_;
  std::vector<std::uint64_t> missed_;
};

struct ConfusionOptions {
  // Treat prediction pixels equal to the ignore index as "no prediction"
  // (tallied in missed) instead of rejecting them.
  bool allow_unlabeled_pred = false;
};

// Counts pixels whose ground truth is not the ignore index.
// Throws ValidationError on shape mismatch or class index >= n_classes.
ConfusionMatrix accumulate_confusion(const SemanticMap& pred, const SemanticMap& gt, int n_classes,
                                     const ConfusionOptions& options = {});

// Mean over scored classes present in ground truth or prediction of
// 100 * TP / (TP + FP + FN). Throws ValidationError when no scored class
// is present.
TaskScore miou(const ConfusionMatrix& cm, std::span<const int> scored_classes, Slot slot,
               std::span<const std::string> class_names = {});

// Builds a frame's class map from its RLE labels (painted in file order)
// or its referenced PGM label map. Unpainted pixels get `fill`.
SemanticMap frame_semantic_map(const Frame& frame, std::span<const std::string_view> classes,
                               std::uint8_t fill);

// Semantic segmentation mIoU over the 19 classes.
TaskScore semantic_miou(const FrameSet& preds, const FrameSet& gts, int workers = 1);

// Drivable area mIoU over {direct, alternative}; background is predicted
// but not scored.
TaskScore drivable_miou(const FrameSet& preds, const FrameSet& gts, int workers = 1);

struct LaneOptions {
  int dilation_radius = 5;
  double thickness = 2.0;
  std::size_t subsample = 1000;
  // Raster size for frames that carry no height / width.
  int default_height = 720;
  int default_width = 1280;
  bool bezier = false;
};

// Boundary mIoU for lanes on each of the three label axes (category,
// direction, style). Prediction rasters are compared against dilated
// ground-truth rasters; counts pool over the first `subsample` ground-truth
// frames in name order, per-class IoUs average per axis, axes average into
// the final score.
TaskScore lane_boundary_iou(const FrameSet& preds, const FrameSet& gts,
                            const LaneOptions& options = {}, int workers = 1);

}  // namespace vtd
