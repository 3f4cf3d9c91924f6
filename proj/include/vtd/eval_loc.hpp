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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vtd/geometry.hpp"
#include "vtd/score.hpp"
#include "vtd/types.hpp"

namespace vtd {

enum class ApMode { kBox, kMask, kKeypoint };

struct ApConfig {
  // Similarity thresholds as integer percentages; 50:5:95 by default.
  std::vector<int> iou_thresholds_pct = {50, 55, 60, 65, 70, 75, 80, 85, 90, 95};
  // Detections kept per (frame, class), highest scores first.
  std::size_t max_dets = 100;
  // Recall sample points are k / recall_steps for k = 0..recall_steps.
  int recall_steps = 100;
  OksSigmas sigmas = default_oks_sigmas();
};

struct ClassAp {
  std::string category;
  std::size_t num_gt = 0;
  std::vector<double> ap;      // per threshold, in [0, 100]
  std::vector<double> recall;  // per threshold, final recall in [0, 100]
  double mean_ap = 0.0;        // mean over thresholds
};

struct ApReport {
  std::vector<double> thresholds;
  std::vector<ClassAp> classes;       // classes with ground truth, sorted by name
  std::vector<std::string> absent;    // classes seen only in predictions
  double map = 0.0;                   // mean of mean_ap over present classes
  std::vector<double> ap_at;          // mean over present classes, per threshold
};

// COCO-style AP: per class and threshold, predictions ranked by score
// (ties by frame key, then label id) greedily claim the unmatched
// ground truth of highest similarity at or above the threshold in the same
// frame; AP is the mean interpolated precision at the recall sample points.
// Throws ValidationError on unscored predictions, missing geometry, frames
// without a ground-truth counterpart, or an empty ground-truth split.
ApReport evaluate_ap(const FrameSet& preds, const FrameSet& gts, ApMode mode,
                     const ApConfig& config = {}, int workers = 1);

// evaluate_ap over every frame of a tracking split; track ids play no role.
ApReport tracking_ap(const FrameSet& preds, const FrameSet& gts, ApMode mode,
                     const ApConfig& config = {}, int workers = 1);

TaskScore to_task_score(const ApReport& report, Slot slot);

}  // namespace vtd
