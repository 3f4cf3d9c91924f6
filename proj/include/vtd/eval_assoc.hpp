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
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "vtd/score.hpp"
#include "vtd/types.hpp"

namespace vtd {

enum class AssocMode { kBox, kMask };

using TrackGeometry = std::variant<Box2D, RleMask>;

struct Track {
  std::string category;
  std::map<std::int64_t, TrackGeometry> frames;  // frameIndex -> geometry
};

struct VideoTracks {
  std::map<std::string, Track> tracks;  // track id -> track
};

struct TrackSet {
  std::map<std::string, VideoTracks> videos;
};

// Groups a tracking split into tracks. Frames without frameIndex take their
// position within the video. Throws ValidationError on a missing videoName,
// a repeated (track id, frameIndex), a track that changes category, or a
// label lacking the mode's geometry.
TrackSet build_track_set(const FrameSet& frames, AssocMode mode);

struct AssaConfig {
  // Localization thresholds as integer percentages; 5:5:95 by default.
  std::vector<int> alphas_pct = {5,  10, 15, 20, 25, 30, 35, 40, 45, 50,
                                 55, 60, 65, 70, 75, 80, 85, 90, 95};
};

// HOTA association accuracy. Per category and threshold alpha, each frame
// matches ground truth (rows, by track id) to predictions (cols, by track
// id) over pairs with similarity >= alpha, maximizing the number of pairs
// and then minimizing sum(1 - S). Every matched pair c contributes
// A(c) = TPA / (TPA + FNA + FPA); the alpha score is the mean of A over all
// matches, the category score the mean over alphas, and the result (x100)
// the mean over categories with at least one ground-truth track.
// Throws ValidationError when a prediction video has no ground truth or
// the ground truth has no tracks.
TaskScore assa(const TrackSet& preds, const TrackSet& gts, AssocMode mode,
               const AssaConfig& config = {}, int workers = 1);

// Synthesizes the frame t-1 mask from the frame t mask: out(p) = mask_t(p + V(p))
// with nearest sampling (round half away from zero); samples that fall
// outside the raster read background.
Raster warp_mask(const Raster& mask_t, const FlowField& flow);

// IoU of each instance present in both frames (paired by track id, sorted
// by id) between the warped frame-t mask and the frame t-1 mask.
std::vector<double> flow_pair_ious(const FlowField& flow,
                                   const std::map<std::string, RleMask>& masks_t,
                                   const std::map<std::string, RleMask>& masks_prev);

// 100 * mean of flow_pair_ious for one frame pair. Throws ValidationError
// when no instance is paired or the flow size differs from the masks.
TaskScore flow_proxy_iou(const FlowField& flow, const std::map<std::string, RleMask>& masks_t,
                         const std::map<std::string, RleMask>& masks_prev);

// Split-level flow score. Each prediction frame t references a ".flo"
// file (flowPath) mapping frame t onto frame t-1 of the same video; the
// ground truth supplies MOTS masks for both frames. Score is 100 * mean
// over every paired instance of the split.
TaskScore flow_proxy_split(const FrameSet& preds, const FrameSet& gts, int workers = 1);

}  // namespace vtd
