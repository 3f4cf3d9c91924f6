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

#include "vtd/eval_assoc.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

#include "vtd/assignment.hpp"
#include "vtd/errors.hpp"
#include "vtd/geometry.hpp"
#include "vtd/parallel.hpp"
#include "vtd/raster_io.hpp"
#include "vtd/rle.hpp"

namespace vtd {

TrackSet build_track_set(const FrameSet& frames, AssocMode mode) {
  TrackSet out;
  std::map<std::string, std::int64_t> next_position;
  for (const Frame& f : frames.frames) {
    if (!f.video_name) throw ValidationError("tracking frame '" + f.name + "' has no videoName");
    const std::string& video = *f.video_name;
    std::int64_t& pos = next_position[video];
    const std::int64_t index = f.frame_index.value_or(pos);
    pos = index + 1;
    VideoTracks& vt = out.videos[video];
    for (const Label& l : f.labels) {
      TrackGeometry geom;
      if (mode == AssocMode::kBox) {
        if (!l.box2d) throw ValidationError("label '" + l.id + "' in frame '" + f.name + "' lacks box2d");
        geom = *l.box2d;
      } else {
        if (!l.rle) throw ValidationError("label '" + l.id + "' in frame '" + f.name + "' lacks rle");
        geom = *l.rle;
      }
      auto [it, created] = vt.tracks.try_emplace(l.id);
      Track& track = it->second;
      if (created) {
        track.category = l.category;
      } else if (track.category != l.category) {
        throw ValidationError("track '" + l.id + "' in video '" + video + "' changes category from '" +
                              track.category + "' to '" + l.category + "'");
      }
      if (!track.frames.emplace(index, std::move(geom)).second) {
        throw ValidationError("track '" + l.id + "' appears twice at frameIndex " +
                              std::to_string(index) + " in video '" + video + "'");
      }
    }
  }
  return out;
}

namespace {

double geometry_similarity(const TrackGeometry& a, const TrackGeometry& b) {
  if (const auto* ba = std::get_if<Box2D>(&a)) return box_iou(*ba, std::get<Box2D>(b));
  return mask_iou(std::get<RleMask>(a), std::get<RleMask>(b));
}

// One frame of one video for a single category.
struct FrameCell {
  std::vector<std::size_t> gts;    // indices into the category's gt track list
  std::vector<std::size_t> preds;  // indices into the category's pred track list
  std::vector<double> sims;        // gts x preds
};

struct CategoryData {
  std::string name;
  std::vector<std::size_t> gt_len;    // frames per gt track
  std::vector<std::size_t> pred_len;  // frames per pred track
  std::vector<FrameCell> cells;
};

CategoryData collect_category(const std::string& category, const TrackSet& preds, const TrackSet& gts) {
  CategoryData data;
  data.name = category;
  for (const auto& [video, gt_video] : gts.videos) {
    std::vector<const Track*> gt_tracks, pred_tracks;
    std::size_t gt_base = data.gt_len.size(), pred_base = data.pred_len.size();
    std::set<std::int64_t> frames;
    for (const auto& [id, t] : gt_video.tracks) {
      if (t.category != category) continue;
      gt_tracks.push_back(&t);
      data.gt_len.push_back(t.frames.size());
      for (const auto& [fi, g] : t.frames) frames.insert(fi);
    }
    if (auto it = preds.videos.find(video); it != preds.videos.end()) {
      for (const auto& [id, t] : it->second.tracks) {
        if (t.category != category) continue;
        pred_tracks.push_back(&t);
        data.pred_len.push_back(t.frames.size());
        for (const auto& [fi, g] : t.frames) frames.insert(fi);
      }
    }
    for (std::int64_t fi : frames) {
      FrameCell cell;
      std::vector<const TrackGeometry*> gg, pg;
      for (std::size_t k = 0; k < gt_tracks.size(); ++k) {
        if (auto it = gt_tracks[k]->frames.find(fi); it != gt_tracks[k]->frames.end()) {
          cell.gts.push_back(gt_base + k);
          gg.push_back(&it->second);
        }
      }
      for (std::size_t k = 0; k < pred_tracks.size(); ++k) {
        if (auto it = pred_tracks[k]->frames.find(fi); it != pred_tracks[k]->frames.end()) {
          cell.preds.push_back(pred_base + k);
          pg.push_back(&it->second);
        }
      }
      if (cell.gts.empty() || cell.preds.empty()) continue;
      cell.sims.resize(gg.size() * pg.size());
      for (std::size_t r = 0; r < gg.size(); ++r) {
        for (std::size_t c = 0; c < pg.size(); ++c) cell.sims[r * pg.size() + c] = geometry_similarity(*gg[r], *pg[c]);
      }
      data.cells.push_back(std::move(cell));
    }
  }
  return data;
}

// Mean of A(c) over all matches at one threshold.
double association_at(const CategoryData& data, double alpha) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> matches;  // (gt, pred) -> TPA
  for (const FrameCell& cell : data.cells) {
    const std::size_t rows = cell.gts.size(), cols = cell.preds.size();
    // Each row also owns a private "unmatched" column priced above any set
    // of eligible pairs, so the solver maximizes the number of eligible
    // pairs first and ranks leaving a row unmatched after every real column.
    const double unmatched = static_cast<double>(std::min(rows, cols)) + 2.0;
    const double forbidden = unmatched + 1.0;
    CostMatrix costs(rows, cols + rows, forbidden);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const double s = cell.sims[r * cols + c];
        if (s >= alpha) costs(r, c) = 1.0 - s;
      }
      costs(r, cols + r) = unmatched;
    }
    for (const auto& [r, c] : solve_assignment(costs).pairs) {
      if (c < cols && cell.sims[r * cols + c] >= alpha) ++matches[{cell.gts[r], cell.preds[c]}];
    }
  }
  double sum = 0;
  std::size_t total = 0;
  for (const auto& [pair, tpa] : matches) {
    const double denom = static_cast<double>(data.gt_len[pair.first] + data.pred_len[pair.second] - tpa);
    sum += static_cast<double>(tpa) * (static_cast<double>(tpa) / denom);
    total += tpa;
  }
  return total ? sum / static_cast<double>(total) : 0.0;
}

}  // namespace

TaskScore assa(const TrackSet& preds, const TrackSet& gts, AssocMode mode, const AssaConfig& config,
               int workers) {
  for (const auto& [video, vt] : preds.videos) {
    if (!gts.videos.count(video)) {
      throw ValidationError("prediction video '" + video + "' is absent from the ground truth");
    }
  }
  if (config.alphas_pct.empty()) throw ValidationError("AssA needs at least one threshold");
  std::set<std::string> categories;
  for (const auto& [video, vt] : gts.videos) {
    for (const auto& [id, t] : vt.tracks) categories.insert(t.category);
  }
  if (categories.empty()) throw ValidationError("empty split: no ground-truth tracks");
  const std::vector<std::string> names(categories.begin(), categories.end());

  std::vector<CategoryData> data(names.size());
  parallel_for(names.size(), workers, [&](std::size_t c) { data[c] = collect_category(names[c], preds, gts); });

  const std::size_t num_alpha = config.alphas_pct.size();
  std::vector<double> per_job(names.size() * num_alpha);
  parallel_for(per_job.size(), workers, [&](std::size_t job) {
    per_job[job] = association_at(data[job / num_alpha], config.alphas_pct[job % num_alpha] / 100.0);
  });

  TaskScore out;
  out.slot = mode == AssocMode::kBox ? Slot::kAssaT : Slot::kAssaR;
  double total = 0;
  for (std::size_t c = 0; c < names.size(); ++c) {
    double sum = 0;
    for (std::size_t a = 0; a < num_alpha; ++a) sum += per_job[c * num_alpha + a];
    const double value = 100.0 * sum / static_cast<double>(num_alpha);
    out.per_class[names[c]] = value;
    total += value;
  }
  out.value = total / static_cast<double>(names.size());
  return out;
}

Raster warp_mask(const Raster& mask_t, const FlowField& flow) {
  if (flow.height != mask_t.height || flow.width != mask_t.width) {
    throw ValidationError("flow size " + std::to_string(flow.height) + "x" + std::to_string(flow.width) +
                          " does not match mask size " + std::to_string(mask_t.height) + "x" +
                          std::to_string(mask_t.width));
  }
  Raster out(mask_t.height, mask_t.width);
  for (int row = 0; row < mask_t.height; ++row) {
    for (int col = 0; col < mask_t.width; ++col) {
      // std::round rounds halves away from zero.
      const double x = std::round(static_cast<double>(col) + flow.u(row, col));
      const double y = std::round(static_cast<double>(row) + flow.v(row, col));
      if (x < 0 || y < 0 || x >= mask_t.width || y >= mask_t.height) continue;
      out.at(row, col) = mask_t.at(static_cast<int>(y), static_cast<int>(x));
    }
  }
  return out;
}

std::vector<double> flow_pair_ious(const FlowField& flow, const std::map<std::string, RleMask>& masks_t,
                                   const std::map<std::string, RleMask>& masks_prev) {
  std::vector<double> out;
  for (const auto& [id, mask_t] : masks_t) {
    auto it = masks_prev.find(id);
    if (it == masks_prev.end()) continue;
    const RleMask warped = rle_encode(warp_mask(rle_decode(mask_t), flow));
    out.push_back(mask_iou(warped, it->second));
  }
  return out;
}

TaskScore flow_proxy_iou(const FlowField& flow, const std::map<std::string, RleMask>& masks_t,
                         const std::map<std::string, RleMask>& masks_prev) {
  const std::vector<double> ious = flow_pair_ious(flow, masks_t, masks_prev);
  if (ious.empty()) throw ValidationError("empty metric: no instance is present in both frames");
  TaskScore s;
  s.slot = Slot::kIouF;
  double sum = 0;
  for (double v : ious) sum += v;
  s.value = 100.0 * sum / static_cast<double>(ious.size());
  return s;
}

namespace {

std::map<std::string, RleMask> frame_masks(const Frame& f) {
  std::map<std::string, RleMask> out;
  for (const Label& l : f.labels) {
    if (!l.rle) throw ValidationError("label '" + l.id + "' in frame '" + f.name + "' lacks rle");
    out.emplace(l.id, *l.rle);
  }
  return out;
}

}  // namespace

TaskScore flow_proxy_split(const FrameSet& preds, const FrameSet& gts, int workers) {
  std::map<std::pair<std::string, std::int64_t>, const Frame*> gt_frames;
  for (const Frame& f : gts.frames) {
    if (!f.video_name || !f.frame_index) {
      throw ValidationError("ground-truth frame '" + f.name + "' needs videoName and frameIndex");
    }
    gt_frames[{*f.video_name, *f.frame_index}] = &f;
  }
  if (gt_frames.empty()) throw ValidationError("empty split: no ground-truth frames");
  std::vector<const Frame*> jobs;
  for (const Frame& f : preds.frames) {
    if (!f.flow_path) continue;
    if (!f.video_name || !f.frame_index) {
      throw ValidationError("flow prediction frame '" + f.name + "' needs videoName and frameIndex");
    }
    jobs.push_back(&f);
  }
  std::vector<std::vector<double>> parts(jobs.size());
  parallel_for(jobs.size(), workers, [&](std::size_t i) {
    const Frame& p = *jobs[i];
    auto cur = gt_frames.find({*p.video_name, *p.frame_index});
    auto prev = gt_frames.find({*p.video_name, *p.frame_index - 1});
    if (cur == gt_frames.end() || prev == gt_frames.end()) return;
    const FlowField flow = load_flo(*p.flow_path);
    parts[i] = flow_pair_ious(flow, frame_masks(*cur->second), frame_masks(*prev->second));
  });
  TaskScore s;
  s.slot = Slot::kIouF;
  double sum = 0;
  std::size_t n = 0;
  for (const auto& part : parts) {
    for (double v : part) {
      sum += v;
      ++n;
    }
  }
  if (n == 0) throw ValidationError("empty metric: no instance is paired across any flow frame pair");
  s.value = 100.0 * sum / static_cast<double>(n);
  return s;
}

}  // namespace vtd
