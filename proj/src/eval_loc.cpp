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

#include "vtd/eval_loc.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_map>

#include "vtd/errors.hpp"
#include "vtd/parallel.hpp"

namespace vtd {

namespace {

// Detections and ground truth of one class in one frame, with their
// similarity matrix (detections x ground truth).
struct Cell {
  std::vector<const Label*> dets;
  std::vector<const Label*> gts;
  std::vector<double> sims;
};

void require_geometry(const Label& l, const Frame& f, ApMode mode, bool is_gt) {
  const char* missing = nullptr;
  if (mode == ApMode::kBox && !l.box2d) missing = "box2d";
  if (mode == ApMode::kMask && !l.rle) missing = "rle";
  if (mode == ApMode::kKeypoint && !l.graph) missing = "graph";
  if (mode == ApMode::kKeypoint && is_gt && !l.box2d) missing = "box2d (OKS area)";
  if (missing) {
    throw ValidationError(std::string(is_gt ? "ground-truth" : "predicted") + " label '" + l.id +
                          "' in frame '" + f.name + "' lacks " + missing);
  }
}

double similarity(const Label& det, const Label& gt, ApMode mode, const ApConfig& config) {
  switch (mode) {
    case ApMode::kBox:
      return box_iou(*det.box2d, *gt.box2d);
    case ApMode::kMask:
      return mask_iou(*det.rle, *gt.rle);
    case ApMode::kKeypoint:
      return oks(*det.graph, *gt.graph, gt.box2d->area(), config.sigmas);
  }
  return 0.0;
}

bool det_before(const Label* a, const std::string& key_a, const Label* b, const std::string& key_b) {
  if (*a->score != *b->score) return *a->score > *b->score;
  if (key_a != key_b) return key_a < key_b;
  return a->id < b->id;
}

// Mean interpolated precision over recall points k / steps, as a percentage.
// tp_cum[i] / fp_cum[i] are counts after the first i + 1 detections.
double interpolated_ap(const std::vector<std::size_t>& tp_cum, const std::vector<std::size_t>& fp_cum,
                       std::size_t num_gt, int steps) {
  const std::size_t n = tp_cum.size();
  std::vector<double> precision(n);
  for (std::size_t i = 0; i < n; ++i) {
    precision[i] = static_cast<double>(tp_cum[i]) / static_cast<double>(tp_cum[i] + fp_cum[i]);
  }
  for (std::size_t i = n; i-- > 1;) precision[i - 1] = std::max(precision[i - 1], precision[i]);
  double sum = 0;
  for (int k = 0; k <= steps; ++k) {
    // First detection whose recall tp / num_gt reaches k / steps, compared
    // exactly in integers.
    const auto it = std::partition_point(tp_cum.begin(), tp_cum.end(), [&](std::size_t tp) {
      return tp * static_cast<std::size_t>(steps) < static_cast<std::size_t>(k) * num_gt;
    });
    if (it != tp_cum.end()) sum += precision[static_cast<std::size_t>(it - tp_cum.begin())];
  }
  return 100.0 * sum / (steps + 1);
}

}  // namespace

ApReport evaluate_ap(const FrameSet& preds, const FrameSet& gts, ApMode mode, const ApConfig& config,
                     int workers) {
  if (gts.frames.empty()) throw ValidationError("empty split: no ground-truth frames");
  if (config.iou_thresholds_pct.empty() || config.recall_steps < 1) {
    throw ValidationError("AP configuration needs thresholds and at least one recall step");
  }
  const std::size_t num_frames = gts.frames.size();
  std::unordered_map<std::string, std::size_t> frame_of;
  std::vector<std::string> keys(num_frames);
  for (std::size_t i = 0; i < num_frames; ++i) {
    keys[i] = gts.frames[i].key();
    if (!frame_of.emplace(keys[i], i).second) {
      throw ValidationError("duplicate ground-truth frame '" + keys[i] + "'");
    }
  }

  std::set<std::string> gt_classes, pred_classes;
  for (const Frame& f : gts.frames) {
    for (const Label& l : f.labels) {
      require_geometry(l, f, mode, true);
      if (mode == ApMode::kKeypoint && l.graph->visible_count() == 0) continue;
      gt_classes.insert(l.category);
    }
  }
  std::vector<std::vector<const Label*>> frame_dets(num_frames);
  for (const Frame& f : preds.frames) {
    auto it = frame_of.find(f.key());
    if (it == frame_of.end()) {
      throw ValidationError("prediction frame '" + f.key() + "' has no ground-truth counterpart");
    }
    for (const Label& l : f.labels) {
      if (!l.score) {
        throw ValidationError("prediction '" + l.id + "' in frame '" + f.name + "' has no score");
      }
      require_geometry(l, f, mode, false);
      pred_classes.insert(l.category);
      frame_dets[it->second].push_back(&l);
    }
  }

  if (gt_classes.empty()) throw ValidationError("empty split: no ground-truth instances");
  const std::vector<std::string> classes(gt_classes.begin(), gt_classes.end());
  std::unordered_map<std::string, std::size_t> class_index;
  for (std::size_t c = 0; c < classes.size(); ++c) class_index[classes[c]] = c;

  // cells[c * num_frames + f]
  std::vector<Cell> cells(classes.size() * num_frames);
  parallel_for(num_frames, workers, [&](std::size_t f) {
    for (const Label& l : gts.frames[f].labels) {
      if (mode == ApMode::kKeypoint && l.graph->visible_count() == 0) continue;
      cells[class_index.at(l.category) * num_frames + f].gts.push_back(&l);
    }
    for (const Label* d : frame_dets[f]) {
      auto it = class_index.find(d->category);
      if (it != class_index.end()) cells[it->second * num_frames + f].dets.push_back(d);
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      Cell& cell = cells[c * num_frames + f];
      std::stable_sort(cell.dets.begin(), cell.dets.end(), [&](const Label* a, const Label* b) {
        return det_before(a, keys[f], b, keys[f]);
      });
      if (cell.dets.size() > config.max_dets) cell.dets.resize(config.max_dets);
      cell.sims.resize(cell.dets.size() * cell.gts.size());
      for (std::size_t d = 0; d < cell.dets.size(); ++d) {
        for (std::size_t g = 0; g < cell.gts.size(); ++g) {
          cell.sims[d * cell.gts.size() + g] = similarity(*cell.dets[d], *cell.gts[g], mode, config);
        }
      }
    }
  });

  // Global ranking per class: (frame, detection index within the cell).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> ranking(classes.size());
  std::vector<std::size_t> num_gt(classes.size(), 0);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& r = ranking[c];
    for (std::size_t f = 0; f < num_frames; ++f) {
      const Cell& cell = cells[c * num_frames + f];
      num_gt[c] += cell.gts.size();
      for (std::size_t d = 0; d < cell.dets.size(); ++d) r.emplace_back(f, d);
    }
    std::stable_sort(r.begin(), r.end(), [&](const auto& a, const auto& b) {
      return det_before(cells[c * num_frames + a.first].dets[a.second], keys[a.first],
                        cells[c * num_frames + b.first].dets[b.second], keys[b.first]);
    });
  }

  const std::size_t num_thr = config.iou_thresholds_pct.size();
  ApReport report;
  for (int pct : config.iou_thresholds_pct) report.thresholds.push_back(pct / 100.0);
  report.classes.resize(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    report.classes[c].category = classes[c];
    report.classes[c].num_gt = num_gt[c];
    report.classes[c].ap.assign(num_thr, 0.0);
    report.classes[c].recall.assign(num_thr, 0.0);
  }
  parallel_for(classes.size() * num_thr, workers, [&](std::size_t job) {
    const std::size_t c = job / num_thr, t = job % num_thr;
    const double threshold = report.thresholds[t];
    std::vector<std::vector<char>> taken(num_frames);
    std::vector<std::size_t> tp_cum, fp_cum;
    tp_cum.reserve(ranking[c].size());
    fp_cum.reserve(ranking[c].size());
    std::size_t tp = 0, fp = 0;
    for (const auto& [f, d] : ranking[c]) {
      const Cell& cell = cells[c * num_frames + f];
      auto& used = taken[f];
      if (used.empty()) used.assign(cell.gts.size(), 0);
      // Highest similarity wins; the lowest ground-truth index breaks ties.
      double best = -1;
      std::size_t best_g = cell.gts.size();
      for (std::size_t g = 0; g < cell.gts.size(); ++g) {
        const double s = cell.sims[d * cell.gts.size() + g];
        if (used[g] || s < threshold || s <= best) continue;
        best = s;
        best_g = g;
      }
      if (best_g < cell.gts.size()) {
        used[best_g] = 1;
        ++tp;
      } else {
        ++fp;
      }
      tp_cum.push_back(tp);
      fp_cum.push_back(fp);
    }
    report.classes[c].ap[t] = interpolated_ap(tp_cum, fp_cum, num_gt[c], config.recall_steps);
    report.classes[c].recall[t] = 100.0 * static_cast<double>(tp) / static_cast<double>(num_gt[c]);
  });

  for (const auto& name : pred_classes) {
    if (!gt_classes.count(name)) report.absent.push_back(name);
  }
  report.ap_at.assign(num_thr, 0.0);
  for (ClassAp& c : report.classes) {
    c.mean_ap = std::accumulate(c.ap.begin(), c.ap.end(), 0.0) / static_cast<double>(num_thr);
    report.map += c.mean_ap;
    for (std::size_t t = 0; t < num_thr; ++t) report.ap_at[t] += c.ap[t];
  }
  if (!report.classes.empty()) {
    const double n = static_cast<double>(report.classes.size());
    report.map /= n;
    for (double& v : report.ap_at) v /= n;
  }
  return report;
}

ApReport tracking_ap(const FrameSet& preds, const FrameSet& gts, ApMode mode, const ApConfig& config,
                     int workers) {
  for (const Frame& f : gts.frames) {
    if (!f.video_name) {
      throw ValidationError("tracking frame '" + f.name + "' has no videoName");
    }
  }
  // Frames are keyed by (videoName, name), so the whole split evaluates as
  // one flat set of frames.
  return evaluate_ap(preds, gts, mode, config, workers);
}

TaskScore to_task_score(const ApReport& report, Slot slot) {
  TaskScore s;
  s.slot = slot;
  s.value = report.map;
  for (const ClassAp& c : report.classes) s.per_class[c.category] = c.mean_ap;
  return s;
}

}  // namespace vtd
