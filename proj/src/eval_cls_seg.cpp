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

#include "vtd/eval_cls_seg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <unordered_map>

#include "vtd/errors.hpp"
#include "vtd/geometry.hpp"
#include "vtd/label_io.hpp"
#include "vtd/parallel.hpp"
#include "vtd/raster_io.hpp"
#include "vtd/rle.hpp"
#include "vtd/vocabulary.hpp"

namespace vtd {

namespace {

std::unordered_map<std::string, const Frame*> index_by_key(const FrameSet& set) {
  std::unordered_map<std::string, const Frame*> out;
  for (const Frame& f : set.frames) out.emplace(f.key(), &f);
  return out;
}

}  // namespace

TaskScore tagging_accuracy(const FrameSet& preds, const FrameSet& gts, TagAttribute attribute,
                           const TaggingOptions& options) {
  const auto pick = [attribute](const Frame& f) -> const std::optional<std::string>& {
    return attribute == TagAttribute::kWeather ? f.attributes.weather : f.attributes.scene;
  };
  const char* attr_name = attribute == TagAttribute::kWeather ? "weather" : "scene";
  const auto by_key = index_by_key(preds);
  std::size_t total = 0, correct = 0;
  for (const Frame& g : gts.frames) {
    const auto& tag = pick(g);
    if (!tag) {
      throw ValidationError("ground-truth frame '" + g.name + "' has no " + attr_name + " tag");
    }
    if (options.exclude_undefined_gt && *tag == "undefined") continue;
    ++total;
    auto it = by_key.find(g.key());
    if (it != by_key.end() && pick(*it->second) == tag) ++correct;
  }
  if (total == 0) throw ValidationError(std::string("empty split: no frames to score for ") + attr_name);
  TaskScore s;
  s.slot = attribute == TagAttribute::kWeather ? Slot::kAccGw : Slot::kAccGs;
  s.value = 100.0 * static_cast<double>(correct) / static_cast<double>(total);
  return s;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) {
  if (n_ != other.n_) throw ValidationError("cannot merge confusion matrices of different sizes");
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
  for (std::size_t i = 0; i < missed_.size(); ++i) missed_[i] += other.missed_[i];
  return *this;
}

ConfusionMatrix accumulate_confusion(const SemanticMap& pred, const SemanticMap& gt, int n_classes,
                                     const ConfusionOptions& options) {
  if (pred.height != gt.height || pred.width != gt.width) {
    throw ValidationError("semantic map shape mismatch: prediction " + std::to_string(pred.height) +
                          "x" + std::to_string(pred.width) + " vs ground truth " +
                          std::to_string(gt.height) + "x" + std::to_string(gt.width));
  }
  ConfusionMatrix cm(n_classes);
  for (std::size_t i = 0; i < gt.classes.size(); ++i) {
    const int g = gt.classes[i];
    if (g == kIgnoreIndex) continue;
    if (g >= n_classes) {
      throw ValidationError("ground-truth class index " + std::to_string(g) + " >= " +
                            std::to_string(n_classes));
    }
    const int p = pred.classes[i];
    if (p == kIgnoreIndex && options.allow_unlabeled_pred) {
      ++cm.missed(g);
      continue;
    }
    if (p >= n_classes) {
      throw ValidationError("predicted class index " + std::to_string(p) + " >= " +
                            std::to_string(n_classes));
    }
    ++cm(g, p);
  }
  return cm;
}

TaskScore miou(const ConfusionMatrix& cm, std::span<const int> scored_classes, Slot slot,
               std::span<const std::string> class_names) {
  const int n = cm.size();
  TaskScore out;
  out.slot = slot;
  double sum = 0;
  int present = 0;
  for (int c : scored_classes) {
    if (c < 0 || c >= n) throw ValidationError("scored class index out of range");
    std::uint64_t row = cm.missed(c), col = 0;
    for (int k = 0; k < n; ++k) {
      row += cm(c, k);
      col += cm(k, c);
    }
    const std::uint64_t tp = cm(c, c);
    const std::uint64_t denom = row + col - tp;
    if (denom == 0) continue;
    const double iou = 100.0 * static_cast<double>(tp) / static_cast<double>(denom);
    sum += iou;
    ++present;
    const std::string name = static_cast<std::size_t>(c) < class_names.size()
                                 ? class_names[c]
                                 : std::to_string(c);
    out.per_class[name] = iou;
  }
  if (present == 0) throw ValidationError("empty metric: no scored class is present");
  out.value = sum / present;
  return out;
}

SemanticMap frame_semantic_map(const Frame& frame, std::span<const std::string_view> classes,
                               std::uint8_t fill) {
  if (frame.label_path) {
    SemanticMap map = read_pgm(as_bytes(read_file(*frame.label_path)));
    if (frame.height && frame.width && (*frame.height != map.height || *frame.width != map.width)) {
      throw ValidationError("label map of frame '" + frame.name + "' does not match frame size");
    }
    return map;
  }
  int h = frame.height.value_or(0), w = frame.width.value_or(0);
  for (const Label& l : frame.labels) {
    if (!l.rle) continue;
    if (h == 0 && w == 0) {
      h = l.rle->height;
      w = l.rle->width;
    }
    if (l.rle->height != h || l.rle->width != w) {
      throw ValidationError("frame '" + frame.name + "' mixes mask sizes");
    }
  }
  SemanticMap map(h, w, fill);
  for (const Label& l : frame.labels) {
    if (!l.rle) continue;
    std::optional<int> cls;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i] == l.category) cls = static_cast<int>(i);
    }
    if (!cls && classes.size() == vocab::kSemanticClasses.size()) cls = vocab::semantic_class(l.category);
    if (!cls) {
      throw ValidationError("frame '" + frame.name + "': unknown class '" + l.category + "'");
    }
    const Raster r = rle_decode(*l.rle);
    for (int row = 0; row < h; ++row) {
      for (int col = 0; col < w; ++col) {
        if (r.at(row, col)) map.classes[static_cast<std::size_t>(row) * w + col] = static_cast<std::uint8_t>(*cls);
      }
    }
  }
  return map;
}

namespace {

struct DenseTask {
  std::span<const std::string_view> classes;
  std::uint8_t gt_fill;
  std::uint8_t pred_fill;
  bool allow_unlabeled_pred;
  std::vector<int> scored;
  Slot slot;
};

TaskScore dense_miou(const FrameSet& preds, const FrameSet& gts, const DenseTask& task, int workers) {
  if (gts.frames.empty()) throw ValidationError("empty split: no ground-truth frames");
  const auto by_key = index_by_key(preds);
  const int n = static_cast<int>(task.classes.size());
  std::vector<ConfusionMatrix> parts(gts.frames.size());
  parallel_for(gts.frames.size(), workers, [&](std::size_t i) {
    const Frame& g = gts.frames[i];
    const SemanticMap gt_map = frame_semantic_map(g, task.classes, task.gt_fill);
    SemanticMap pred_map;
    if (auto it = by_key.find(g.key()); it != by_key.end()) {
      pred_map = frame_semantic_map(*it->second, task.classes, task.pred_fill);
      if (pred_map.height == 0 && pred_map.width == 0) pred_map = SemanticMap(gt_map.height, gt_map.width, task.pred_fill);
    } else {
      pred_map = SemanticMap(gt_map.height, gt_map.width, task.pred_fill);
    }
    parts[i] = accumulate_confusion(pred_map, gt_map, n, {task.allow_unlabeled_pred});
  });
  ConfusionMatrix total(n);
  for (const auto& p : parts) total += p;
  std::vector<std::string> names(task.classes.begin(), task.classes.end());
  return miou(total, task.scored, task.slot, names);
}

}  // namespace

TaskScore semantic_miou(const FrameSet& preds, const FrameSet& gts, int workers) {
  DenseTask task{vocab::kSemanticClasses, kIgnoreIndex, kIgnoreIndex, true, {}, Slot::kIouS};
  for (int c = 0; c < static_cast<int>(vocab::kSemanticClasses.size()); ++c) task.scored.push_back(c);
  return dense_miou(preds, gts, task, workers);
}

TaskScore drivable_miou(const FrameSet& preds, const FrameSet& gts, int workers) {
  DenseTask task{vocab::kDrivableClasses, 2, 2, false, {0, 1}, Slot::kIouA};
  return dense_miou(preds, gts, task, workers);
}

namespace {

constexpr int kLaneAxes = 3;
constexpr std::array<std::string_view, kLaneAxes> kAxisNames = {"category", "direction", "style"};

int lane_class(const Label& l, int axis) {
  std::optional<int> idx;
  switch (axis) {
    case 0: idx = vocab::index_of(vocab::kLaneCategories, l.category); break;
    case 1: idx = vocab::index_of(vocab::kLaneDirections, l.lane.direction); break;
    default: idx = vocab::index_of(vocab::kLaneStyles, l.lane.style); break;
  }
  if (!idx) {
    throw ValidationError("lane label '" + l.id + "' has no valid " + std::string(kAxisNames[axis]) +
                          " value");
  }
  return *idx;
}

std::size_t axis_size(int axis) {
  return axis == 0 ? vocab::kLaneCategories.size()
                   : axis == 1 ? vocab::kLaneDirections.size() : vocab::kLaneStyles.size();
}

std::string_view axis_class_name(int axis, std::size_t c) {
  return axis == 0 ? vocab::kLaneCategories[c]
                   : axis == 1 ? vocab::kLaneDirections[c] : vocab::kLaneStyles[c];
}

struct LaneCounts {
  // [axis][class] -> (intersection, union)
  std::array<std::vector<std::pair<std::uint64_t, std::uint64_t>>, kLaneAxes> counts;
  LaneCounts() {
    for (int a = 0; a < kLaneAxes; ++a) counts[a].assign(axis_size(a), {0, 0});
  }
};

LaneCounts lane_frame_counts(const Frame& gt, const Frame* pred, const LaneOptions& opt) {
  LaneCounts out;
  const int h = gt.height.value_or(opt.default_height);
  const int w = gt.width.value_or(opt.default_width);
  const RasterizeOptions raster_opt{opt.bezier};
  for (int axis = 0; axis < kLaneAxes; ++axis) {
    std::map<int, std::vector<const Label*>> gt_by_class, pred_by_class;
    for (const Label& l : gt.labels) {
      if (!l.poly2d.empty()) gt_by_class[lane_class(l, axis)].push_back(&l);
    }
    if (pred) {
      for (const Label& l : pred->labels) {
        if (!l.poly2d.empty()) pred_by_class[lane_class(l, axis)].push_back(&l);
      }
    }
    for (std::size_t c = 0; c < axis_size(axis); ++c) {
      const int cls = static_cast<int>(c);
      const bool has_gt = gt_by_class.count(cls) > 0, has_pred = pred_by_class.count(cls) > 0;
      if (!has_gt && !has_pred) continue;
      Raster gt_raster(h, w), pred_raster(h, w);
      if (has_gt) {
        for (const Label* l : gt_by_class[cls]) rasterize_into(gt_raster, l->poly2d, opt.thickness, raster_opt);
        gt_raster = dilate(gt_raster, opt.dilation_radius);
      }
      if (has_pred) {
        for (const Label* l : pred_by_class[cls]) rasterize_into(pred_raster, l->poly2d, opt.thickness, raster_opt);
      }
      std::uint64_t inter = 0, uni = 0;
      for (std::size_t i = 0; i < gt_raster.size(); ++i) {
        inter += gt_raster.data[i] & pred_raster.data[i];
        uni += gt_raster.data[i] | pred_raster.data[i];
      }
      out.counts[axis][c].first += inter;
      out.counts[axis][c].second += uni;
    }
  }
  return out;
}

}  // namespace

TaskScore lane_boundary_iou(const FrameSet& preds, const FrameSet& gts, const LaneOptions& options,
                            int workers) {
  if (gts.frames.empty()) throw ValidationError("empty split: no ground-truth lane frames");
  if (options.dilation_radius < 0) throw ValidationError("dilation radius must be non-negative");
  std::vector<const Frame*> order;
  for (const Frame& f : gts.frames) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(), [](const Frame* a, const Frame* b) { return a->name < b->name; });
  if (options.subsample > 0 && order.size() > options.subsample) order.resize(options.subsample);

  const auto by_key = index_by_key(preds);
  std::vector<LaneCounts> parts(order.size());
  parallel_for(order.size(), workers, [&](std::size_t i) {
    auto it = by_key.find(order[i]->key());
    parts[i] = lane_frame_counts(*order[i], it == by_key.end() ? nullptr : it->second, options);
  });
  LaneCounts total;
  for (const auto& p : parts) {
    for (int a = 0; a < kLaneAxes; ++a) {
      for (std::size_t c = 0; c < total.counts[a].size(); ++c) {
        total.counts[a][c].first += p.counts[a][c].first;
        total.counts[a][c].second += p.counts[a][c].second;
      }
    }
  }
  TaskScore out;
  out.slot = Slot::kIouL;
  double axis_sum = 0;
  int axes_present = 0;
  for (int a = 0; a < kLaneAxes; ++a) {
    double sum = 0;
    int present = 0;
    for (std::size_t c = 0; c < total.counts[a].size(); ++c) {
      const auto [inter, uni] = total.counts[a][c];
      if (uni == 0) continue;
      const double iou = 100.0 * static_cast<double>(inter) / static_cast<double>(uni);
      out.per_class[std::string(kAxisNames[a]) + "/" + std::string(axis_class_name(a, c))] = iou;
      sum += iou;
      ++present;
    }
    if (present == 0) continue;
    axis_sum += sum / present;
    ++axes_present;
  }
  if (axes_present == 0) throw ValidationError("empty metric: no lane class present in the split");
  out.value = axis_sum / axes_present;
  return out;
}

}  // namespace vtd
