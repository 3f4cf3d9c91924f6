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

// Brute-force reference implementations and random fixture generators used
// by the unit and acceptance tests. Nothing here calls into the code it
// checks except for plain data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vtd/assignment.hpp"
#include "vtd/types.hpp"

namespace vtd::oracle {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {  // inclusive
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline double uniform_real(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline bool coin(Rng& rng, double p) { return uniform_real(rng) < p; }

// ------------------------------------------------------------------ masks

inline Raster decode_runs(const RleMask& m) {
  Raster out(m.height, m.width);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m.runs.size(); ++i) {
    for (std::uint32_t k = 0; k < m.runs[i]; ++k, ++pos) {
      const int col = static_cast<int>(pos / static_cast<std::size_t>(m.height));
      const int row = static_cast<int>(pos % static_cast<std::size_t>(m.height));
      out.at(row, col) = static_cast<std::uint8_t>(i % 2);
    }
  }
  return out;
}

inline RleMask encode_runs(const Raster& r) {
  RleMask m{r.height, r.width, {}};
  std::uint8_t cur = 0;
  std::uint32_t len = 0;
  for (int col = 0; col < r.width; ++col) {
    for (int row = 0; row < r.height; ++row) {
      const std::uint8_t v = r.at(row, col) ? 1 : 0;
      if (v != cur) {
        m.runs.push_back(len);
        cur = v;
        len = 0;
      }
      ++len;
    }
  }
  m.runs.push_back(len);
  return m;
}

inline double dense_iou(const Raster& a, const Raster& b) {
  std::uint64_t inter = 0, uni = 0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    inter += (a.data[i] && b.data[i]) ? 1 : 0;
    uni += (a.data[i] || b.data[i]) ? 1 : 0;
  }
  return uni ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

inline Raster random_raster(Rng& rng, int h, int w, double density) {
  Raster r(h, w);
  for (auto& px : r.data) px = coin(rng, density) ? 1 : 0;
  return r;
}

// Mixture of blobs and noise, so runs vary in length.
inline Raster random_blobby_raster(Rng& rng, int h, int w) {
  Raster r(h, w);
  const int blobs = uniform_int(rng, 0, 3);
  for (int b = 0; b < blobs; ++b) {
    const int r0 = uniform_int(rng, 0, h - 1), c0 = uniform_int(rng, 0, w - 1);
    const int r1 = uniform_int(rng, r0, h - 1), c1 = uniform_int(rng, c0, w - 1);
    for (int y = r0; y <= r1; ++y) {
      for (int x = c0; x <= c1; ++x) r.at(y, x) = 1;
    }
  }
  const double noise = uniform_real(rng) * 0.2;
  for (auto& px : r.data) {
    if (coin(rng, noise)) px ^= 1;
  }
  return r;
}

// ------------------------------------------------------------- similarity

inline double box_iou_ref(const Box2D& a, const Box2D& b) {
  const double ix = std::max(0.0, std::min(a.x2, b.x2) - std::max(a.x1, b.x1));
  const double iy = std::max(0.0, std::min(a.y2, b.y2) - std::max(a.y1, b.y1));
  const double inter = ix * iy;
  const double uni = (a.x2 - a.x1) * (a.y2 - a.y1) + (b.x2 - b.x1) * (b.y2 - b.y1) - inter;
  return uni > 0 ? inter / uni : 0.0;
}

inline double oks_ref(const Keypoints& pred, const Keypoints& gt, double area, double sigma) {
  double total = 0;
  int n = 0;
  for (int i = 0; i < kNumJoints; ++i) {
    if (!(gt.joints[i].score > 0)) continue;
    const double dx = pred.joints[i].x - gt.joints[i].x;
    const double dy = pred.joints[i].y - gt.joints[i].y;
    const double k = 2.0 * sigma;
    total += std::exp(-(dx * dx + dy * dy) / (2.0 * area * k * k));
    ++n;
  }
  return total / n;
}

// ------------------------------------------------------------- assignment

// Enumerates every assignment of maximal cardinality; returns the cheapest,
// the lexicographically smallest row -> col vector among ties (unmatched
// rows rank after every column).
inline Matching exhaustive_assignment(const CostMatrix& costs, double tol = 0.0) {
  const std::size_t rows = costs.rows(), cols = costs.cols();
  const std::size_t none = cols;
  const std::size_t want = std::min(rows, cols);
  std::vector<std::size_t> cur(rows, none), best;
  double best_cost = 0;
  std::vector<char> used(cols, 0);
  // Depth-first in lexicographic order, so the first optimum found within
  // tolerance of the final optimum is the lexicographically smallest.
  std::vector<std::pair<std::vector<std::size_t>, double>> all;
  auto rec = [&](auto&& self, std::size_t r, std::size_t matched, double cost) -> void {
    if (r == rows) {
      if (matched == want) all.emplace_back(cur, cost);
      return;
    }
    if (matched + (rows - r) < want) return;
    for (std::size_t c = 0; c <= cols; ++c) {
      if (c < cols) {
        if (used[c]) continue;
        used[c] = 1;
        cur[r] = c;
        self(self, r + 1, matched + 1, cost + costs(r, c));
        used[c] = 0;
      } else {
        cur[r] = none;
        self(self, r + 1, matched, cost);
      }
    }
  };
  rec(rec, 0, 0, 0.0);
  best_cost = all.front().second;
  for (const auto& [a, c] : all) best_cost = std::min(best_cost, c);
  for (const auto& [a, c] : all) {
    if (c <= best_cost + tol) {
      best = a;
      break;
    }
  }
  Matching m;
  std::vector<char> col_used(cols, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (best[r] == none) {
      m.unmatched_rows.push_back(r);
    } else {
      m.pairs.emplace_back(r, best[r]);
      col_used[best[r]] = 1;
    }
  }
  for (std::size_t c = 0; c < cols; ++c) {
    if (!col_used[c]) m.unmatched_cols.push_back(c);
  }
  return m;
}

inline double matching_cost(const CostMatrix& costs, const Matching& m) {
  double total = 0;
  for (const auto& [r, c] : m.pairs) total += costs(r, c);
  return total;
}

// --------------------------------------------------------------------- AP

enum class SimKind { kBox, kMask, kKeypoint };

struct BruteAp {
  std::map<std::string, std::vector<double>> ap;  // class -> per threshold
  std::map<std::string, double> mean_ap;
  double map = 0;
};

inline double label_similarity(const Label& d, const Label& g, SimKind kind, double sigma) {
  switch (kind) {
    case SimKind::kBox:
      return box_iou_ref(*d.box2d, *g.box2d);
    case SimKind::kMask:
      return dense_iou(decode_runs(*d.rle), decode_runs(*g.rle));
    case SimKind::kKeypoint:
      return oks_ref(*d.graph, *g.graph, (g.box2d->x2 - g.box2d->x1) * (g.box2d->y2 - g.box2d->y1), sigma);
  }
  return 0;
}

// Walks the ranked detections of each class, builds the full precision /
// recall curve and reads interpolated precision at each recall point as
// the maximum precision over all curve points with recall >= r.
inline BruteAp brute_force_ap(const FrameSet& preds, const FrameSet& gts, SimKind kind,
                              const std::vector<int>& thresholds_pct, std::size_t max_dets = 100,
                              double sigma = 0.072) {
  struct Det {
    const Label* label;
    std::string frame;
  };
  std::map<std::string, const Frame*> gt_by_key;
  for (const Frame& f : gts.frames) gt_by_key[f.key()] = &f;
  auto counts_as_gt = [&](const Label& l) { return kind != SimKind::kKeypoint || l.graph->visible_count() > 0; };
  std::set<std::string> classes;
  for (const Frame& f : gts.frames) {
    for (const Label& l : f.labels) {
      if (counts_as_gt(l)) classes.insert(l.category);
    }
  }
  BruteAp out;
  for (const std::string& cls : classes) {
    std::vector<Det> dets;
    for (const Frame& f : preds.frames) {
      std::vector<Det> mine;
      for (const Label& l : f.labels) {
        if (l.category == cls) mine.push_back({&l, f.key()});
      }
      std::sort(mine.begin(), mine.end(), [](const Det& a, const Det& b) {
        return *a.label->score != *b.label->score ? *a.label->score > *b.label->score : a.label->id < b.label->id;
      });
      if (mine.size() > max_dets) mine.resize(max_dets);
      dets.insert(dets.end(), mine.begin(), mine.end());
    }
    std::sort(dets.begin(), dets.end(), [](const Det& a, const Det& b) {
      if (*a.label->score != *b.label->score) return *a.label->score > *b.label->score;
      if (a.frame != b.frame) return a.frame < b.frame;
      return a.label->id < b.label->id;
    });
    std::size_t num_gt = 0;
    for (const Frame& f : gts.frames) {
      for (const Label& l : f.labels) num_gt += (l.category == cls && counts_as_gt(l)) ? 1 : 0;
    }
    std::vector<double> per_thr;
    for (int pct : thresholds_pct) {
      const double thr = pct / 100.0;
      std::map<std::string, std::vector<char>> taken;
      std::vector<std::size_t> tps, fps;
      std::size_t tp = 0, fp = 0;
      for (const Det& d : dets) {
        const Frame* g = gt_by_key.at(d.frame);
        std::vector<const Label*> cands;
        for (const Label& l : g->labels) {
          if (l.category == cls && counts_as_gt(l)) cands.push_back(&l);
        }
        auto& used = taken[d.frame];
        used.resize(cands.size(), 0);
        int best = -1;
        double best_sim = 0;
        for (std::size_t k = 0; k < cands.size(); ++k) {
          if (used[k]) continue;
          const double s = label_similarity(*d.label, *cands[k], kind, sigma);
          if (s < thr) continue;
          if (best < 0 || s > best_sim) {
            best = static_cast<int>(k);
            best_sim = s;
          }
        }
        if (best >= 0) {
          used[static_cast<std::size_t>(best)] = 1;
          ++tp;
        } else {
          ++fp;
        }
        tps.push_back(tp);
        fps.push_back(fp);
      }
      double sum = 0;
      for (int k = 0; k <= 100; ++k) {
        double p_max = 0;
        for (std::size_t i = 0; i < tps.size(); ++i) {
          if (tps[i] * 100 >= static_cast<std::size_t>(k) * num_gt) {
            p_max = std::max(p_max, static_cast<double>(tps[i]) / static_cast<double>(tps[i] + fps[i]));
          }
        }
        sum += p_max;
      }
      per_thr.push_back(100.0 * sum / 101);
    }
    double m = 0;
    for (double v : per_thr) m += v;
    m /= static_cast<double>(per_thr.size());
    out.ap[cls] = per_thr;
    out.mean_ap[cls] = m;
  }
  for (const auto& [cls, m] : out.mean_ap) out.map += m;
  out.map /= static_cast<double>(out.mean_ap.size());
  return out;
}

// ------------------------------------------------------------------- AssA

// Applies the association definition frame by frame: per frame the
// maximal set of eligible (S >= alpha) pairs with the least total 1 - S,
// found by enumeration; then TPA / FNA / FPA counted for every matched
// pair over the frames where its tracks exist.
inline double brute_force_assa(const FrameSet& preds, const FrameSet& gts, SimKind kind,
                               const std::vector<int>& alphas_pct) {
  struct Obs {
    std::string id;
    const Label* label;
  };
  // (video, category) -> frameIndex -> observations
  using Timeline = std::map<std::int64_t, std::vector<Obs>>;
  std::map<std::string, std::map<std::string, Timeline>> gt_tl, pred_tl;  // category -> video -> ...
  auto collect = [](const FrameSet& set, auto& out) {
    for (const Frame& f : set.frames) {
      for (const Label& l : f.labels) out[l.category][*f.video_name][*f.frame_index].push_back({l.id, &l});
    }
  };
  collect(gts, gt_tl);
  collect(preds, pred_tl);
  auto sim = [&](const Label& g, const Label& p) {
    return kind == SimKind::kBox ? box_iou_ref(*p.box2d, *g.box2d)
                                 : dense_iou(decode_runs(*p.rle), decode_runs(*g.rle));
  };

  double total = 0;
  for (const auto& [cat, videos] : gt_tl) {
    double alpha_sum = 0;
    for (int pct : alphas_pct) {
      const double alpha = pct / 100.0;
      // key: (video, gt id, pred id)
      std::map<std::tuple<std::string, std::string, std::string>, std::size_t> tpa;
      std::map<std::pair<std::string, std::string>, std::size_t> gt_len, pred_len;
      for (const auto& [video, timeline] : videos) {
        std::set<std::int64_t> frames;
        for (const auto& [fi, obs] : timeline) frames.insert(fi);
        const Timeline* pt = nullptr;
        if (auto it = pred_tl.find(cat); it != pred_tl.end()) {
          if (auto jt = it->second.find(video); jt != it->second.end()) pt = &jt->second;
        }
        if (pt) {
          for (const auto& [fi, obs] : *pt) frames.insert(fi);
        }
        for (std::int64_t fi : frames) {
          std::vector<Obs> g, p;
          if (auto it = timeline.find(fi); it != timeline.end()) g = it->second;
          if (pt) {
            if (auto it = pt->find(fi); it != pt->end()) p = it->second;
          }
          auto by_id = [](const Obs& a, const Obs& b) { return a.id < b.id; };
          std::sort(g.begin(), g.end(), by_id);
          std::sort(p.begin(), p.end(), by_id);
          for (const Obs& o : g) ++gt_len[{video, o.id}];
          for (const Obs& o : p) ++pred_len[{video, o.id}];
          // Enumerate partial matchings over eligible pairs.
          std::vector<int> cur(g.size(), -1), best;
          bool have_best = false;
          std::size_t best_n = 0;
          double best_cost = 0;
          std::vector<char> used(p.size(), 0);
          auto rec = [&](auto&& self, std::size_t r, std::size_t n, double cost) -> void {
            if (r == g.size()) {
              // Enumeration runs in lexicographic order (unmatched last), so
              // the first of several equal optima is kept.
              if (!have_best || n > best_n || (n == best_n && cost < best_cost - 1e-12)) {
                have_best = true;
                best = cur;
                best_n = n;
                best_cost = cost;
              }
              return;
            }
            for (std::size_t c = 0; c <= p.size(); ++c) {
              if (c < p.size()) {
                if (used[c]) continue;
                const double s = sim(*g[r].label, *p[c].label);
                if (s < alpha) continue;
                used[c] = 1;
                cur[r] = static_cast<int>(c);
                self(self, r + 1, n + 1, cost + (1.0 - s));
                used[c] = 0;
                cur[r] = -1;
              } else {
                self(self, r + 1, n, cost);
              }
            }
          };
          rec(rec, 0, 0, 0.0);
          for (std::size_t r = 0; r < best.size(); ++r) {
            if (best[r] >= 0) ++tpa[{video, g[r].id, p[static_cast<std::size_t>(best[r])].id}];
          }
        }
      }
      double sum = 0;
      std::size_t count = 0;
      for (const auto& [key, t] : tpa) {
        const auto& [video, gid, pid] = key;
        const std::size_t fna = gt_len[{video, gid}] - t;
        const std::size_t fpa = pred_len[{video, pid}] - t;
        const double a = static_cast<double>(t) / static_cast<double>(t + fna + fpa);
        sum += static_cast<double>(t) * a;
        count += t;
      }
      alpha_sum += count ? sum / static_cast<double>(count) : 0.0;
    }
    total += 100.0 * alpha_sum / static_cast<double>(alphas_pct.size());
  }
  return total / static_cast<double>(gt_tl.size());
}

// ------------------------------------------------------------- generators

inline Box2D random_box(Rng& rng, int extent = 12) {
  const double x1 = uniform_int(rng, 0, extent - 2), y1 = uniform_int(rng, 0, extent - 2);
  return {x1, y1, x1 + uniform_int(rng, 1, 6), y1 + uniform_int(rng, 1, 6)};
}

inline Box2D jitter_box(Rng& rng, const Box2D& b) {
  Box2D out = b;
  out.x1 += uniform_int(rng, -1, 1);
  out.y1 += uniform_int(rng, -1, 1);
  out.x2 = std::max(out.x1 + 1, out.x2 + uniform_int(rng, -1, 1));
  out.y2 = std::max(out.y1 + 1, out.y2 + uniform_int(rng, -1, 1));
  return out;
}

inline RleMask random_rect_mask(Rng& rng, int h, int w) {
  Raster r(h, w);
  const int r0 = uniform_int(rng, 0, h - 1), c0 = uniform_int(rng, 0, w - 1);
  const int r1 = uniform_int(rng, r0, std::min(h - 1, r0 + 4)), c1 = uniform_int(rng, c0, std::min(w - 1, c0 + 4));
  for (int y = r0; y <= r1; ++y) {
    for (int x = c0; x <= c1; ++x) r.at(y, x) = 1;
  }
  return encode_runs(r);
}

inline RleMask jitter_mask(Rng& rng, const RleMask& m) {
  Raster r = decode_runs(m);
  for (auto& px : r.data) {
    if (coin(rng, 0.08)) px ^= 1;
  }
  return encode_runs(r);
}

inline Keypoints random_keypoints(Rng& rng, const Box2D& box, bool allow_invisible) {
  Keypoints k;
  for (Joint& j : k.joints) {
    j.x = box.x1 + uniform_real(rng) * (box.x2 - box.x1);
    j.y = box.y1 + uniform_real(rng) * (box.y2 - box.y1);
    j.score = allow_invisible && coin(rng, 0.3) ? 0.0 : 1.0;
  }
  return k;
}

inline Keypoints jitter_keypoints(Rng& rng, const Keypoints& k, double spread) {
  Keypoints out = k;
  for (Joint& j : out.joints) {
    j.x += (uniform_real(rng) - 0.5) * spread;
    j.y += (uniform_real(rng) - 0.5) * spread;
    j.score = 0.5 + 0.5 * uniform_real(rng);
  }
  return out;
}

// Up to 5 frames with up to 10 ground-truth and 10 predicted objects each,
// two categories, coarse scores so ties occur. At least one ground-truth
// object exists.
inline std::pair<FrameSet, FrameSet> random_ap_dataset(Rng& rng, SimKind kind) {
  static const char* kCats[] = {"car", "pedestrian"};
  FrameSet preds, gts;
  const int frames = uniform_int(rng, 1, 5);
  bool any_gt = false;
  for (int f = 0; f < frames; ++f) {
    Frame g, p;
    g.name = p.name = "f" + std::to_string(f);
    const int n_gt = uniform_int(rng, 0, 10);
    for (int i = 0; i < n_gt; ++i) {
      Label l;
      l.id = "g" + std::to_string(i);
      l.category = kCats[uniform_int(rng, 0, 1)];
      const Box2D box = random_box(rng);
      if (kind == SimKind::kMask) {
        l.rle = random_rect_mask(rng, 8, 8);
      } else {
        l.box2d = box;
      }
      if (kind == SimKind::kKeypoint) l.graph = random_keypoints(rng, box, true);
      g.labels.push_back(l);
    }
    const int n_pred = uniform_int(rng, 0, 10);
    for (int i = 0; i < n_pred; ++i) {
      Label l;
      l.id = "p" + std::to_string(i);
      l.score = uniform_int(rng, 1, 5) / 5.0;
      const bool copy = !g.labels.empty() && coin(rng, 0.7);
      const Label* src = copy ? &g.labels[static_cast<std::size_t>(uniform_int(rng, 0, n_gt - 1))] : nullptr;
      l.category = src && coin(rng, 0.9) ? src->category : kCats[uniform_int(rng, 0, 1)];
      switch (kind) {
        case SimKind::kBox:
          l.box2d = src ? jitter_box(rng, *src->box2d) : random_box(rng);
          break;
        case SimKind::kMask:
          l.rle = src ? jitter_mask(rng, *src->rle) : random_rect_mask(rng, 8, 8);
          break;
        case SimKind::kKeypoint: {
          const Box2D box = src ? *src->box2d : random_box(rng);
          l.graph = src ? jitter_keypoints(rng, *src->graph, uniform_real(rng) * 3.0)
                        : jitter_keypoints(rng, random_keypoints(rng, box, false), 1.0);
          break;
        }
      }
      p.labels.push_back(l);
    }
    for (const Label& l : g.labels) {
      if (kind != SimKind::kKeypoint || l.graph->visible_count() > 0) any_gt = true;
    }
    gts.frames.push_back(std::move(g));
    preds.frames.push_back(std::move(p));
  }
  if (!any_gt) {
    Label l;
    l.id = "g_extra";
    l.category = "car";
    l.box2d = random_box(rng);
    if (kind == SimKind::kMask) l.rle = random_rect_mask(rng, 8, 8);
    if (kind == SimKind::kKeypoint) l.graph = random_keypoints(rng, *l.box2d, false);
    gts.frames[0].labels.push_back(l);
  }
  return {preds, gts};
}

// Up to 3 ground-truth tracks over up to 6 frames in one video, with
// predicted tracks that follow, fragment, swap or miss them.
inline std::pair<FrameSet, FrameSet> random_track_dataset(Rng& rng, SimKind kind) {
  static const char* kCats[] = {"car", "pedestrian"};
  const int frames = uniform_int(rng, 1, 6);
  const int n_gt = uniform_int(rng, 1, 3);
  const int n_pred = uniform_int(rng, 0, 3);
  FrameSet preds, gts;
  struct TrackInfo {
    std::string cat;
    Box2D box;
    RleMask mask;
  };
  std::vector<TrackInfo> gt_tracks;
  for (int t = 0; t < n_gt; ++t) {
    gt_tracks.push_back({kCats[uniform_int(rng, 0, 1)], random_box(rng), random_rect_mask(rng, 8, 8)});
  }
  std::vector<std::string> pred_cat(static_cast<std::size_t>(n_pred));
  for (auto& c : pred_cat) c = kCats[uniform_int(rng, 0, 1)];
  for (int f = 0; f < frames; ++f) {
    Frame g, p;
    g.name = p.name = "f" + std::to_string(f);
    g.video_name = p.video_name = "v0";
    g.frame_index = p.frame_index = f;
    for (int t = 0; t < n_gt; ++t) {
      if (!coin(rng, 0.8)) continue;
      TrackInfo& info = gt_tracks[static_cast<std::size_t>(t)];
      if (coin(rng, 0.3)) info.box = jitter_box(rng, info.box);
      Label l;
      l.id = "g" + std::to_string(t);
      l.category = info.cat;
      if (kind == SimKind::kBox) {
        l.box2d = info.box;
      } else {
        l.rle = info.mask;
      }
      g.labels.push_back(l);
    }
    for (int t = 0; t < n_pred; ++t) {
      if (!coin(rng, 0.8)) continue;
      Label l;
      l.id = "p" + std::to_string(t);
      l.category = pred_cat[static_cast<std::size_t>(t)];
      l.score = 1.0;
      const TrackInfo& src = gt_tracks[static_cast<std::size_t>(uniform_int(rng, 0, n_gt - 1))];
      if (kind == SimKind::kBox) {
        l.box2d = coin(rng, 0.8) ? jitter_box(rng, src.box) : random_box(rng);
      } else {
        l.rle = coin(rng, 0.8) ? jitter_mask(rng, src.mask) : random_rect_mask(rng, 8, 8);
      }
      p.labels.push_back(l);
    }
    gts.frames.push_back(std::move(g));
    preds.frames.push_back(std::move(p));
  }
  // Every category present must own at least one frame observation.
  bool any = false;
  for (const Frame& f : gts.frames) any = any || !f.labels.empty();
  if (!any) {
    Label l;
    l.id = "g0";
    l.category = gt_tracks[0].cat;
    if (kind == SimKind::kBox) {
      l.box2d = gt_tracks[0].box;
    } else {
      l.rle = gt_tracks[0].mask;
    }
    gts.frames[0].labels.push_back(l);
  }
  return {preds, gts};
}

}  // namespace vtd::oracle
