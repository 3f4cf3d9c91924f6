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

#include "vtd/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vtd/errors.hpp"
#include "vtd/rle.hpp"

namespace vtd {

double box_iou(const Box2D& a, const Box2D& b) {
  const double iw = std::min(a.x2, b.x2) - std::max(a.x1, b.x1);
  const double ih = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  const double inter = (iw > 0 && ih > 0) ? iw * ih : 0.0;
  const double uni = a.area() + b.area() - inter;
  return uni > 0 ? inter / uni : 0.0;
}

MaskOverlap mask_overlap(const RleMask& a, const RleMask& b) {
  if (a.height != b.height || a.width != b.width) {
    throw ValidationError("mask shape mismatch: " + std::to_string(a.height) + "x" +
                          std::to_string(a.width) + " vs " + std::to_string(b.height) + "x" +
                          std::to_string(b.width));
  }
  MaskOverlap out{0, a.area(), b.area()};
  // Walk both run sequences in lockstep; each step consumes the shorter of
  // the two current runs.
  std::size_t ia = 0, ib = 0;
  std::uint64_t left_a = a.runs.empty() ? 0 : a.runs[0];
  std::uint64_t left_b = b.runs.empty() ? 0 : b.runs[0];
  while (ia < a.runs.size() && ib < b.runs.size()) {
    if (left_a == 0) {
      if (++ia < a.runs.size()) left_a = a.runs[ia];
      continue;
    }
    if (left_b == 0) {
      if (++ib < b.runs.size()) left_b = b.runs[ib];
      continue;
    }
    const std::uint64_t step = std::min(left_a, left_b);
    if ((ia & 1) && (ib & 1)) out.intersection += step;
    left_a -= step;
    left_b -= step;
  }
  return out;
}

double mask_iou(const RleMask& a, const RleMask& b) {
  const MaskOverlap o = mask_overlap(a, b);
  const std::uint64_t u = o.union_area();
  return u > 0 ? static_cast<double>(o.intersection) / static_cast<double>(u) : 0.0;
}

OksSigmas default_oks_sigmas() {
  OksSigmas s;
  s.fill(0.072);
  return s;
}

double oks(const Keypoints& pred, const Keypoints& gt, double gt_area, const OksSigmas& sigmas) {
  if (!(gt_area > 0)) throw ValidationError("OKS needs a positive ground-truth area");
  double total = 0;
  int visible = 0;
  for (int i = 0; i < kNumJoints; ++i) {
    const Joint& g = gt.joints[i];
    if (!(g.score > 0)) continue;
    const double dx = pred.joints[i].x - g.x;
    const double dy = pred.joints[i].y - g.y;
    const double k = 2.0 * sigmas[i];
    total += std::exp(-(dx * dx + dy * dy) / (2.0 * gt_area * k * k));
    ++visible;
  }
  if (visible == 0) throw ValidationError("OKS undefined: ground truth has no visible joints");
  return total / visible;
}

Raster dilate(const Raster& mask, int radius) {
  if (radius < 0) throw ValidationError("dilation radius must be non-negative");
  if (radius == 0 || mask.size() == 0) return mask;
  const int h = mask.height, w = mask.width;
  // Separable max filter: horizontal pass, then vertical, using the distance
  // to the nearest set pixel along each line.
  Raster horiz(h, w);
  std::vector<int> near(std::max(h, w));
  for (int r = 0; r < h; ++r) {
    int last = -1'000'000;
    for (int c = 0; c < w; ++c) {
      if (mask.at(r, c)) last = c;
      near[c] = c - last;
    }
    last = 1'000'000 + w;
    for (int c = w - 1; c >= 0; --c) {
      if (mask.at(r, c)) last = c;
      horiz.at(r, c) = (std::min(near[c], last - c) <= radius) ? 1 : 0;
    }
  }
  Raster out(h, w);
  for (int c = 0; c < w; ++c) {
    int last = -1'000'000;
    for (int r = 0; r < h; ++r) {
      if (horiz.at(r, c)) last = r;
      near[r] = r - last;
    }
    last = 1'000'000 + h;
    for (int r = h - 1; r >= 0; --r) {
      if (horiz.at(r, c)) last = r;
      out.at(r, c) = (std::min(near[r], last - r) <= radius) ? 1 : 0;
    }
  }
  return out;
}

namespace {

void stamp_segment(Raster& canvas, Vertex a, Vertex b, double half) {
  const double min_x = std::min(a.x, b.x) - half, max_x = std::max(a.x, b.x) + half;
  const double min_y = std::min(a.y, b.y) - half, max_y = std::max(a.y, b.y) + half;
  const int c0 = std::max(0, static_cast<int>(std::ceil(min_x)));
  const int c1 = std::min(canvas.width - 1, static_cast<int>(std::floor(max_x)));
  const int r0 = std::max(0, static_cast<int>(std::ceil(min_y)));
  const int r1 = std::min(canvas.height - 1, static_cast<int>(std::floor(max_y)));
  const double dx = b.x - a.x, dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  const double half2 = half * half;
  for (int r = r0; r <= r1; ++r) {
    for (int c = c0; c <= c1; ++c) {
      double t = 0;
      if (len2 > 0) t = std::clamp(((c - a.x) * dx + (r - a.y) * dy) / len2, 0.0, 1.0);
      const double px = a.x + t * dx - c, py = a.y + t * dy - r;
      if (px * px + py * py <= half2) canvas.at(r, c) = 1;
    }
  }
}

// Expands each "C C" control-point pair into a sampled cubic Bezier segment
// between its neighbouring vertices.
std::vector<Vertex> expand_curves(const Poly2D& poly) {
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (poly.types.size() != n || n == 0) return v;
  std::vector<Vertex> out{v[0]};
  std::size_t i = 0;
  while (i + 1 < n) {
    const bool curve = i + 2 < n && poly.types[i + 1] == 'C' && poly.types[i + 2] == 'C' &&
                       (i + 3 < n || poly.closed);
    if (!curve) {
      out.push_back(v[++i]);
      continue;
    }
    const Vertex p0 = v[i], p1 = v[i + 1], p2 = v[i + 2];
    const Vertex p3 = i + 3 < n ? v[i + 3] : v[0];
    constexpr int kSteps = 16;
    for (int s = 1; s <= kSteps; ++s) {
      const double t = static_cast<double>(s) / kSteps, u = 1 - t;
      const double b0 = u * u * u, b1 = 3 * u * u * t, b2 = 3 * u * t * t, b3 = t * t * t;
      out.push_back({b0 * p0.x + b1 * p1.x + b2 * p2.x + b3 * p3.x,
                     b0 * p0.y + b1 * p1.y + b2 * p2.y + b3 * p3.y});
    }
    i += 3;
  }
  return out;
}

}  // namespace

void rasterize_into(Raster& canvas, std::span<const Poly2D> polys, double thickness,
                    const RasterizeOptions& options) {
  if (!(thickness >= 1)) throw ValidationError("rasterization thickness must be >= 1");
  const double half = thickness / 2.0;
  for (const Poly2D& poly : polys) {
    if (poly.vertices.empty()) throw ValidationError("empty geometry: polyline has no vertices");
    const std::vector<Vertex> pts = options.bezier ? expand_curves(poly) : poly.vertices;
    if (pts.size() == 1) stamp_segment(canvas, pts[0], pts[0], half);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) stamp_segment(canvas, pts[i], pts[i + 1], half);
    if (poly.closed && pts.size() > 2) stamp_segment(canvas, pts.back(), pts.front(), half);
  }
}

Raster rasterize_poly2d(const Poly2D& poly, int height, int width, double thickness,
                        const RasterizeOptions& options) {
  Raster canvas(height, width);
  rasterize_into(canvas, std::span<const Poly2D>(&poly, 1), thickness, options);
  return canvas;
}

}  // namespace vtd
