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

#include <array>
#include <span>

#include "vtd/types.hpp"

namespace vtd {

// Intersection over union of two axis-aligned boxes with continuous
// coordinates. Returns 0 when the union is empty.
double box_iou(const Box2D& a, const Box2D& b);

// Exact mask IoU computed on the run lengths of both masks; integer
// intersection and union counts, one final division. Returns 0 for two
// empty masks. Throws ValidationError when the shapes differ.
double mask_iou(const RleMask& a, const RleMask& b);

struct MaskOverlap {
  std::uint64_t intersection = 0;
  std::uint64_t area_a = 0;
  std::uint64_t area_b = 0;
  std::uint64_t union_area() const { return area_a + area_b - intersection; }
};
MaskOverlap mask_overlap(const RleMask& a, const RleMask& b);

using OksSigmas = std::array<double, kNumJoints>;

// Default per-joint constants: uniform 0.072 for all 18 joints.
OksSigmas default_oks_sigmas();

// Object keypoint similarity: mean over gt joints with score > 0 of
// exp(-d^2 / (2 * area * k^2)) with k = 2 * sigma.
// Throws ValidationError when gt_area <= 0 or no gt joint is visible.
double oks(const Keypoints& pred, const Keypoints& gt, double gt_area,
           const OksSigmas& sigmas = default_oks_sigmas());

// Square structuring element of side 2 * radius + 1 (Chebyshev distance).
Raster dilate(const Raster& mask, int radius);

struct RasterizeOptions {
  // Interpolate cubic Bezier segments where types marks 'C' control points.
  // Off: consecutive vertices are joined by straight segments.
  bool bezier = false;
};

// Marks every pixel whose center lies within thickness / 2 of the polyline.
// Pixel (row, col) has its center at (x = col, y = row). Closed polylines
// connect the last vertex back to the first.
// Throws ValidationError on an empty vertex list or thickness < 1.
Raster rasterize_poly2d(const Poly2D& poly, int height, int width, double thickness,
                        const RasterizeOptions& options = {});

// Paints every polyline of the label list into one raster.
void rasterize_into(Raster& canvas, std::span<const Poly2D> polys, double thickness,
                    const RasterizeOptions& options = {});

}  // namespace vtd
