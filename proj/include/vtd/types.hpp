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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vtd {

// Dense binary raster, row-major, one byte per pixel (0 or 1).
struct Raster {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> data;

  Raster() = default;
  Raster(int h, int w, std::uint8_t fill = 0)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w, fill) {}

  std::uint8_t& at(int row, int col) {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::uint8_t at(int row, int col) const {
    return data[static_cast<std::size_t>(row) * width + col];
  }
  std::size_t size() const { return data.size(); }
  std::size_t count() const;

  friend bool operator==(const Raster&, const Raster&) = default;
};

struct Box2D {
  double x1 = 0, y1 = 0, x2 = 0, y2 = 0;

  double area() const { return (x2 - x1) * (y2 - y1); }
  friend bool operator==(const Box2D&, const Box2D&) = default;
};

// Column-major run lengths; runs[0] counts background pixels (may be 0),
// then runs alternate foreground / background.
struct RleMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint32_t> runs;

  std::uint64_t area() const;
  friend bool operator==(const RleMask&, const RleMask&) = default;
};

inline constexpr int kNumJoints = 18;

struct Joint {
  double x = 0, y = 0;
  double score = 0;  // 0 means invisible
  friend bool operator==(const Joint&, const Joint&) = default;
};

struct Keypoints {
  std::array<Joint, kNumJoints> joints{};
  int visible_count() const;
  friend bool operator==(const Keypoints&, const Keypoints&) = default;
};

struct Vertex {
  double x = 0, y = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Poly2D {
  std::vector<Vertex> vertices;
  std::string types;  // one char per vertex: 'L' line, 'C' Bezier control
  bool closed = false;
  friend bool operator==(const Poly2D&, const Poly2D&) = default;
};

struct LaneAttributes {
  std::string direction;  // parallel | vertical
  std::string style;      // solid | dashed
  friend bool operator==(const LaneAttributes&, const LaneAttributes&) = default;
};

struct Label {
  std::string id;
  std::string category;
  std::optional<double> score;
  std::optional<Box2D> box2d;
  std::optional<RleMask> rle;
  std::vector<Poly2D> poly2d;
  std::optional<Keypoints> graph;
  LaneAttributes lane;

  bool has_geometry() const {
    return box2d || rle || !poly2d.empty() || graph;
  }
  friend bool operator==(const Label&, const Label&) = default;
};

struct FrameAttributes {
  std::optional<std::string> weather;
  std::optional<std::string> scene;
  friend bool operator==(const FrameAttributes&, const FrameAttributes&) = default;
};

struct Frame {
  std::string name;
  std::optional<std::string> video_name;
  std::optional<std::int64_t> frame_index;
  FrameAttributes attributes;
  std::optional<int> height;
  std::optional<int> width;
  // Side files referenced from the label file, resolved against its directory.
  std::optional<std::string> flow_path;
  std::optional<std::string> label_path;
  std::vector<Label> labels;

  // Identity used to pair prediction and ground-truth frames.
  std::string key() const {
    return video_name ? *video_name + "/" + name : name;
  }
  friend bool operator==(const Frame&, const Frame&) = default;
};

struct FrameSet {
  std::vector<Frame> frames;
  friend bool operator==(const FrameSet&, const FrameSet&) = default;
};

// Per-pixel class indices; kIgnoreIndex marks unlabeled pixels.
inline constexpr std::uint8_t kIgnoreIndex = 255;

struct SemanticMap {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> classes;
  std::vector<float> confidence;  // empty when absent

  SemanticMap() = default;
  SemanticMap(int h, int w, std::uint8_t fill = kIgnoreIndex)
      : height(h), width(w), classes(static_cast<std::size_t>(h) * w, fill) {}
  bool has_confidence() const { return !confidence.empty(); }
  friend bool operator==(const SemanticMap&, const SemanticMap&) = default;
};

struct FlowField {
  int height = 0;
  int width = 0;
  std::vector<float> uv;  // row-major interleaved (u, v)

  FlowField() = default;
  FlowField(int h, int w)
      : height(h), width(w), uv(static_cast<std::size_t>(h) * w * 2, 0.f) {}
  float u(int row, int col) const { return uv[2 * (static_cast<std::size_t>(row) * width + col)]; }
  float v(int row, int col) const { return uv[2 * (static_cast<std::size_t>(row) * width + col) + 1]; }
  friend bool operator==(const FlowField&, const FlowField&) = default;
};

}  // namespace vtd
