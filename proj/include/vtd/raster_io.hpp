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
#include <filesystem>
#include <span>
#include <string>

#include "vtd/types.hpp"

namespace vtd {

// ".flo" optical flow files: float32 magic 202021.25, int32 width,
// int32 height, then width*height interleaved (u, v) float32 pairs in
// row-major order. Everything little-endian.
inline constexpr float kFloMagic = 202021.25f;

// Throws FormatError on a wrong magic or bad dimensions, and on truncated
// or oversized payloads.
FlowField read_flo(std::span<const std::uint8_t> bytes);
std::string write_flo(const FlowField& flow);
FlowField load_flo(const std::filesystem::path& path);

// Binary greyscale PGM ("P5", maxval 255) holding class indices per pixel.
SemanticMap read_pgm(std::span<const std::uint8_t> bytes);
std::string write_pgm(const SemanticMap& map);

// Greyscale PFM ("Pf", negative scale = little-endian) holding per-pixel
// confidences. Rows are stored bottom-to-top as the format requires.
std::vector<float> read_pfm(std::span<const std::uint8_t> bytes, int& height, int& width);
std::string write_pfm(std::span<const float> values, int height, int width);

inline std::span<const std::uint8_t> as_bytes(const std::string& s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace vtd
