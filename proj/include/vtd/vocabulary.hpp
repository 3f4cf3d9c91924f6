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
#include <optional>
#include <span>
#include <string_view>

namespace vtd::vocab {

inline constexpr std::array<std::string_view, 8> kObjectCategories = {
    "pedestrian", "rider", "car", "truck",
    "bus", "train", "motorcycle", "bicycle"};

inline constexpr std::array<std::string_view, 7> kWeather = {
    "rainy", "snowy", "clear", "overcast", "partly cloudy", "foggy", "undefined"};

inline constexpr std::array<std::string_view, 7> kScene = {
    "tunnel", "residential", "parking lot", "city street",
    "gas stations", "highway", "undefined"};

inline constexpr std::array<std::string_view, 8> kLaneCategories = {
    "road curb", "crosswalk", "double white", "double yellow",
    "double other", "single white", "single yellow", "single other"};

inline constexpr std::array<std::string_view, 2> kLaneDirections = {"parallel", "vertical"};
inline constexpr std::array<std::string_view, 2> kLaneStyles = {"solid", "dashed"};

// Train-id order: 11 stuff classes then the 8 thing classes.
inline constexpr std::array<std::string_view, 19> kSemanticClasses = {
    "road", "sidewalk", "building", "wall", "fence", "pole", "traffic light",
    "traffic sign", "vegetation", "terrain", "sky", "pedestrian", "rider",
    "car", "truck", "bus", "train", "motorcycle", "bicycle"};

// Index 2 is background; only the first two are scored.
inline constexpr std::array<std::string_view, 3> kDrivableClasses = {
    "direct", "alternative", "background"};

template <std::size_t N>
std::optional<int> index_of(const std::array<std::string_view, N>& names,
                            std::string_view name) {
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return std::nullopt;
}

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& names, std::string_view name) {
  return index_of(names, name).has_value();
}

// Semantic class lookup; accepts "person" as an alias of "pedestrian".
std::optional<int> semantic_class(std::string_view name);

}  // namespace vtd::vocab
