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
#include <string>
#include <vector>

#include "vtd/score.hpp"

namespace vtd {

// 1 / max(1, ceil(2 * sigma)). Throws ValidationError for negative or
// non-finite sigma.
double scale_factor(double sigma);

struct ScaleEntry {
  std::optional<double> sigma;  // informative only
  double scale = 1.0;
};

using ScalingTable = std::array<ScaleEntry, kNumSlots>;

// Published sensitivities and scaling factors (two decimals, as printed).
ScalingTable default_scaling_table();

// Population standard deviation of each column of a baselines x 13 score
// matrix, with scales from scale_factor. Throws ValidationError for fewer
// than two baselines, ragged rows or non-finite scores.
ScalingTable estimate_sigmas(std::span<const std::array<double, kNumSlots>> baselines);

struct ScaleWarning {
  Slot slot;
  double sigma;
  double scale;
  double expected;
  std::string message() const;
};

// Entries whose scale differs from scale_factor(sigma) by more than the
// two-decimal print precision (0.005).
std::vector<ScaleWarning> check_scaling_table(const ScalingTable& table);

enum class Group { kCls, kSeg, kLoc, kAss };
inline constexpr std::array<std::string_view, 4> kGroupKeys = {"cls", "seg", "loc", "ass"};

// Slots belonging to each group.
std::span<const Slot> group_slots(Group g);

struct GroupScores {
  std::array<double, 4> groups{};      // cls, seg, loc, ass in [0, 100]
  std::array<bool, 4> present{true, true, true, true};
  double total = 0.0;                  // sum of present groups
  std::vector<Slot> missing;           // only non-empty in partial mode

  double cls() const { return groups[0]; }
  double seg() const { return groups[1]; }
  double loc() const { return groups[2]; }
  double ass() const { return groups[3]; }
};

using SlotScores = std::array<std::optional<double>, kNumSlots>;

struct VtdaOptions {
  // Allow missing slots: weights renormalize over the present slots of each
  // group and a group without any slot is reported absent.
  bool partial = false;
};

// Each group score is the scale-weighted mean of its task scores,
// sum(s_t * x_t) / sum(s_t); the total is the sum of the group scores.
// Throws ValidationError on a missing slot (unless partial) or a score
// outside [0, 100].
GroupScores vtda(const SlotScores& scores, const ScalingTable& scales, const VtdaOptions& options = {});

}  // namespace vtd
