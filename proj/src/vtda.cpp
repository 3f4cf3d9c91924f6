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

#include "vtd/vtda.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "vtd/errors.hpp"

namespace vtd {

double scale_factor(double sigma) {
  if (!std::isfinite(sigma) || sigma < 0) {
    throw ValidationError("sigma must be finite and non-negative");
  }
  return 1.0 / std::max(1.0, std::ceil(2.0 * sigma - 1e-9));
}

ScalingTable default_scaling_table() {
  constexpr std::array<double, kNumSlots> kSigma = {0.4, 0.6, 2.0, 0.7, 0.9, 1.1, 1.7,
                                                    3.1, 1.0, 1.7, 0.9, 0.8, 1.4};
  constexpr std::array<double, kNumSlots> kScale = {1.00, 0.50, 0.20, 0.50, 0.50, 0.33, 0.25,
                                                    0.14, 0.33, 0.25, 0.50, 0.50, 0.33};
  ScalingTable t;
  for (std::size_t i = 0; i < kNumSlots; ++i) t[i] = {kSigma[i], kScale[i]};
  return t;
}

ScalingTable estimate_sigmas(std::span<const std::array<double, kNumSlots>> baselines) {
  if (baselines.size() < 2) throw ValidationError("insufficient data: need at least two baselines");
  ScalingTable t;
  const double n = static_cast<double>(baselines.size());
  for (std::size_t s = 0; s < kNumSlots; ++s) {
    double mean = 0;
    for (const auto& row : baselines) {
      if (!std::isfinite(row[s])) throw ValidationError("baseline scores must be finite");
      mean += row[s];
    }
    mean /= n;
    double var = 0;
    for (const auto& row : baselines) var += (row[s] - mean) * (row[s] - mean);
    const double sigma = std::sqrt(var / n);
    t[s] = {sigma, scale_factor(sigma)};
  }
  return t;
}

std::string ScaleWarning::message() const {
  std::ostringstream os;
  os << slot_key(slot) << ": scale " << scale << " disagrees with 1/ceil(2*sigma) = " << expected
     << " for sigma " << sigma;
  return os.str();
}

std::vector<ScaleWarning> check_scaling_table(const ScalingTable& table) {
  std::vector<ScaleWarning> out;
  for (std::size_t i = 0; i < kNumSlots; ++i) {
    if (!table[i].sigma) continue;
    const double expected = scale_factor(*table[i].sigma);
    if (std::abs(expected - table[i].scale) > 0.005 + 1e-12) {
      out.push_back({static_cast<Slot>(i), *table[i].sigma, table[i].scale, expected});
    }
  }
  return out;
}

std::span<const Slot> group_slots(Group g) {
  static constexpr std::array<Slot, 2> kCls = {Slot::kAccGw, Slot::kAccGs};
  static constexpr std::array<Slot, 3> kSeg = {Slot::kIouS, Slot::kIouA, Slot::kIouL};
  static constexpr std::array<Slot, 5> kLoc = {Slot::kApD, Slot::kApI, Slot::kApP, Slot::kApT, Slot::kApR};
  static constexpr std::array<Slot, 3> kAss = {Slot::kIouF, Slot::kAssaT, Slot::kAssaR};
  switch (g) {
    case Group::kCls: return kCls;
    case Group::kSeg: return kSeg;
    case Group::kLoc: return kLoc;
    case Group::kAss: return kAss;
  }
  return {};
}

GroupScores vtda(const SlotScores& scores, const ScalingTable& scales, const VtdaOptions& options) {
  GroupScores out;
  for (std::size_t i = 0; i < kNumSlots; ++i) {
    if (!scores[i]) {
      if (!options.partial) {
        throw ValidationError("incomplete input: missing score for slot '" +
                              std::string(kSlotKeys[i]) + "'");
      }
      out.missing.push_back(static_cast<Slot>(i));
      continue;
    }
    const double x = *scores[i];
    if (!std::isfinite(x) || x < 0 || x > 100) {
      throw ValidationError("score for slot '" + std::string(kSlotKeys[i]) + "' is outside [0, 100]");
    }
    if (!(scales[i].scale > 0) || scales[i].scale > 1) {
      throw ValidationError("scale for slot '" + std::string(kSlotKeys[i]) + "' is outside (0, 1]");
    }
  }
  for (std::size_t g = 0; g < 4; ++g) {
    double weighted = 0, weight = 0;
    for (Slot s : group_slots(static_cast<Group>(g))) {
      const auto i = static_cast<std::size_t>(s);
      if (!scores[i]) continue;
      weighted += scales[i].scale * *scores[i];
      weight += scales[i].scale;
    }
    if (weight == 0) {
      out.present[g] = false;
      out.groups[g] = 0;
      continue;
    }
    out.groups[g] = weighted / weight;
    out.total += out.groups[g];
  }
  return out;
}

}  // namespace vtd
