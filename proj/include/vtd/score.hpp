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
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace vtd {

// The 13 metric slots that feed the composite score, in canonical order.
enum class Slot {
  kAccGw,   // weather tagging accuracy
  kAccGs,   // scene tagging accuracy
  kIouS,    // semantic segmentation mIoU
  kIouA,    // drivable area mIoU
  kIouL,    // lane boundary mIoU
  kApD,     // detection box AP
  kApI,     // instance segmentation mask AP
  kApP,     // pose keypoint AP
  kApT,     // MOT box AP
  kApR,     // MOTS mask AP
  kIouF,    // flow proxy IoU
  kAssaT,   // MOT association accuracy
  kAssaR,   // MOTS association accuracy
};

inline constexpr std::size_t kNumSlots = 13;

inline constexpr std::array<std::string_view, kNumSlots> kSlotKeys = {
    "acc_gw", "acc_gs", "iou_s", "iou_a", "iou_l", "ap_d", "ap_i",
    "ap_p", "ap_t", "ap_r", "iou_f", "assa_t", "assa_r"};

inline std::string_view slot_key(Slot s) { return kSlotKeys[static_cast<std::size_t>(s)]; }

inline std::optional<Slot> parse_slot(std::string_view key) {
  for (std::size_t i = 0; i < kNumSlots; ++i) {
    if (kSlotKeys[i] == key) return static_cast<Slot>(i);
  }
  return std::nullopt;
}

// A metric value in [0, 100] with an optional per-class breakdown.
struct TaskScore {
  Slot slot{};
  double value = 0.0;
  std::map<std::string, double> per_class;
};

}  // namespace vtd
