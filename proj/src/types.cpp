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

#include "vtd/types.hpp"

#include <algorithm>

namespace vtd {

std::size_t Raster::count() const {
  return static_cast<std::size_t>(std::count(data.begin(), data.end(), std::uint8_t{1}));
}

std::uint64_t RleMask::area() const {
  std::uint64_t total = 0;
  for (std::size_t i = 1; i < runs.size(); i += 2) total += runs[i];
  return total;
}

int Keypoints::visible_count() const {
  return static_cast<int>(
      std::count_if(joints.begin(), joints.end(), [](const Joint& j) { return j.score > 0; }));
}

}  // namespace vtd
