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

#include <string>
#include <string_view>

#include "vtd/errors.hpp"
#include "vtd/types.hpp"

namespace vtd {

class CorruptMaskError : public FormatError {
 public:
  using FormatError::FormatError;
};

// Encodes a raster into column-major runs. The first run counts background
// pixels and is the only run that may be zero.
RleMask rle_encode(const Raster& mask);

// Throws CorruptMaskError when the runs do not cover height * width pixels.
Raster rle_decode(const RleMask& mask);

// COCO compressed counts string: delta coding against the run two places
// back, 5 payload bits per char, 0x20 continuation bit, offset 48.
std::string rle_to_string(const RleMask& mask);
RleMask rle_from_string(std::string_view counts, int height, int width);

// Checks the run-sum invariant without decoding.
void check_rle(const RleMask& mask);

}  // namespace vtd
