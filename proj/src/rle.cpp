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

#include "vtd/rle.hpp"

#include <algorithm>
#include <numeric>

namespace vtd {

RleMask rle_encode(const Raster& mask) {
  RleMask out{mask.height, mask.width, {}};
  std::uint8_t current = 0;
  std::uint32_t run = 0;
  for (int col = 0; col < mask.width; ++col) {
    for (int row = 0; row < mask.height; ++row) {
      const std::uint8_t px = mask.at(row, col) ? 1 : 0;
      if (px != current) {
        out.runs.push_back(run);
        run = 0;
        current = px;
      }
      ++run;
    }
  }
  out.runs.push_back(run);
  return out;
}

void check_rle(const RleMask& mask) {
  if (mask.height < 0 || mask.width < 0) {
    throw CorruptMaskError("RLE mask has negative dimensions");
  }
  const std::uint64_t total =
      std::accumulate(mask.runs.begin(), mask.runs.end(), std::uint64_t{0});
  const std::uint64_t expected = static_cast<std::uint64_t>(mask.height) * mask.width;
  if (total != expected) {
    throw CorruptMaskError("corrupt RLE mask: runs sum to " + std::to_string(total) +
                           " but the mask has " + std::to_string(expected) + " pixels");
  }
}

Raster rle_decode(const RleMask& mask) {
  check_rle(mask);
  Raster out(mask.height, mask.width);
  std::size_t pos = 0;
  std::uint8_t value = 0;
  for (std::uint32_t run : mask.runs) {
    if (value) {
      for (std::uint32_t k = 0; k < run; ++k, ++pos) {
        const int col = static_cast<int>(pos / mask.height);
        const int row = static_cast<int>(pos % mask.height);
        out.at(row, col) = 1;
      }
    } else {
      pos += run;
    }
    value ^= 1;
  }
  return out;
}

std::string rle_to_string(const RleMask& mask) {
  std::string s;
  const auto& cnts = mask.runs;
  for (std::size_t i = 0; i < cnts.size(); ++i) {
    long long x = cnts[i];
    if (i > 2) x -= static_cast<long long>(cnts[i - 2]);
    bool more = true;
    while (more) {
      char c = static_cast<char>(x & 0x1f);
      x >>= 5;
      more = (c & 0x10) ? x != -1 : x != 0;
      if (more) c |= 0x20;
      s.push_back(static_cast<char>(c + 48));
    }
  }
  return s;
}

RleMask rle_from_string(std::string_view counts, int height, int width) {
  RleMask out{height, width, {}};
  std::size_t p = 0;
  while (p < counts.size()) {
    long long x = 0;
    int k = 0;
    bool more = true;
    while (more) {
      if (p >= counts.size()) {
        throw CorruptMaskError("RLE counts string ends inside a value");
      }
      const int c = static_cast<unsigned char>(counts[p]) - 48;
      if (c < 0 || c > 63) {
        throw CorruptMaskError("RLE counts string has invalid character at " +
                               std::to_string(p));
      }
      x |= static_cast<long long>(c & 0x1f) << (5 * k);
      more = (c & 0x20) != 0;
      ++p;
      ++k;
      if (!more && (c & 0x10)) x |= -1LL << (5 * k);
      if (k > 12) throw CorruptMaskError("RLE counts value too long");
    }
    if (out.runs.size() > 2) x += static_cast<long long>(out.runs[out.runs.size() - 2]);
    if (x < 0 || x > 0xffffffffLL) {
      throw CorruptMaskError("RLE counts string decodes to an out-of-range run");
    }
    out.runs.push_back(static_cast<std::uint32_t>(x));
  }
  check_rle(out);
  return out;
}

}  // namespace vtd
