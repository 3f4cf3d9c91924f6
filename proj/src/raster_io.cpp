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

#include "vtd/raster_io.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <sstream>

#include "vtd/errors.hpp"
#include "vtd/label_io.hpp"

namespace vtd {

namespace {

static_assert(std::endian::native == std::endian::little,
              "flow and PFM codecs assume a little-endian host");

template <typename T>
T load_le(const std::uint8_t* p) {
  T value;
  std::memcpy(&value, p, sizeof(T));
  return value;
}

template <typename T>
void store_le(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));
}

// Reads one whitespace-delimited header token of a netpbm-style file.
std::string next_token(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  while (pos < bytes.size()) {
    if (bytes[pos] == '#') {
      while (pos < bytes.size() && bytes[pos] != '\n') ++pos;
    } else if (std::isspace(bytes[pos])) {
      ++pos;
    } else {
      break;
    }
  }
  std::string tok;
  while (pos < bytes.size() && !std::isspace(bytes[pos])) tok.push_back(static_cast<char>(bytes[pos++]));
  if (tok.empty()) throw FormatError("truncated raster header");
  return tok;
}

int parse_dim(const std::string& tok) {
  try {
    std::size_t used = 0;
    const long v = std::stol(tok, &used);
    if (used != tok.size() || v <= 0 || v > (1 << 16)) throw FormatError("bad raster dimension '" + tok + "'");
    return static_cast<int>(v);
  } catch (const std::logic_error&) {
    throw FormatError("bad raster dimension '" + tok + "'");
  }
}

}  // namespace

FlowField read_flo(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12) throw FormatError("flow file shorter than its 12-byte header");
  const float magic = load_le<float>(bytes.data());
  if (magic != kFloMagic) throw FormatError("flow file has wrong magic number");
  const std::int32_t width = load_le<std::int32_t>(bytes.data() + 4);
  const std::int32_t height = load_le<std::int32_t>(bytes.data() + 8);
  if (width <= 0 || height <= 0 || width > (1 << 16) || height > (1 << 16)) {
    throw FormatError("flow file has invalid dimensions");
  }
  const std::size_t payload = static_cast<std::size_t>(width) * height * 2 * sizeof(float);
  if (bytes.size() - 12 != payload) {
    throw FormatError("flow payload length " + std::to_string(bytes.size() - 12) +
                      " does not match " + std::to_string(payload) + " bytes for " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  FlowField flow(height, width);
  std::memcpy(flow.uv.data(), bytes.data() + 12, payload);
  for (float x : flow.uv) {
    if (!std::isfinite(x)) throw FormatError("flow file contains non-finite values");
  }
  return flow;
}

std::string write_flo(const FlowField& flow) {
  std::string out;
  out.reserve(12 + flow.uv.size() * sizeof(float));
  store_le(out, kFloMagic);
  store_le(out, static_cast<std::int32_t>(flow.width));
  store_le(out, static_cast<std::int32_t>(flow.height));
  out.append(reinterpret_cast<const char*>(flow.uv.data()), flow.uv.size() * sizeof(float));
  return out;
}

FlowField load_flo(const std::filesystem::path& path) { return read_flo(as_bytes(read_file(path))); }

SemanticMap read_pgm(std::span<const std::uint8_t> bytes) {
  std::size_t pos = 0;
  if (next_token(bytes, pos) != "P5") throw FormatError("label map is not a binary PGM (P5)");
  const int width = parse_dim(next_token(bytes, pos));
  const int height = parse_dim(next_token(bytes, pos));
  if (next_token(bytes, pos) != "255") throw FormatError("label map PGM must have maxval 255");
  ++pos;  // single whitespace byte before the payload
  const std::size_t n = static_cast<std::size_t>(width) * height;
  if (pos > bytes.size() || bytes.size() - pos != n) throw FormatError("label map PGM payload has wrong length");
  SemanticMap map(height, width);
  std::memcpy(map.classes.data(), bytes.data() + pos, n);
  return map;
}

std::string write_pgm(const SemanticMap& map) {
  std::string out = "P5\n" + std::to_string(map.width) + " " + std::to_string(map.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(map.classes.data()), map.classes.size());
  return out;
}

std::vector<float> read_pfm(std::span<const std::uint8_t> bytes, int& height, int& width) {
  std::size_t pos = 0;
  if (next_token(bytes, pos) != "Pf") throw FormatError("confidence map is not a greyscale PFM (Pf)");
  width = parse_dim(next_token(bytes, pos));
  height = parse_dim(next_token(bytes, pos));
  const std::string scale = next_token(bytes, pos);
  if (scale.empty() || scale[0] != '-') throw FormatError("only little-endian PFM is supported");
  ++pos;
  const std::size_t n = static_cast<std::size_t>(width) * height;
  if (pos > bytes.size() || bytes.size() - pos != n * sizeof(float)) {
    throw FormatError("confidence PFM payload has wrong length");
  }
  std::vector<float> values(n);
  for (int row = 0; row < height; ++row) {
    const std::size_t src = pos + static_cast<std::size_t>(height - 1 - row) * width * sizeof(float);
    std::memcpy(values.data() + static_cast<std::size_t>(row) * width, bytes.data() + src,
                static_cast<std::size_t>(width) * sizeof(float));
  }
  return values;
}

std::string write_pfm(std::span<const float> values, int height, int width) {
  std::string out = "Pf\n" + std::to_string(width) + " " + std::to_string(height) + "\n-1.0\n";
  for (int row = height - 1; row >= 0; --row) {
    out.append(reinterpret_cast<const char*>(values.data() + static_cast<std::size_t>(row) * width),
               static_cast<std::size_t>(width) * sizeof(float));
  }
  return out;
}

}  // namespace vtd
