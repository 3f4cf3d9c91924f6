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

#include <cstring>

#include "doctest.h"
#include "vtd/errors.hpp"
#include "vtd/raster_io.hpp"

using namespace vtd;

namespace {

std::string bytes(std::initializer_list<unsigned> values) {
  std::string s;
  for (unsigned v : values) s.push_back(static_cast<char>(v));
  return s;
}

}  // namespace

TEST_SUITE("raster_io") {
  TEST_CASE("flo 1x1 matches the byte layout") {
    const std::string expected = bytes({0x50, 0x49, 0x45, 0x48, 0x01, 0x00, 0x00, 0x00, 0x01, 0x00,
                                        0x00, 0x00, 0x00, 0x00, 0xc0, 0x3f, 0x00, 0x00, 0x00, 0xc0});
    FlowField f(1, 1);
    f.uv = {1.5f, -2.0f};
    CHECK(write_flo(f) == expected);
    const FlowField back = read_flo(as_bytes(expected));
    CHECK(back.height == 1);
    CHECK(back.width == 1);
    CHECK(back.u(0, 0) == 1.5f);
    CHECK(back.v(0, 0) == -2.0f);
  }

  TEST_CASE("flo rejects bad headers and payloads") {
    FlowField f(2, 3);
    for (std::size_t i = 0; i < f.uv.size(); ++i) f.uv[i] = static_cast<float>(i) * 0.5f;
    const std::string good = write_flo(f);
    CHECK(read_flo(as_bytes(good)) == f);

    std::string bad_magic = good;
    std::memset(bad_magic.data(), 0, 4);
    CHECK_THROWS_AS(read_flo(as_bytes(bad_magic)), FormatError);
    CHECK_THROWS_AS(read_flo(as_bytes(good.substr(0, good.size() - 1))), FormatError);
    CHECK_THROWS_AS(read_flo(as_bytes(good + "x")), FormatError);
    CHECK_THROWS_AS(read_flo(as_bytes(good.substr(0, 8))), FormatError);
  }

  TEST_CASE("missing flo file is an I/O error") {
    CHECK_THROWS_AS(load_flo("/nonexistent/flow.flo"), IoError);
  }

  TEST_CASE("pgm roundtrip") {
    SemanticMap m(2, 3);
    m.classes = {0, 1, 2, 255, 18, 7};
    const std::string text = write_pgm(m);
    CHECK(text.rfind("P5", 0) == 0);
    CHECK(read_pgm(as_bytes(text)) == m);
    CHECK_THROWS_AS(read_pgm(as_bytes(std::string("P2\n1 1\n255\n0"))), FormatError);
    CHECK_THROWS_AS(read_pgm(as_bytes(text.substr(0, text.size() - 1))), FormatError);
  }

  TEST_CASE("pfm stores rows bottom to top") {
    const std::vector<float> values = {0.1f, 0.9f};  // 2 rows, 1 column
    const std::string text = write_pfm(values, 2, 1);
    float first = 0;
    std::memcpy(&first, text.data() + text.size() - 8, 4);
    CHECK(first == 0.9f);
    int h = 0, w = 0;
    CHECK(read_pfm(as_bytes(text), h, w) == values);
    CHECK(h == 2);
    CHECK(w == 1);
  }
}
