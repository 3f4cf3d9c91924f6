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

#include "doctest.h"
#include "support/oracles.hpp"
#include "vtd/rle.hpp"

using namespace vtd;

TEST_SUITE("rle") {
  TEST_CASE("encode small rasters") {
    CHECK(rle_encode(Raster(3, 3)).runs == std::vector<std::uint32_t>{9});
    Raster one(3, 3);
    one.at(0, 0) = 1;
    CHECK(rle_encode(one).runs == std::vector<std::uint32_t>{0, 1, 8});
    Raster full(2, 2, 1);
    CHECK(rle_encode(full).runs == std::vector<std::uint32_t>{0, 4});
  }

  TEST_CASE("runs are column-major") {
    Raster r(2, 3);
    r.at(0, 1) = 1;  // second pixel of column 1 in column-major order is index 2
    CHECK(rle_encode(r).runs == std::vector<std::uint32_t>{2, 1, 3});
  }

  TEST_CASE("decode rejects runs that do not cover the raster") {
    CHECK_THROWS_AS(rle_decode(RleMask{3, 3, {4, 4}}), CorruptMaskError);
    CHECK_THROWS_AS(rle_decode(RleMask{3, 3, {5, 5}}), CorruptMaskError);
    CHECK_THROWS_AS(check_rle(RleMask{2, 2, {1, 2}}), CorruptMaskError);
    CHECK_NOTHROW(check_rle(RleMask{2, 2, {1, 2, 1}}));
  }

  TEST_CASE("counts strings") {
    CHECK(rle_to_string(RleMask{3, 3, {9}}) == "9");
    CHECK(rle_to_string(RleMask{3, 3, {0, 1, 8}}) == "018");
    CHECK(rle_to_string(RleMask{10, 10, {100}}) == "T3");
    CHECK(rle_to_string(RleMask{2, 5, {5, 3, 2}}) == "532");
    CHECK(rle_to_string(RleMask{11, 1, {5, 3, 2, 1}}) == "532N");
    CHECK(rle_from_string("532N", 11, 1).runs == std::vector<std::uint32_t>{5, 3, 2, 1});
    CHECK(rle_from_string("T3", 10, 10).runs == std::vector<std::uint32_t>{100});
    CHECK_THROWS_AS(rle_from_string("018", 4, 4), CorruptMaskError);
  }

  TEST_CASE("area counts foreground runs") {
    CHECK(RleMask{2, 5, {5, 3, 2}}.area() == 3);
    CHECK(RleMask{3, 3, {9}}.area() == 0);
  }

  TEST_CASE("random roundtrip against the reference codec") {
    oracle::Rng rng(11);
    for (int i = 0; i < 1200; ++i) {
      const int h = oracle::uniform_int(rng, 1, 64), w = oracle::uniform_int(rng, 1, 64);
      const Raster r = i % 2 ? oracle::random_raster(rng, h, w, oracle::uniform_real(rng))
                             : oracle::random_blobby_raster(rng, h, w);
      const RleMask m = rle_encode(r);
      REQUIRE(m.runs == oracle::encode_runs(r).runs);
      REQUIRE(rle_decode(m) == r);
      REQUIRE(rle_from_string(rle_to_string(m), h, w) == m);
      REQUIRE(m.area() == r.count());
    }
  }
}
