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

#include <filesystem>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vtd/errors.hpp"
#include "vtd/eval_loc.hpp"
#include "vtd/evaluate.hpp"
#include "vtd/label_io.hpp"

using namespace vtd;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "vtd_evaluate_unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

EvalRequest write_pair(const std::string& stem, const FrameSet& preds, const FrameSet& gts, const std::string& task) {
  EvalRequest r;
  r.task = task;
  r.pred = scratch(stem + "_pred.json");
  r.gt = scratch(stem + "_gt.json");
  write_file(r.pred, to_label_json(preds).dump());
  write_file(r.gt, to_label_json(gts).dump());
  return r;
}

}  // namespace

TEST_SUITE("evaluate") {
  TEST_CASE("detection report matches the oracle and ignores worker count") {
    oracle::Rng rng(21);
    for (int i = 0; i < 20; ++i) {
      const auto [preds, gts] = oracle::random_ap_dataset(rng, oracle::SimKind::kBox);
      EvalRequest r = write_pair("det", preds, gts, "det");
      const json one = evaluate_report(r);
      r.workers = 4;
      const json four = evaluate_report(r);
      REQUIRE(one.dump() == four.dump());
      const double expected =
          oracle::brute_force_ap(preds, gts, oracle::SimKind::kBox, ApConfig{}.iou_thresholds_pct, 100, 0.072).map;
      CHECK(one["scores"]["ap_d"].get<double>() == expected);
      CHECK(one["tool"] == "vtd");
      CHECK(one["task"] == "det");
      CHECK_FALSE(one["config"].contains("workers"));
    }
  }

  TEST_CASE("tracking report carries both slots; aliases carry one") {
    oracle::Rng rng(22);
    const auto [preds, gts] = oracle::random_track_dataset(rng, oracle::SimKind::kBox);
    EvalRequest r = write_pair("mot", preds, gts, "mot");
    const json both = evaluate_report(r);
    CHECK(both["scores"].contains("ap_t"));
    CHECK(both["scores"].contains("assa_t"));
    r.task = "mot_assa";
    const json assa_only = evaluate_report(r);
    CHECK(assa_only["scores"].size() == 1);
    CHECK(assa_only["scores"]["assa_t"] == both["scores"]["assa_t"]);
    r.threshold = 0.5;
    CHECK(evaluate_report(r)["config"]["threshold"] == 0.5);
    r.threshold = 0.505;
    CHECK_THROWS_AS(evaluate_report(r), ValidationError);
  }

  TEST_CASE("request errors") {
    oracle::Rng rng(23);
    const auto [preds, gts] = oracle::random_ap_dataset(rng, oracle::SimKind::kBox);
    EvalRequest r = write_pair("err", preds, gts, "banana");
    CHECK_THROWS_AS(evaluate_report(r), ValidationError);
    r.task = "det";
    r.gt = scratch("does_not_exist.json");
    CHECK_THROWS_AS(evaluate_report(r), IoError);
    CHECK_THROWS_AS(base_task("nope"), ValidationError);
    CHECK(base_task("mots_ap") == Task::kMots);
  }

  TEST_CASE("slot score parsing") {
    const SlotScores s = parse_slot_scores(json{{"acc_gw", 50}, {"iou_f", 12.5}});
    CHECK(*s[0] == 50);
    CHECK(*s[static_cast<std::size_t>(Slot::kIouF)] == 12.5);
    CHECK_FALSE(s[1].has_value());
    CHECK(*parse_slot_scores(json{{"scores", {{"ap_d", 1}}}})[5] == 1);
    CHECK_THROWS_AS(parse_slot_scores(json{{"banana", 1}}), ValidationError);
    CHECK_THROWS_AS(parse_slot_scores(json{{"ap_d", "high"}}), ValidationError);
  }

  TEST_CASE("scaling table parsing") {
    const ScalingTable t = parse_scaling_table(scaling_table_to_json(default_scaling_table()));
    for (std::size_t i = 0; i < kNumSlots; ++i) {
      CHECK(t[i].scale == default_scaling_table()[i].scale);
      CHECK(t[i].sigma == default_scaling_table()[i].sigma);
    }
    json plain;
    for (auto k : kSlotKeys) plain[std::string(k)] = 1.0;
    CHECK(parse_scaling_table(plain)[3].scale == 1.0);
    CHECK(parse_scaling_table(json{{"scales", plain}})[3].scale == 1.0);
    plain.erase("ap_r");
    CHECK_THROWS_AS(parse_scaling_table(plain), ValidationError);
  }

  TEST_CASE("aggregation report") {
    SlotScores all;
    for (auto& v : all) v = 100.0;
    const json rep = vtda_report(all, std::nullopt, false);
    CHECK(rep["total"].get<double>() == doctest::Approx(400.0));
    CHECK(rep["warnings"].empty());
    CHECK(rep["groups"]["cls"].get<double>() == doctest::Approx(100.0));
    const json user = vtda_report(all, default_scaling_table(), false);
    CHECK(user["warnings"].size() == 2);
    all[2].reset();
    CHECK_THROWS_AS(vtda_report(all, std::nullopt, false), ValidationError);
    const json partial = vtda_report(all, std::nullopt, true);
    CHECK(partial["missing"] == json::array({"iou_s"}));

    json baselines = json::array();
    baselines.push_back(json{{"scores", {{"acc_gw", 0}}}});
    const json row0 = [] {
      json j;
      for (auto k : kSlotKeys) j[std::string(k)] = 0.0;
      return j;
    }();
    json row2 = row0;
    for (auto& [k, v] : row2.items()) v = 2.0;
    const ScalingTable est = estimate_scaling_table(json::array({row0, row2}));
    CHECK(est[0].scale == 0.5);
    CHECK(estimate_scaling_table(json{{"baselines", json::array({row0, row2})}})[12].scale == 0.5);
  }
}
