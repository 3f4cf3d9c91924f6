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

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "vtd/task.hpp"
#include "vtd/vtda.hpp"

namespace vtd {

inline constexpr const char* kToolName = "vtd";
inline constexpr const char* kToolVersion = "1.0.0";

struct EvalRequest {
  // One of the ten task ids or a single-slot alias (see evaluation_task_ids).
  std::string task;
  std::filesystem::path pred;
  std::filesystem::path gt;
  int workers = 1;
  // Single similarity threshold for AP / AssA tasks, in (0, 1] with at most
  // two decimals. Default: the full 0.50:0.95 (AP) or 0.05:0.95 (AssA) sweep.
  std::optional<double> threshold;
  // Lane ground-truth frames scored.
  std::optional<std::size_t> subsample;
  // Per-joint OKS constants: one value for all joints or exactly 18.
  std::optional<std::vector<double>> sigmas;
  bool bezier = false;
};

// Accepted task ids: the ten tasks followed by the single-slot aliases.
const std::vector<std::string>& evaluation_task_ids();

// Task behind an id or alias. Throws ValidationError on an unknown id.
Task base_task(const std::string& id);

// Loads both files, runs the task's metrics and returns the report without
// a duration field. Keys: tool, version, task, scores, breakdown, config.
// Throws ValidationError, IoError or FormatError.
nlohmann::json evaluate_report(const EvalRequest& request);

// Reads a flat {slot: score} mapping, or an evaluate report's "scores"
// member. Unknown keys and non-numeric values are validation errors.
SlotScores parse_slot_scores(const nlohmann::json& doc);

// Each slot maps to a number (the scale) or to {"scale": s, "sigma": x}.
// All 13 slots are required.
ScalingTable parse_scaling_table(const nlohmann::json& doc);
nlohmann::json scaling_table_to_json(const ScalingTable& table);

// Aggregation report. Warnings are produced for user-supplied tables only.
// Keys: tool, version, task ("vtda"), scores, groups, total, missing,
// partial, scales, warnings.
nlohmann::json vtda_report(const SlotScores& scores, const std::optional<ScalingTable>& user_scales,
                           bool partial);

// Reads a list of score mappings (one per baseline) and estimates the table.
ScalingTable estimate_scaling_table(const nlohmann::json& baselines);

}  // namespace vtd
