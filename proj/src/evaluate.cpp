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

#include "vtd/evaluate.hpp"

#include <algorithm>
#include <cmath>

#include "vtd/errors.hpp"
#include "vtd/eval_assoc.hpp"
#include "vtd/eval_cls_seg.hpp"
#include "vtd/eval_loc.hpp"
#include "vtd/label_io.hpp"

namespace vtd {

using nlohmann::json;

namespace {

struct TaskRoute {
  const char* id;
  Task task;
  std::vector<Slot> slots;
};

const std::vector<TaskRoute>& routes() {
  static const std::vector<TaskRoute> kRoutes = {
      {"tag", Task::kTagging, {Slot::kAccGw, Slot::kAccGs}},
      {"sem", Task::kSemantic, {Slot::kIouS}},
      {"drivable", Task::kDrivable, {Slot::kIouA}},
      {"lane", Task::kLane, {Slot::kIouL}},
      {"det", Task::kDetection, {Slot::kApD}},
      {"ins", Task::kInstance, {Slot::kApI}},
      {"pose", Task::kPose, {Slot::kApP}},
      {"mot", Task::kMot, {Slot::kApT, Slot::kAssaT}},
      {"mots", Task::kMots, {Slot::kApR, Slot::kAssaR}},
      {"flow", Task::kFlow, {Slot::kIouF}},
      {"tag_weather", Task::kTagging, {Slot::kAccGw}},
      {"tag_scene", Task::kTagging, {Slot::kAccGs}},
      {"mot_ap", Task::kMot, {Slot::kApT}},
      {"mots_ap", Task::kMots, {Slot::kApR}},
      {"mot_assa", Task::kMot, {Slot::kAssaT}},
      {"mots_assa", Task::kMots, {Slot::kAssaR}},
  };
  return kRoutes;
}

const TaskRoute& find_route(const std::string& id) {
  for (const TaskRoute& r : routes()) {
    if (id == r.id) return r;
  }
  std::string known;
  for (const TaskRoute& r : routes()) known += std::string(known.empty() ? "" : ", ") + r.id;
  throw ValidationError("unknown task '" + id + "' (expected one of: " + known + ")");
}

int threshold_pct(double t) {
  const double scaled = t * 100.0;
  const double pct = std::round(scaled);
  if (!std::isfinite(t) || pct < 1 || pct > 100 || std::abs(scaled - pct) > 1e-9) {
    throw ValidationError("threshold must lie in (0, 1] with at most two decimals, got " + std::to_string(t));
  }
  return static_cast<int>(pct);
}

OksSigmas resolve_sigmas(const std::vector<double>& values) {
  if (values.size() != 1 && values.size() != kNumJoints) {
    throw ValidationError("expected 1 or " + std::to_string(kNumJoints) + " OKS sigmas, got " +
                          std::to_string(values.size()));
  }
  OksSigmas out{};
  for (std::size_t j = 0; j < kNumJoints; ++j) {
    const double v = values.size() == 1 ? values[0] : values[j];
    if (!std::isfinite(v) || v <= 0) throw ValidationError("OKS sigmas must be positive");
    out[j] = v;
  }
  return out;
}

json per_class_breakdown(const TaskScore& s) { return json{{"per_class", s.per_class}}; }

json ap_breakdown(const ApReport& r) {
  json classes = json::object();
  for (const ClassAp& c : r.classes) {
    classes[c.category] = {{"ap", c.mean_ap}, {"num_gt", c.num_gt}, {"ap_per_threshold", c.ap},
                           {"recall", c.recall}};
  }
  return {{"thresholds", r.thresholds}, {"ap_per_threshold", r.ap_at}, {"classes", std::move(classes)},
          {"absent", r.absent}};
}

}  // namespace

const std::vector<std::string>& evaluation_task_ids() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const TaskRoute& r : routes()) ids.emplace_back(r.id);
    return ids;
  }();
  return kIds;
}

Task base_task(const std::string& id) { return find_route(id).task; }

json evaluate_report(const EvalRequest& request) {
  const TaskRoute& route = find_route(request.task);
  if (request.workers < 1) throw ValidationError("workers must be at least 1");

  ApConfig ap_config;
  AssaConfig assa_config;
  json config = {{"task", request.task}, {"pred", request.pred.generic_string()},
                 {"gt", request.gt.generic_string()}};
  if (request.threshold) {
    const int pct = threshold_pct(*request.threshold);
    ap_config.iou_thresholds_pct = {pct};
    assa_config.alphas_pct = {pct};
    config["threshold"] = *request.threshold;
  }
  if (request.sigmas) {
    ap_config.sigmas = resolve_sigmas(*request.sigmas);
    config["sigmas"] = *request.sigmas;
  }
  LaneOptions lane;
  lane.bezier = request.bezier;
  if (request.subsample) {
    if (*request.subsample < 1) throw ValidationError("subsample must be at least 1");
    lane.subsample = *request.subsample;
    config["subsample"] = *request.subsample;
  }
  if (request.bezier) config["bezier"] = true;

  const FrameSet gts = load_label_file(request.gt, {route.task, false});
  const FrameSet preds = load_label_file(request.pred, {route.task, true});
  const int workers = request.workers;

  json scores = json::object();
  json breakdown = json::object();
  auto record = [&](const TaskScore& s, json detail) {
    const std::string key(slot_key(s.slot));
    scores[key] = s.value;
    breakdown[key] = std::move(detail);
  };
  auto wants = [&](Slot s) { return std::find(route.slots.begin(), route.slots.end(), s) != route.slots.end(); };

  switch (route.task) {
    case Task::kTagging:
      if (wants(Slot::kAccGw)) {
        const TaskScore s = tagging_accuracy(preds, gts, TagAttribute::kWeather);
        record(s, per_class_breakdown(s));
      }
      if (wants(Slot::kAccGs)) {
        const TaskScore s = tagging_accuracy(preds, gts, TagAttribute::kScene);
        record(s, per_class_breakdown(s));
      }
      break;
    case Task::kSemantic: {
      const TaskScore s = semantic_miou(preds, gts, workers);
      record(s, per_class_breakdown(s));
      break;
    }
    case Task::kDrivable: {
      const TaskScore s = drivable_miou(preds, gts, workers);
      record(s, per_class_breakdown(s));
      break;
    }
    case Task::kLane: {
      const TaskScore s = lane_boundary_iou(preds, gts, lane, workers);
      record(s, per_class_breakdown(s));
      break;
    }
    case Task::kDetection:
    case Task::kInstance:
    case Task::kPose: {
      const ApMode mode = route.task == Task::kDetection  ? ApMode::kBox
                          : route.task == Task::kInstance ? ApMode::kMask
                                                          : ApMode::kKeypoint;
      const ApReport r = evaluate_ap(preds, gts, mode, ap_config, workers);
      record(to_task_score(r, route.slots.front()), ap_breakdown(r));
      break;
    }
    case Task::kMot:
    case Task::kMots: {
      const bool boxes = route.task == Task::kMot;
      const Slot ap_slot = boxes ? Slot::kApT : Slot::kApR;
      const Slot assa_slot = boxes ? Slot::kAssaT : Slot::kAssaR;
      if (wants(ap_slot)) {
        const ApReport r = tracking_ap(preds, gts, boxes ? ApMode::kBox : ApMode::kMask, ap_config, workers);
        record(to_task_score(r, ap_slot), ap_breakdown(r));
      }
      if (wants(assa_slot)) {
        const AssocMode mode = boxes ? AssocMode::kBox : AssocMode::kMask;
        const TaskScore s =
            assa(build_track_set(preds, mode), build_track_set(gts, mode), mode, assa_config, workers);
        record(s, per_class_breakdown(s));
      }
      break;
    }
    case Task::kFlow: {
      const TaskScore s = flow_proxy_split(preds, gts, workers);
      record(s, per_class_breakdown(s));
      break;
    }
  }

  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"task", request.task},
          {"scores", std::move(scores)},
          {"breakdown", std::move(breakdown)},
          {"config", std::move(config)}};
}

SlotScores parse_slot_scores(const json& doc) {
  const json* map = &doc;
  if (doc.is_object() && doc.contains("scores") && doc["scores"].is_object()) map = &doc["scores"];
  if (!map->is_object()) throw ValidationError("scores document must be a JSON object of slot -> score");
  SlotScores out;
  for (const auto& [key, value] : map->items()) {
    const auto slot = parse_slot(key);
    if (!slot) throw ValidationError("unknown score slot '" + key + "'");
    if (!value.is_number()) throw ValidationError("score for '" + key + "' is not a number");
    out[static_cast<std::size_t>(*slot)] = value.get<double>();
  }
  return out;
}

ScalingTable parse_scaling_table(const json& doc) {
  const json* map = &doc;
  if (doc.is_object() && doc.contains("scales") && doc["scales"].is_object()) map = &doc["scales"];
  if (!map->is_object()) throw ValidationError("scales document must be a JSON object of slot -> scale");
  ScalingTable table;
  std::array<bool, kNumSlots> seen{};
  for (const auto& [key, value] : map->items()) {
    const auto slot = parse_slot(key);
    if (!slot) throw ValidationError("unknown scale slot '" + key + "'");
    ScaleEntry& e = table[static_cast<std::size_t>(*slot)];
    if (value.is_number()) {
      e.scale = value.get<double>();
    } else if (value.is_object() && value.contains("scale") && value["scale"].is_number()) {
      e.scale = value["scale"].get<double>();
      if (value.contains("sigma")) {
        if (!value["sigma"].is_number()) throw ValidationError("sigma for '" + key + "' is not a number");
        e.sigma = value["sigma"].get<double>();
      }
    } else {
      throw ValidationError("scale for '" + key + "' must be a number or {\"scale\", \"sigma\"}");
    }
    seen[static_cast<std::size_t>(*slot)] = true;
  }
  for (std::size_t i = 0; i < kNumSlots; ++i) {
    if (!seen[i]) throw ValidationError("scales document is missing slot '" + std::string(kSlotKeys[i]) + "'");
  }
  return table;
}

json scaling_table_to_json(const ScalingTable& table) {
  json out = json::object();
  for (std::size_t i = 0; i < kNumSlots; ++i) {
    json e = {{"scale", table[i].scale}};
    if (table[i].sigma) e["sigma"] = *table[i].sigma;
    out[std::string(kSlotKeys[i])] = std::move(e);
  }
  return out;
}

json vtda_report(const SlotScores& scores, const std::optional<ScalingTable>& user_scales, bool partial) {
  const ScalingTable table = user_scales ? *user_scales : default_scaling_table();
  const GroupScores g = vtda(scores, table, {partial});
  json echo = json::object();
  for (std::size_t i = 0; i < kNumSlots; ++i) {
    if (scores[i]) echo[std::string(kSlotKeys[i])] = *scores[i];
  }
  json groups = json::object();
  for (std::size_t i = 0; i < kGroupKeys.size(); ++i) {
    groups[std::string(kGroupKeys[i])] = g.present[i] ? json(g.groups[i]) : json(nullptr);
  }
  json missing = json::array();
  for (Slot s : g.missing) missing.push_back(slot_key(s));
  json warnings = json::array();
  if (user_scales) {
    for (const ScaleWarning& w : check_scaling_table(table)) warnings.push_back(w.message());
  }
  return {{"tool", kToolName},     {"version", kToolVersion},
          {"task", "vtda"},        {"scores", std::move(echo)},
          {"groups", std::move(groups)}, {"total", g.total},
          {"missing", std::move(missing)}, {"partial", partial},
          {"scales", scaling_table_to_json(table)}, {"warnings", std::move(warnings)}};
}

ScalingTable estimate_scaling_table(const json& baselines) {
  const json* list = &baselines;
  if (baselines.is_object() && baselines.contains("baselines")) list = &baselines["baselines"];
  if (!list->is_array()) throw ValidationError("baselines document must be a list of score mappings");
  std::vector<std::array<double, kNumSlots>> rows;
  for (const json& entry : *list) {
    const SlotScores s = parse_slot_scores(entry);
    std::array<double, kNumSlots> row{};
    for (std::size_t i = 0; i < kNumSlots; ++i) {
      if (!s[i]) throw ValidationError("baseline " + std::to_string(rows.size()) + " is missing slot '" +
                                       std::string(kSlotKeys[i]) + "'");
      row[i] = *s[i];
    }
    rows.push_back(row);
  }
  return estimate_sigmas(rows);
}

}  // namespace vtd
