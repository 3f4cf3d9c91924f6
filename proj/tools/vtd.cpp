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

#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vtd/cpf_plan.hpp"
#include "vtd/errors.hpp"
#include "vtd/evaluate.hpp"
#include "vtd/label_io.hpp"
#include "vtd/parallel.hpp"
#include "vtd/raster_io.hpp"

namespace {

using nlohmann::json;
using vtd::ValidationError;

json load_json(const std::string& path) {
  const std::string text = vtd::read_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw vtd::ParseError(path + ": " + e.what(), e.byte);
  }
}

// Values from a --config document; command-line flags take precedence.
class ConfigFile {
 public:
  ConfigFile(const std::string& path, std::set<std::string> known) {
    if (path.empty()) return;
    doc_ = load_json(path);
    if (!doc_.is_object()) throw ValidationError("config file must hold a JSON object");
    for (const auto& [key, value] : doc_.items()) {
      if (!known.count(normalize(key))) throw ValidationError("unknown config key '" + key + "'");
    }
  }

  const json* find(const std::string& key) const {
    for (const auto& [k, v] : doc_.items()) {
      if (normalize(k) == key) return &v;
    }
    return nullptr;
  }

  template <typename T>
  void merge(const CLI::Option* flag, const std::string& key, T& out) const {
    if (flag->count() > 0) return;
    if (const json* v = find(key)) out = as<T>(key, *v);
  }

  template <typename T>
  void merge(const CLI::Option* flag, const std::string& key, std::optional<T>& out, const T& flag_value) const {
    if (flag->count() > 0) {
      out = flag_value;
    } else if (const json* v = find(key)) {
      out = as<T>(key, *v);
    }
  }

  template <typename T>
  static T as(const std::string& key, const json& v) {
    try {
      return v.get<T>();
    } catch (const json::exception&) {
      throw ValidationError("config key '" + key + "' has the wrong type");
    }
  }

 private:
  static std::string normalize(std::string key) {
    for (char& c : key) {
      if (c == '-') c = '_';
    }
    return key;
  }

  json doc_ = json::object();
};

void emit(const json& doc, const std::string& out) {
  const std::string text = doc.dump(2) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    vtd::write_file(out, text);
  }
}

void print_scores(const json& scores, bool to_stdout) {
  if (!to_stdout) return;
  for (const auto& [slot, value] : scores.items()) {
    if (value.is_number()) std::printf("%-8s %8.3f\n", slot.c_str(), value.get<double>());
  }
}

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string task, pred, gt, out, config;
  int workers = vtd::default_workers();
  double threshold = 0;
  std::size_t subsample = 0;
  std::vector<double> sigmas;
  bool bezier = false;
  CLI::Option *o_task, *o_pred, *o_gt, *o_out, *o_workers, *o_threshold, *o_subsample, *o_sigmas, *o_bezier;
};

void add_evaluate(CLI::App& app, EvaluateArgs& a) {
  auto* cmd = app.add_subcommand("evaluate", "Score predictions against ground truth for one task");
  std::string tasks;
  for (const auto& id : vtd::evaluation_task_ids()) tasks += (tasks.empty() ? "" : ", ") + id;
  a.o_task = cmd->add_option("--task", a.task, "Task id: " + tasks);
  a.o_pred = cmd->add_option("--pred", a.pred, "Prediction label file");
  a.o_gt = cmd->add_option("--gt", a.gt, "Ground-truth label file");
  a.o_out = cmd->add_option("--out", a.out, "Report path (stdout when omitted)");
  a.o_workers = cmd->add_option("--workers", a.workers, "Worker threads");
  cmd->add_option("--config", a.config, "JSON file supplying any of the flags");
  a.o_threshold = cmd->add_option("--threshold", a.threshold, "Single AP / AssA similarity threshold");
  a.o_subsample = cmd->add_option("--subsample", a.subsample, "Lane ground-truth frames scored");
  a.o_sigmas = cmd->add_option("--sigmas", a.sigmas, "OKS sigmas: one value or 18, comma separated")->delimiter(',');
  a.o_bezier = cmd->add_flag("--bezier", a.bezier, "Interpolate Bezier lane segments");
}

int run_evaluate(EvaluateArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const ConfigFile cfg(a.config, {"task", "pred", "gt", "out", "workers", "threshold", "subsample", "sigmas",
                                  "bezier"});
  cfg.merge(a.o_task, "task", a.task);
  cfg.merge(a.o_pred, "pred", a.pred);
  cfg.merge(a.o_gt, "gt", a.gt);
  cfg.merge(a.o_out, "out", a.out);
  cfg.merge(a.o_workers, "workers", a.workers);
  cfg.merge(a.o_bezier, "bezier", a.bezier);
  vtd::EvalRequest req;
  cfg.merge(a.o_threshold, "threshold", req.threshold, a.threshold);
  cfg.merge(a.o_subsample, "subsample", req.subsample, a.subsample);
  cfg.merge(a.o_sigmas, "sigmas", req.sigmas, a.sigmas);
  if (a.task.empty()) throw ValidationError("--task is required");
  if (a.pred.empty()) throw ValidationError("--pred is required");
  if (a.gt.empty()) throw ValidationError("--gt is required");
  req.task = a.task;
  req.pred = a.pred;
  req.gt = a.gt;
  req.workers = a.workers;
  req.bezier = a.bezier;

  json report = vtd::evaluate_report(req);
  report["duration_ms"] = elapsed_ms(start);
  emit(report, a.out);
  print_scores(report["scores"], !a.out.empty() && a.out != "-");
  return 0;
}

// -------------------------------------------------------------------- vtda

struct VtdaArgs {
  std::string scores, scales, baselines, out, config;
  bool default_scales = false, partial = false;
  CLI::Option *o_scores, *o_scales, *o_baselines, *o_out, *o_default, *o_partial;
};

void add_vtda(CLI::App& app, VtdaArgs& a) {
  auto* cmd = app.add_subcommand("vtda", "Aggregate the 13 task scores into the composite score");
  a.o_scores = cmd->add_option("--scores", a.scores, "JSON mapping slot -> score (or an evaluate report)");
  a.o_scales = cmd->add_option("--scales", a.scales, "JSON scaling table");
  a.o_default = cmd->add_flag("--default-scales", a.default_scales, "Use the published scaling factors");
  a.o_partial = cmd->add_flag("--partial", a.partial, "Allow missing slots");
  a.o_baselines = cmd->add_option("--baselines", a.baselines,
                                  "Estimate a scaling table from a list of baseline score mappings");
  a.o_out = cmd->add_option("--out", a.out, "Report path (stdout when omitted)");
  cmd->add_option("--config", a.config, "JSON file supplying any of the flags");
}

int run_vtda(VtdaArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const ConfigFile cfg(a.config, {"scores", "scales", "default_scales", "partial", "baselines", "out"});
  cfg.merge(a.o_scores, "scores", a.scores);
  cfg.merge(a.o_scales, "scales", a.scales);
  cfg.merge(a.o_default, "default_scales", a.default_scales);
  cfg.merge(a.o_partial, "partial", a.partial);
  cfg.merge(a.o_baselines, "baselines", a.baselines);
  cfg.merge(a.o_out, "out", a.out);

  if (!a.baselines.empty()) {
    const vtd::ScalingTable table = vtd::estimate_scaling_table(load_json(a.baselines));
    emit(json{{"tool", vtd::kToolName}, {"version", vtd::kToolVersion}, {"task", "scales"},
              {"scales", vtd::scaling_table_to_json(table)}},
         a.out);
    return 0;
  }
  if (a.scores.empty()) throw ValidationError("--scores is required");
  if (!a.scales.empty() && a.default_scales) {
    throw ValidationError("--scales and --default-scales are mutually exclusive");
  }
  const vtd::SlotScores scores = vtd::parse_slot_scores(load_json(a.scores));
  std::optional<vtd::ScalingTable> table;
  if (!a.scales.empty()) table = vtd::parse_scaling_table(load_json(a.scales));
  json report = vtd::vtda_report(scores, table, a.partial);
  for (const auto& w : report["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
  report["duration_ms"] = elapsed_ms(start);
  emit(report, a.out);
  if (!a.out.empty() && a.out != "-") {
    for (std::string_view key : vtd::kGroupKeys) {
      const json& value = report["groups"][std::string(key)];
      if (value.is_number()) std::printf("%-5s %8.3f\n", std::string(key).c_str(), value.get<double>());
    }
    std::printf("%-5s %8.3f\n", "total", report["total"].get<double>());
  }
  return 0;
}

// ---------------------------------------------------------------- schedule

struct ScheduleArgs {
  std::string config, kind = "schedule", strategy = "round_robin", out;
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  std::uint32_t batch_size = 16, epochs = 1;
  CLI::Option *o_kind, *o_strategy, *o_out, *o_sets, *o_seed, *o_batch, *o_epochs;
};

void add_schedule(CLI::App& app, ScheduleArgs& a) {
  auto* cmd = app.add_subcommand("schedule", "Write a batch schedule or a curriculum stage plan");
  cmd->add_option("--config", a.config, "JSON plan configuration");
  a.o_kind = cmd->add_option("--kind", a.kind, "schedule or curriculum");
  a.o_strategy = cmd->add_option("--strategy", a.strategy, "round_robin, none, uniform or weighted");
  a.o_sets = cmd->add_option("--sets", a.sets, "Preset image sets, comma separated")->delimiter(',');
  a.o_seed = cmd->add_option("--seed", a.seed, "Shuffle seed");
  a.o_batch = cmd->add_option("--batch-size", a.batch_size, "Samples per batch");
  a.o_epochs = cmd->add_option("--epochs", a.epochs, "Epochs to plan");
  a.o_out = cmd->add_option("--out", a.out, "Plan path (stdout when omitted)");
}

std::vector<vtd::ImageSetSpec> parse_sets(const json& doc) {
  if (!doc.is_array()) throw ValidationError("sets must be a list");
  std::vector<vtd::ImageSetSpec> sets;
  for (const json& s : doc) {
    if (s.is_string()) {
      sets.push_back(vtd::preset_set(s.get<std::string>()));
    } else if (s.is_object() && s.contains("id") && s["id"].is_string() && s.contains("count") &&
               s["count"].is_number_unsigned()) {
      vtd::ImageSetSpec spec{s["id"].get<std::string>(), s["count"].get<std::uint32_t>(), {}};
      if (s.contains("tasks")) spec.tasks = ConfigFile::as<std::vector<std::string>>("tasks", s["tasks"]);
      sets.push_back(std::move(spec));
    } else {
      throw ValidationError("each set must be a preset id or {\"id\", \"count\", \"tasks\"}");
    }
  }
  return sets;
}

int run_schedule(ScheduleArgs& a) {
  const ConfigFile cfg(a.config, {"kind", "strategy", "sets", "seed", "batch_size", "epochs", "out",
                                  "joint_epochs", "decay_epochs", "finetune_epochs", "finetune_lr_mult",
                                  "use_pseudolabels", "use_mots_subset"});
  cfg.merge(a.o_kind, "kind", a.kind);
  cfg.merge(a.o_out, "out", a.out);
  if (a.kind == "curriculum") {
    vtd::CurriculumConfig c;
    auto take = [&](const char* key, auto& field) {
      if (const json* v = cfg.find(key)) field = ConfigFile::as<std::decay_t<decltype(field)>>(key, *v);
    };
    take("joint_epochs", c.joint_epochs);
    take("decay_epochs", c.decay_epochs);
    take("finetune_epochs", c.finetune_epochs);
    take("finetune_lr_mult", c.finetune_lr_mult);
    take("use_pseudolabels", c.use_pseudolabels);
    take("use_mots_subset", c.use_mots_subset);
    emit(vtd::stage_plan_to_json(vtd::curriculum_plan(c)), a.out);
    return 0;
  }
  if (a.kind != "schedule") throw ValidationError("unknown plan kind '" + a.kind + "'");
  cfg.merge(a.o_strategy, "strategy", a.strategy);
  cfg.merge(a.o_seed, "seed", a.seed);
  cfg.merge(a.o_batch, "batch_size", a.batch_size);
  cfg.merge(a.o_epochs, "epochs", a.epochs);
  const auto strategy = vtd::parse_strategy(a.strategy);
  if (!strategy) {
    throw ValidationError("unknown sampling strategy '" + a.strategy +
                          "' (expected round_robin, none, uniform or weighted)");
  }
  std::vector<vtd::ImageSetSpec> sets;
  if (a.o_sets->count() > 0) {
    sets = parse_sets(json(a.sets));
  } else if (const json* v = cfg.find("sets")) {
    sets = parse_sets(*v);
  } else {
    sets = vtd::joint_training_sets();
  }
  emit(vtd::schedule_to_json(vtd::build_schedule(sets, a.batch_size, *strategy, a.seed, a.epochs)), a.out);
  return 0;
}

// ------------------------------------------------------------------ filter

struct FilterArgs {
  std::string task, pred, confidence, out, config;
  double threshold = 0;
  CLI::Option *o_task, *o_pred, *o_confidence, *o_out, *o_threshold;
};

void add_filter(CLI::App& app, FilterArgs& a) {
  auto* cmd = app.add_subcommand("filter", "Drop low-confidence pseudo-labels");
  a.o_task = cmd->add_option("--task", a.task, "pose or sem");
  a.o_pred = cmd->add_option("--pred", a.pred, "Pseudo-label file (label JSON for pose, PGM for sem)");
  a.o_confidence = cmd->add_option("--confidence", a.confidence, "PFM per-pixel confidence (sem)");
  a.o_threshold = cmd->add_option("--threshold", a.threshold, "Confidence threshold (pose 0.2, sem 0.3)");
  a.o_out = cmd->add_option("--out", a.out, "Output path");
  cmd->add_option("--config", a.config, "JSON file supplying any of the flags");
}

int run_filter(FilterArgs& a) {
  const ConfigFile cfg(a.config, {"task", "pred", "confidence", "threshold", "out"});
  cfg.merge(a.o_task, "task", a.task);
  cfg.merge(a.o_pred, "pred", a.pred);
  cfg.merge(a.o_confidence, "confidence", a.confidence);
  cfg.merge(a.o_out, "out", a.out);
  std::optional<double> threshold;
  cfg.merge(a.o_threshold, "threshold", threshold, a.threshold);
  if (a.pred.empty()) throw ValidationError("--pred is required");
  if (a.task == "pose") {
    const vtd::FrameSet in = vtd::load_label_file(a.pred);
    emit(vtd::to_label_json(vtd::filter_pose_pseudolabels(in, threshold.value_or(0.2))), a.out);
    return 0;
  }
  if (a.task == "sem") {
    if (a.confidence.empty()) throw ValidationError("--confidence is required for sem");
    if (a.out.empty() || a.out == "-") throw ValidationError("--out is required for sem");
    vtd::SemanticMap map = vtd::read_pgm(vtd::as_bytes(vtd::read_file(a.pred)));
    int h = 0, w = 0;
    map.confidence = vtd::read_pfm(vtd::as_bytes(vtd::read_file(a.confidence)), h, w);
    if (h != map.height || w != map.width) {
      throw ValidationError("confidence map is " + std::to_string(h) + "x" + std::to_string(w) +
                            " but the class map is " + std::to_string(map.height) + "x" +
                            std::to_string(map.width));
    }
    vtd::write_file(a.out, vtd::write_pgm(vtd::filter_seg_pseudolabels(map, threshold.value_or(0.3))));
    return 0;
  }
  throw ValidationError("filter supports --task pose or sem, got '" + a.task + "'");
}

// ---------------------------------------------------------------- validate

struct ValidateArgs {
  std::string task, pred, gt, config;
  CLI::Option *o_task, *o_pred, *o_gt;
};

void add_validate(CLI::App& app, ValidateArgs& a) {
  auto* cmd = app.add_subcommand("validate", "Check a label file against a task's schema");
  a.o_task = cmd->add_option("--task", a.task, "Task id");
  a.o_pred = cmd->add_option("--pred", a.pred, "Prediction file (scores required)");
  a.o_gt = cmd->add_option("--gt", a.gt, "Ground-truth file");
  cmd->add_option("--config", a.config, "JSON file supplying any of the flags");
}

int run_validate(ValidateArgs& a) {
  const ConfigFile cfg(a.config, {"task", "pred", "gt"});
  cfg.merge(a.o_task, "task", a.task);
  cfg.merge(a.o_pred, "pred", a.pred);
  cfg.merge(a.o_gt, "gt", a.gt);
  if (a.task.empty()) throw ValidationError("--task is required");
  if (a.pred.empty() == a.gt.empty()) throw ValidationError("give exactly one of --pred or --gt");
  const bool predictions = !a.pred.empty();
  const std::string& path = predictions ? a.pred : a.gt;
  const auto diagnostics = vtd::check_label_file(vtd::read_file(path), {vtd::base_task(a.task), predictions});
  for (const auto& d : diagnostics) std::cerr << path << ": " << d.to_string() << "\n";
  if (!diagnostics.empty()) {
    std::cerr << diagnostics.size() << " problem(s) found\n";
    return 1;
  }
  std::cout << path << ": ok\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Video Task Decathlon evaluation toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vtd::kToolVersion);
  EvaluateArgs eval_args;
  VtdaArgs vtda_args;
  ScheduleArgs schedule_args;
  FilterArgs filter_args;
  ValidateArgs validate_args;
  add_evaluate(app, eval_args);
  add_vtda(app, vtda_args);
  add_schedule(app, schedule_args);
  add_filter(app, filter_args);
  add_validate(app, validate_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "evaluate") return run_evaluate(eval_args);
    if (cmd == "vtda") return run_vtda(vtda_args);
    if (cmd == "schedule") return run_schedule(schedule_args);
    if (cmd == "filter") return run_filter(filter_args);
    return run_validate(validate_args);
  } catch (const vtd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
