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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <chrono>

#include "vtd/cpf_plan.hpp"
#include "vtd/errors.hpp"
#include "vtd/evaluate.hpp"

namespace py = pybind11;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string evaluate(const std::string& task, const std::string& pred, const std::string& gt, int workers,
                     std::optional<double> threshold, std::optional<std::size_t> subsample,
                     std::optional<std::vector<double>> sigmas, bool bezier) {
  vtd::EvalRequest r;
  r.task = task;
  r.pred = pred;
  r.gt = gt;
  r.workers = workers;
  r.threshold = threshold;
  r.subsample = subsample;
  r.sigmas = std::move(sigmas);
  r.bezier = bezier;
  const auto start = std::chrono::steady_clock::now();
  nlohmann::json report;
  {
    py::gil_scoped_release release;
    report = vtd::evaluate_report(r);
  }
  report["duration_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report.dump();
}

std::string vtda(const std::string& scores_json, std::optional<std::string> scales_json, bool partial) {
  const vtd::SlotScores scores = vtd::parse_slot_scores(nlohmann::json::parse(scores_json));
  std::optional<vtd::ScalingTable> scales;
  if (scales_json) scales = vtd::parse_scaling_table(nlohmann::json::parse(*scales_json));
  return vtd::vtda_report(scores, scales, partial).dump();
}

std::string schedule(const std::vector<std::string>& sets, const std::string& strategy, std::uint64_t seed,
                     std::uint32_t batch_size, std::uint32_t epochs) {
  const auto s = vtd::parse_strategy(strategy);
  if (!s) throw vtd::ValidationError("unknown strategy '" + strategy + "'");
  std::vector<vtd::ImageSetSpec> specs;
  for (const auto& id : sets) specs.push_back(vtd::preset_set(id));
  if (specs.empty()) specs = vtd::joint_training_sets();
  return vtd::schedule_to_json(vtd::build_schedule(specs, batch_size, *s, seed, epochs)).dump();
}

}  // namespace

PYBIND11_MODULE(_vtd, m) {
  m.doc() = "Video Task Decathlon evaluation toolkit";
  m.attr("__version__") = vtd::kToolVersion;

  auto validation = py::register_exception<vtd::ValidationError>(m, "ValidationError", PyExc_ValueError);
  auto io = py::register_exception<vtd::IoError>(m, "IoError", PyExc_OSError);
  auto format = py::register_exception<vtd::FormatError>(m, "FormatError", PyExc_ValueError);
  validation.attr("exit_code") = 1;
  io.attr("exit_code") = 2;
  format.attr("exit_code") = 2;

  m.def("_evaluate", &evaluate, py::arg("task"), py::arg("pred"), py::arg("gt"), py::arg("workers") = 1,
        py::arg("threshold") = py::none(), py::arg("subsample") = py::none(), py::arg("sigmas") = py::none(),
        py::arg("bezier") = false);
  m.def("_vtda", &vtda, py::arg("scores"), py::arg("scales") = py::none(), py::arg("partial") = false);
  m.def("_schedule", &schedule, py::arg("sets"), py::arg("strategy"), py::arg("seed"), py::arg("batch_size"),
        py::arg("epochs"));
  m.def("task_ids", &vtd::evaluation_task_ids);
}
