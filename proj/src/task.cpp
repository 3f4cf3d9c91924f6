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

#include "vtd/task.hpp"

#include <array>
#include <utility>

#include "vtd/vocabulary.hpp"

namespace vtd {

namespace {

constexpr std::array<std::pair<Task, std::string_view>, 10> kTaskNames = {{
    {Task::kTagging, "tag"},
    {Task::kSemantic, "sem"},
    {Task::kDrivable, "drivable"},
    {Task::kLane, "lane"},
    {Task::kDetection, "det"},
    {Task::kInstance, "ins"},
    {Task::kPose, "pose"},
    {Task::kMot, "mot"},
    {Task::kMots, "mots"},
    {Task::kFlow, "flow"},
}};

}  // namespace

std::string_view task_name(Task task) {
  for (const auto& [t, name] : kTaskNames) {
    if (t == task) return name;
  }
  return "unknown";
}

std::optional<Task> parse_task(std::string_view name) {
  for (const auto& [t, n] : kTaskNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

bool is_object_task(Task task) {
  switch (task) {
    case Task::kDetection:
    case Task::kInstance:
    case Task::kPose:
    case Task::kMot:
    case Task::kMots:
      return true;
    default:
      return false;
  }
}

bool is_tracking_task(Task task) { return task == Task::kMot || task == Task::kMots; }

namespace vocab {

std::optional<int> semantic_class(std::string_view name) {
  if (name == "person") return index_of(kSemanticClasses, "pedestrian");
  return index_of(kSemanticClasses, name);
}

}  // namespace vocab

}  // namespace vtd
