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

#include <optional>
#include <string>
#include <string_view>

namespace vtd {

// The ten benchmark tasks.
enum class Task {
  kTagging,
  kSemantic,
  kDrivable,
  kLane,
  kDetection,
  kInstance,
  kPose,
  kMot,
  kMots,
  kFlow,
};

std::string_view task_name(Task task);
std::optional<Task> parse_task(std::string_view name);

// Tasks whose labels are the eight object categories.
bool is_object_task(Task task);
bool is_tracking_task(Task task);

}  // namespace vtd
