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
#include <string_view>
#include <vector>

#include "json.hpp"
#include "vtd/task.hpp"
#include "vtd/types.hpp"

namespace vtd {

struct ParseOptions {
  // Enables the task's vocabulary and required-geometry checks.
  std::optional<Task> task;
  // Prediction files must carry scores for score-ranked tasks.
  bool predictions = false;
};

struct Diagnostic {
  std::string frame;  // frame name, or "<document>"
  std::string field;
  std::string message;

  std::string to_string() const;
};

// Parses a Scalabel-style label document (a JSON list of frames, or an
// object with a "frames" list). Frames are returned sorted by
// (videoName, frameIndex, name); unknown fields are ignored.
// Throws ParseError on malformed JSON and ValidationError naming frame and
// field on schema violations.
FrameSet parse_label_file(std::string_view text, const ParseOptions& options = {});

// Same checks as parse_label_file, but collects every schema diagnostic
// instead of throwing on the first. Still throws ParseError on bad syntax.
std::vector<Diagnostic> check_label_file(std::string_view text,
                                         const ParseOptions& options = {});

// Reads and parses a label file. Relative flowPath / labelPath entries are
// resolved against the file's directory. Throws IoError when unreadable.
FrameSet load_label_file(const std::filesystem::path& path,
                         const ParseOptions& options = {});

// Serializes frames in the label-file schema (RLE counts as COCO strings).
// parse_label_file(to_label_json(s).dump()) reproduces s up to frame order.
nlohmann::json to_label_json(const FrameSet& frames);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

}  // namespace vtd
