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

#include "vtd/label_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "vtd/errors.hpp"
#include "vtd/rle.hpp"
#include "vtd/vocabulary.hpp"

namespace vtd {

using nlohmann::json;

std::string Diagnostic::to_string() const {
  return "frame '" + frame + "', field '" + field + "': " + message;
}

namespace {

class DocumentReader {
 public:
  explicit DocumentReader(const ParseOptions& options) : options_(options) {}

  FrameSet read(const json& doc) {
    const json* frames = &doc;
    if (doc.is_object() && doc.contains("frames")) frames = &doc["frames"];
    if (!frames->is_array()) {
      report("<document>", "frames", "top level must be a list of frames");
      return {};
    }
    FrameSet out;
    out.frames.reserve(frames->size());
    for (std::size_t i = 0; i < frames->size(); ++i) {
      if (auto frame = read_frame((*frames)[i], i)) out.frames.push_back(std::move(*frame));
    }
    std::stable_sort(out.frames.begin(), out.frames.end(), [](const Frame& a, const Frame& b) {
      return std::tie(a.video_name, a.frame_index, a.name) <
             std::tie(b.video_name, b.frame_index, b.name);
    });
    check_sequences(out);
    return out;
  }

  const std::vector<Diagnostic>& diagnostics() const { return diags_; }
  // Index of the first diagnostic raised by a corrupt mask.
  std::optional<std::size_t> first_corrupt() const { return first_corrupt_; }

 private:
  void report(std::string frame, std::string field, std::string message) {
    diags_.push_back({std::move(frame), std::move(field), std::move(message)});
  }

  std::optional<Frame> read_frame(const json& j, std::size_t position) {
    const std::string where = "#" + std::to_string(position);
    if (!j.is_object()) {
      report(where, "", "frame must be an object");
      return std::nullopt;
    }
    Frame f;
    if (!j.contains("name") || !j["name"].is_string()) {
      report(where, "name", "missing required string field");
      return std::nullopt;
    }
    f.name = j["name"].get<std::string>();
    if (auto it = j.find("videoName"); it != j.end() && !it->is_null()) {
      if (it->is_string()) {
        f.video_name = it->get<std::string>();
      } else {
        report(f.name, "videoName", "must be a string");
      }
    }
    if (auto it = j.find("frameIndex"); it != j.end() && !it->is_null()) {
      if (it->is_number_integer() && it->get<std::int64_t>() >= 0) {
        f.frame_index = it->get<std::int64_t>();
      } else {
        report(f.name, "frameIndex", "must be a non-negative integer");
      }
    }
    if (auto it = j.find("attributes"); it != j.end() && it->is_object()) {
      read_tag(f, *it, "weather", vocab::kWeather, f.attributes.weather);
      read_tag(f, *it, "scene", vocab::kScene, f.attributes.scene);
    }
    read_dimension(f, j, "height", f.height);
    read_dimension(f, j, "width", f.width);
    read_path(f, j, "flowPath", f.flow_path);
    read_path(f, j, "labelPath", f.label_path);

    if (auto it = j.find("labels"); it != j.end() && !it->is_null()) {
      if (!it->is_array()) {
        report(f.name, "labels", "must be a list");
      } else {
        for (std::size_t i = 0; i < it->size(); ++i) {
          if (auto label = read_label(f.name, (*it)[i], i)) f.labels.push_back(std::move(*label));
        }
      }
    }
    check_frame(f);
    return f;
  }

  template <std::size_t N>
  void read_tag(const Frame& f, const json& attrs, const char* key,
                const std::array<std::string_view, N>& names,
                std::optional<std::string>& out) {
    auto it = attrs.find(key);
    if (it == attrs.end() || it->is_null()) return;
    if (!it->is_string()) {
      report(f.name, std::string("attributes.") + key, "must be a string");
      return;
    }
    auto value = it->get<std::string>();
    if (!vocab::contains(names, value)) {
      report(f.name, std::string("attributes.") + key, "unknown value '" + value + "'");
      return;
    }
    out = std::move(value);
  }

  void read_dimension(const Frame& f, const json& j, const char* key, std::optional<int>& out) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    if (!it->is_number_integer() || it->get<long long>() <= 0 || it->get<long long>() > 1 << 16) {
      report(f.name, key, "must be a positive integer");
      return;
    }
    out = it->get<int>();
  }

  void read_path(const Frame& f, const json& j, const char* key, std::optional<std::string>& out) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return;
    if (!it->is_string()) {
      report(f.name, key, "must be a string");
      return;
    }
    out = it->get<std::string>();
  }

  static bool read_number(const json& j, double& out) {
    if (!j.is_number()) return false;
    out = j.get<double>();
    return std::isfinite(out);
  }

  std::optional<Label> read_label(const std::string& frame, const json& j, std::size_t position) {
    const std::string where = "labels[" + std::to_string(position) + "]";
    if (!j.is_object()) {
      report(frame, where, "label must be an object");
      return std::nullopt;
    }
    Label l;
    if (auto it = j.find("id"); it != j.end() && !it->is_null()) {
      if (it->is_string()) {
        l.id = it->get<std::string>();
      } else if (it->is_number_integer()) {
        l.id = std::to_string(it->get<long long>());
      } else {
        report(frame, where + ".id", "must be a string or integer");
      }
    } else {
      l.id = std::to_string(position);
    }
    if (!j.contains("category") || !j["category"].is_string()) {
      report(frame, where + ".category", "missing required string field");
      return std::nullopt;
    }
    l.category = j["category"].get<std::string>();

    if (auto it = j.find("score"); it != j.end() && !it->is_null()) {
      double s = 0;
      if (!read_number(*it, s) || s < 0.0 || s > 1.0) {
        report(frame, where + ".score", "must be a number in [0, 1]");
      } else {
        l.score = s;
      }
    }
    if (auto it = j.find("box2d"); it != j.end() && !it->is_null()) read_box(frame, where, *it, l);
    if (auto it = j.find("rle"); it != j.end() && !it->is_null()) read_rle(frame, where, *it, l);
    if (auto it = j.find("poly2d"); it != j.end() && !it->is_null()) read_poly(frame, where, *it, l);
    if (auto it = j.find("graph"); it != j.end() && !it->is_null()) read_graph(frame, where, *it, l);
    if (auto it = j.find("attributes"); it != j.end() && it->is_object()) {
      if (auto d = it->find("laneDirection"); d != it->end() && d->is_string()) {
        l.lane.direction = d->get<std::string>();
      }
      if (auto s = it->find("laneStyle"); s != it->end() && s->is_string()) {
        l.lane.style = s->get<std::string>();
      }
    }
    if (!l.has_geometry()) {
      report(frame, where, "label '" + l.id + "' has no geometry (box2d, rle, poly2d or graph)");
    }
    check_label(frame, where, l);
    return l;
  }

  void read_box(const std::string& frame, const std::string& where, const json& j, Label& l) {
    Box2D b;
    if (!j.is_object() || !j.contains("x1") || !j.contains("y1") || !j.contains("x2") ||
        !j.contains("y2") || !read_number(j["x1"], b.x1) || !read_number(j["y1"], b.y1) ||
        !read_number(j["x2"], b.x2) || !read_number(j["y2"], b.y2)) {
      report(frame, where + ".box2d", "needs finite numbers x1, y1, x2, y2");
      return;
    }
    if (b.x1 > b.x2 || b.y1 > b.y2) {
      report(frame, where + ".box2d", "requires x1 <= x2 and y1 <= y2");
      return;
    }
    l.box2d = b;
  }

  void read_rle(const std::string& frame, const std::string& where, const json& j, Label& l) {
    if (!j.is_object() || !j.contains("size") || !j["size"].is_array() || j["size"].size() != 2 ||
        !j["size"][0].is_number_integer() || !j["size"][1].is_number_integer() ||
        !j.contains("counts")) {
      report(frame, where + ".rle", "needs counts and size [height, width]");
      return;
    }
    const long long h = j["size"][0].get<long long>();
    const long long w = j["size"][1].get<long long>();
    if (h <= 0 || w <= 0 || h > 1 << 16 || w > 1 << 16) {
      report(frame, where + ".rle.size", "dimensions must be positive");
      return;
    }
    try {
      const json& counts = j["counts"];
      if (counts.is_string()) {
        l.rle = rle_from_string(counts.get<std::string>(), static_cast<int>(h), static_cast<int>(w));
      } else if (counts.is_array()) {
        RleMask m{static_cast<int>(h), static_cast<int>(w), {}};
        for (const auto& c : counts) {
          if (!c.is_number_integer() || c.get<long long>() < 0) {
            throw CorruptMaskError("uncompressed counts must be non-negative integers");
          }
          m.runs.push_back(static_cast<std::uint32_t>(c.get<long long>()));
        }
        check_rle(m);
        l.rle = std::move(m);
      } else {
        report(frame, where + ".rle.counts", "must be a string or a list of integers");
      }
    } catch (const CorruptMaskError& e) {
      if (!first_corrupt_) first_corrupt_ = diags_.size();
      report(frame, where + ".rle", e.what());
    }
  }

  void read_poly(const std::string& frame, const std::string& where, const json& j, Label& l) {
    if (!j.is_array()) {
      report(frame, where + ".poly2d", "must be a list of polylines");
      return;
    }
    for (const auto& p : j) {
      Poly2D poly;
      if (!p.is_object() || !p.contains("vertices") || !p["vertices"].is_array()) {
        report(frame, where + ".poly2d", "polyline needs a vertices list");
        continue;
      }
      bool ok = true;
      for (const auto& v : p["vertices"]) {
        Vertex vx;
        if (!v.is_array() || v.size() != 2 || !read_number(v[0], vx.x) || !read_number(v[1], vx.y)) {
          ok = false;
          break;
        }
        poly.vertices.push_back(vx);
      }
      if (!ok) {
        report(frame, where + ".poly2d.vertices", "vertices must be [x, y] number pairs");
        continue;
      }
      if (auto t = p.find("types"); t != p.end() && t->is_string()) {
        poly.types = t->get<std::string>();
        if (poly.types.size() != poly.vertices.size()) {
          report(frame, where + ".poly2d.types", "needs one type per vertex");
          continue;
        }
      } else {
        poly.types.assign(poly.vertices.size(), 'L');
      }
      if (auto c = p.find("closed"); c != p.end() && c->is_boolean()) poly.closed = c->get<bool>();
      l.poly2d.push_back(std::move(poly));
    }
  }

  void read_graph(const std::string& frame, const std::string& where, const json& j, Label& l) {
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array()) {
      report(frame, where + ".graph", "needs a nodes list");
      return;
    }
    const json& nodes = j["nodes"];
    if (nodes.size() != kNumJoints) {
      report(frame, where + ".graph.nodes",
             "pose needs exactly " + std::to_string(kNumJoints) + " joints, got " +
                 std::to_string(nodes.size()));
      return;
    }
    Keypoints kp;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const json& n = nodes[i];
      Joint& joint = kp.joints[i];
      if (!n.is_object() || !n.contains("location") || !n["location"].is_array() ||
          n["location"].size() != 2 || !read_number(n["location"][0], joint.x) ||
          !read_number(n["location"][1], joint.y)) {
        report(frame, where + ".graph.nodes[" + std::to_string(i) + "]",
               "needs location [x, y]");
        return;
      }
      joint.score = 1.0;
      if (auto s = n.find("score"); s != n.end() && !s->is_null()) {
        if (!read_number(*s, joint.score) || joint.score < 0.0 || joint.score > 1.0) {
          report(frame, where + ".graph.nodes[" + std::to_string(i) + "].score",
                 "must be a number in [0, 1]");
          return;
        }
      } else if (auto v = n.find("visibility"); v != n.end() && v->is_string()) {
        const auto vis = v->get<std::string>();
        joint.score = (vis == "N" || vis == "invisible") ? 0.0 : 1.0;
      }
    }
    l.graph = kp;
  }

  void check_label(const std::string& frame, const std::string& where, const Label& l) {
    if (!options_.task) return;
    const Task task = *options_.task;
    auto require = [&](bool present, const char* field) {
      if (!present) report(frame, where + "." + field, "required for task " + std::string(task_name(task)));
    };
    if (is_object_task(task)) {
      if (!vocab::contains(vocab::kObjectCategories, l.category)) {
        report(frame, where + ".category", "category '" + l.category + "' is not an object category");
      }
      if (options_.predictions) require(l.score.has_value(), "score");
    }
    switch (task) {
      case Task::kDetection:
      case Task::kMot:
        require(l.box2d.has_value(), "box2d");
        break;
      case Task::kInstance:
      case Task::kMots:
      case Task::kFlow:
        require(l.rle.has_value(), "rle");
        break;
      case Task::kPose:
        require(l.graph.has_value(), "graph");
        if (!options_.predictions) require(l.box2d.has_value(), "box2d");
        break;
      case Task::kLane:
        require(!l.poly2d.empty(), "poly2d");
        if (!vocab::contains(vocab::kLaneCategories, l.category)) {
          report(frame, where + ".category", "category '" + l.category + "' is not a lane category");
        }
        if (!vocab::contains(vocab::kLaneDirections, l.lane.direction)) {
          report(frame, where + ".attributes.laneDirection", "must be parallel or vertical");
        }
        if (!vocab::contains(vocab::kLaneStyles, l.lane.style)) {
          report(frame, where + ".attributes.laneStyle", "must be solid or dashed");
        }
        break;
      case Task::kSemantic:
        require(l.rle.has_value(), "rle");
        if (!vocab::semantic_class(l.category)) {
          report(frame, where + ".category", "category '" + l.category + "' is not a semantic class");
        }
        break;
      case Task::kDrivable:
        require(l.rle.has_value(), "rle");
        if (!vocab::contains(vocab::kDrivableClasses, l.category)) {
          report(frame, where + ".category", "category '" + l.category + "' is not a drivable class");
        }
        break;
      case Task::kTagging:
        break;
    }
  }

  void check_frame(const Frame& f) {
    if (!options_.task) return;
    const Task task = *options_.task;
    if (task == Task::kTagging) {
      if (!f.attributes.weather) report(f.name, "attributes.weather", "required for task tag");
      if (!f.attributes.scene) report(f.name, "attributes.scene", "required for task tag");
    }
    if (is_tracking_task(task) || (task == Task::kFlow && !options_.predictions)) {
      if (!f.video_name) report(f.name, "videoName", "required for tracking tasks");
      if (!f.frame_index) report(f.name, "frameIndex", "required for tracking tasks");
    }
    if (task == Task::kFlow && options_.predictions) {
      if (!f.video_name || !f.frame_index) {
        report(f.name, "videoName", "flow predictions need videoName and frameIndex");
      }
    }
  }

  void check_sequences(const FrameSet& set) {
    std::set<std::pair<std::string, std::int64_t>> seen_frames;
    std::set<std::tuple<std::string, std::string, std::int64_t>> seen_ids;
    std::map<std::pair<std::string, std::string>, std::string> track_category;
    const bool tracking = options_.task && (is_tracking_task(*options_.task) ||
                                            *options_.task == Task::kFlow);
    for (const Frame& f : set.frames) {
      if (!f.video_name || !f.frame_index) continue;
      if (!seen_frames.emplace(*f.video_name, *f.frame_index).second) {
        report(f.name, "frameIndex",
               "duplicate frameIndex " + std::to_string(*f.frame_index) + " in video '" +
                   *f.video_name + "'");
      }
      if (!tracking) continue;
      for (const Label& l : f.labels) {
        if (!seen_ids.emplace(*f.video_name, l.id, *f.frame_index).second) {
          report(f.name, "labels.id",
                 "duplicate track id '" + l.id + "' at frameIndex " +
                     std::to_string(*f.frame_index));
        }
        auto [it, inserted] = track_category.emplace(std::make_pair(*f.video_name, l.id), l.category);
        if (!inserted && it->second != l.category) {
          report(f.name, "labels.category",
                 "track '" + l.id + "' changes category from '" + it->second + "' to '" +
                     l.category + "'");
        }
      }
    }
  }

  ParseOptions options_;
  std::vector<Diagnostic> diags_;
  std::optional<std::size_t> first_corrupt_;
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed label file: ") + e.what(), e.byte);
  }
}

}  // namespace

FrameSet parse_label_file(std::string_view text, const ParseOptions& options) {
  DocumentReader reader(options);
  FrameSet out = reader.read(parse_json(text));
  if (!reader.diagnostics().empty()) {
    if (auto i = reader.first_corrupt()) {
      throw CorruptMaskError("corrupt mask: " + reader.diagnostics()[*i].to_string());
    }
    const auto& d = reader.diagnostics().front();
    std::string msg = "invalid label file: " + d.to_string();
    if (reader.diagnostics().size() > 1) {
      msg += " (and " + std::to_string(reader.diagnostics().size() - 1) + " more)";
    }
    throw ValidationError(msg);
  }
  return out;
}

std::vector<Diagnostic> check_label_file(std::string_view text, const ParseOptions& options) {
  DocumentReader reader(options);
  reader.read(parse_json(text));
  return reader.diagnostics();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

FrameSet load_label_file(const std::filesystem::path& path, const ParseOptions& options) {
  FrameSet set = parse_label_file(read_file(path), options);
  const auto base = path.parent_path();
  for (Frame& f : set.frames) {
    for (auto* p : {&f.flow_path, &f.label_path}) {
      if (*p && std::filesystem::path(**p).is_relative()) *p = (base / **p).string();
    }
  }
  return set;
}

}  // namespace vtd

namespace vtd {

nlohmann::json to_label_json(const FrameSet& frames) {
  using nlohmann::json;
  json out = json::array();
  for (const Frame& f : frames.frames) {
    json jf = {{"name", f.name}};
    if (f.video_name) jf["videoName"] = *f.video_name;
    if (f.frame_index) jf["frameIndex"] = *f.frame_index;
    if (f.attributes.weather || f.attributes.scene) {
      json attrs = json::object();
      if (f.attributes.weather) attrs["weather"] = *f.attributes.weather;
      if (f.attributes.scene) attrs["scene"] = *f.attributes.scene;
      jf["attributes"] = std::move(attrs);
    }
    if (f.height) jf["height"] = *f.height;
    if (f.width) jf["width"] = *f.width;
    if (f.flow_path) jf["flowPath"] = *f.flow_path;
    if (f.label_path) jf["labelPath"] = *f.label_path;
    json labels = json::array();
    for (const Label& l : f.labels) {
      json jl = {{"id", l.id}, {"category", l.category}};
      if (l.score) jl["score"] = *l.score;
      if (l.box2d) jl["box2d"] = {{"x1", l.box2d->x1}, {"y1", l.box2d->y1}, {"x2", l.box2d->x2}, {"y2", l.box2d->y2}};
      if (l.rle) jl["rle"] = {{"counts", rle_to_string(*l.rle)}, {"size", {l.rle->height, l.rle->width}}};
      if (!l.poly2d.empty()) {
        json polys = json::array();
        for (const Poly2D& p : l.poly2d) {
          json verts = json::array();
          for (const Vertex& v : p.vertices) verts.push_back({v.x, v.y});
          polys.push_back({{"vertices", std::move(verts)}, {"types", p.types}, {"closed", p.closed}});
        }
        jl["poly2d"] = std::move(polys);
      }
      if (l.graph) {
        json nodes = json::array();
        for (const Joint& j : l.graph->joints) nodes.push_back({{"location", {j.x, j.y}}, {"score", j.score}});
        jl["graph"] = {{"nodes", std::move(nodes)}};
      }
      if (!l.lane.direction.empty() || !l.lane.style.empty()) {
        json attrs = json::object();
        if (!l.lane.direction.empty()) attrs["laneDirection"] = l.lane.direction;
        if (!l.lane.style.empty()) attrs["laneStyle"] = l.lane.style;
        jl["attributes"] = std::move(attrs);
      }
      labels.push_back(std::move(jl));
    }
    jf["labels"] = std::move(labels);
    out.push_back(std::move(jf));
  }
  return out;
}

}  // namespace vtd
