// Copyright 2026 The lectureqg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqg/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "lqg/error.hpp"
#include "strutil.hpp"

namespace lqg {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

[[noreturn]] void bad(std::string_view key, std::string_view value, const std::string& why) {
  throw ConfigError(std::string(key) + " = \"" + std::string(value) + "\": " + why);
}

long long to_int(std::string_view key, std::string_view value, long long lo, long long hi) {
  long long v = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size()) bad(key, value, "expected an integer");
  if (v < lo || v > hi) bad(key, value, "must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

double to_double(std::string_view key, std::string_view value) {
  const std::string s(value);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0' || !std::isfinite(v)) bad(key, value, "expected a finite number");
  return v;
}

double to_unit(std::string_view key, std::string_view value) {
  const double v = to_double(key, value);
  if (v < 0.0 || v > 1.0) bad(key, value, "must be in [0, 1]");
  return v;
}

bool to_bool(std::string_view key, std::string_view value) {
  if (value == "true") return true;
  if (value == "false") return false;
  bad(key, value, "expected true or false");
}

}  // namespace

std::vector<std::string> config_keys() {
  return {"feedback.high",        "feedback.medium",    "link.min_confidence",      "link.pad_ms",
          "qgen.drop_vague_pronoun", "quiz.id",          "quiz.total",               "rank.score_threshold",
          "rank.weights",         "tiling.k",           "tiling.min_relative_depth", "tiling.min_separation",
          "tiling.smoothing_rounds", "tiling.smoothing_width", "tiling.valley_only",  "tiling.w"};
}

void set_config_value(PipelineConfig& cfg, std::string_view key, std::string_view value) {
  if (key == "tiling.w") {
    cfg.tiling.w = static_cast<int>(to_int(key, value, 2, 1000));
  } else if (key == "tiling.k") {
    cfg.tiling.k = static_cast<int>(to_int(key, value, 1, 1000));
  } else if (key == "tiling.smoothing_width") {
    cfg.tiling.smoothing_width = static_cast<int>(to_int(key, value, 0, 100));
  } else if (key == "tiling.smoothing_rounds") {
    cfg.tiling.smoothing_rounds = static_cast<int>(to_int(key, value, 0, 100));
  } else if (key == "tiling.min_separation") {
    cfg.tiling.min_separation = static_cast<int>(to_int(key, value, 0, 1000));
  } else if (key == "tiling.valley_only") {
    cfg.tiling.valley_only = to_bool(key, value);
  } else if (key == "tiling.min_relative_depth") {
    cfg.tiling.min_relative_depth = to_unit(key, value);
  } else if (key == "qgen.drop_vague_pronoun") {
    cfg.drop_vague_pronoun = to_bool(key, value);
  } else if (key == "link.pad_ms") {
    cfg.link.pad_ms = to_int(key, value, 0, 3'600'000);
  } else if (key == "link.min_confidence") {
    cfg.link.min_confidence = to_unit(key, value);
  } else if (key == "rank.weights") {
    std::vector<double> w;
    for (const auto& part : detail::split(value, ',')) w.push_back(to_double(key, detail::trim(part)));
    if (w.size() != kFeatureDim) bad(key, value, "expected " + std::to_string(kFeatureDim) + " comma-separated numbers");
    cfg.weights = std::move(w);
  } else if (key == "rank.score_threshold") {
    cfg.score_threshold = to_double(key, value);
  } else if (key == "feedback.high" || key == "feedback.medium") {
    (key == "feedback.high" ? cfg.thresholds.high : cfg.thresholds.medium) = to_unit(key, value);
  } else if (key == "quiz.total") {
    if (value == "auto")
      cfg.total.reset();
    else
      cfg.total = static_cast<int>(to_int(key, value, 0, 100000));
  } else if (key == "quiz.id") {
    if (value.empty()) bad(key, value, "must not be empty");
    cfg.quiz_id = std::string(value);
  } else {
    throw ConfigError("unknown key \"" + std::string(key) + "\"");
  }
}

namespace {

void check(const PipelineConfig& cfg) {
  const auto& t = cfg.thresholds;
  if (!(t.medium > 0.0 && t.medium < t.high && t.high <= 1.0))
    throw ConfigError("feedback thresholds need 0 < medium < high <= 1");
}

}  // namespace

PipelineConfig parse_config(std::string_view text) {
  PipelineConfig cfg;
  std::set<std::string> seen;
  int line_no = 0;
  for (auto raw : detail::split_lines(text)) {
    ++line_no;
    auto line = detail::trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key(detail::trim(line.substr(0, eq)));
    const auto value = detail::trim(line.substr(eq + 1));
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(line_no) + ": repeated key " + key);
    try {
      set_config_value(cfg, key, value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  check(cfg);
  return cfg;
}

PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::map<std::string, std::string> config_snapshot(const PipelineConfig& cfg) {
  std::vector<std::string> weights;
  for (double w : cfg.weights) weights.push_back(format_double(w));
  return {
      {"tiling.w", std::to_string(cfg.tiling.w)},
      {"tiling.k", std::to_string(cfg.tiling.k)},
      {"tiling.smoothing_width", std::to_string(cfg.tiling.smoothing_width)},
      {"tiling.smoothing_rounds", std::to_string(cfg.tiling.smoothing_rounds)},
      {"tiling.min_separation", std::to_string(cfg.tiling.min_separation)},
      {"tiling.valley_only", cfg.tiling.valley_only ? "true" : "false"},
      {"tiling.min_relative_depth", format_double(cfg.tiling.min_relative_depth)},
      {"qgen.drop_vague_pronoun", cfg.drop_vague_pronoun ? "true" : "false"},
      {"link.pad_ms", std::to_string(cfg.link.pad_ms)},
      {"link.min_confidence", format_double(cfg.link.min_confidence)},
      {"rank.weights", detail::join(weights, ",")},
      {"rank.score_threshold", format_double(cfg.score_threshold)},
      {"feedback.high", format_double(cfg.thresholds.high)},
      {"feedback.medium", format_double(cfg.thresholds.medium)},
      {"quiz.total", cfg.total ? std::to_string(*cfg.total) : "auto"},
      {"quiz.id", cfg.quiz_id},
  };
}

PipelineConfig config_from_snapshot(const std::map<std::string, std::string>& snapshot) {
  PipelineConfig cfg;
  for (const auto& [k, v] : snapshot) {
    if (k == "quiz.id" && v.empty()) continue;
    set_config_value(cfg, k, v);
  }
  check(cfg);
  return cfg;
}

}  // namespace lqg
