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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lqg/feedback.hpp"
#include "lqg/imagelink.hpp"
#include "lqg/rank.hpp"
#include "lqg/tiling.hpp"

namespace lqg {

/// Every tunable of the pipeline. Keys and ranges are listed in README.md.
struct PipelineConfig {
  TilingParams tiling;
  bool drop_vague_pronoun = false;
  LinkParams link;
  std::vector<double> weights = default_weights();
  double score_threshold = 0.0;
  Thresholds thresholds;
  std::optional<int> total;  // nullopt: one question per two minutes
  std::string quiz_id;       // empty: the transcript's source_id
};

/// Flat `key = value` lines; '#' starts a comment. Throws ConfigError on
/// unknown or repeated keys and out-of-range values.
PipelineConfig parse_config(std::string_view text);
PipelineConfig load_config(const std::string& path);

/// Sets one key. Throws ConfigError.
void set_config_value(PipelineConfig& cfg, std::string_view key, std::string_view value);

/// Every key with its canonical value text; parse_config of the rendered
/// snapshot gives back the same config.
std::map<std::string, std::string> config_snapshot(const PipelineConfig& cfg);
PipelineConfig config_from_snapshot(const std::map<std::string, std::string>& snapshot);

std::vector<std::string> config_keys();

}  // namespace lqg
