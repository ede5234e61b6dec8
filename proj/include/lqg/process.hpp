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

#include <string>
#include <vector>

namespace lqg {

struct ProcessResult {
  int exit_code = -1;
  std::string stdout_text;
};

/// Runs argv[0] (searched on PATH) with the remaining arguments, capturing
/// standard output. Standard error is inherited. No shell is involved.
/// Throws std::runtime_error if the process cannot be started.
ProcessResult run_process(const std::vector<std::string>& argv);

/// Splits a configured command line on whitespace ("python3 stt.py" ->
/// {"python3", "stt.py"}). No quoting rules.
std::vector<std::string> split_command(const std::string& command);

}  // namespace lqg
