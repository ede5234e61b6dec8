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
#include <string_view>

#include "lqg/rank.hpp"

namespace lqg {

/// Canonical bank file: sorted keys, two-space indent, trailing newline.
std::string bank_to_json(const QuestionBank& bank);

/// Throws SchemaError.
QuestionBank bank_from_json(std::string_view text);

QuestionBank load_bank(const std::string& path);
void save_bank(const QuestionBank& bank, const std::string& path);

}  // namespace lqg
