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

namespace lqg {

/// Porter (1980) suffix stripper, all five steps, original rule table
/// (ABLI -> ABLE, no LOGI rule, words of any length are stemmed).
/// Expects a lowercase word; non-letters are treated as consonants.
std::string porter_stem(std::string_view word);

}  // namespace lqg
