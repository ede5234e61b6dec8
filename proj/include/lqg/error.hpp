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

#include <stdexcept>
#include <string>

namespace lqg {

/// Base of every error the library raises. `kind()` names the failure the
/// way the file formats and CLI report it (e.g. "MalformedTimestamp").
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define LQG_DEFINE_ERROR(Name)                                          \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

// transcript
LQG_DEFINE_ERROR(MalformedTimestamp);
LQG_DEFINE_ERROR(EmptyDocument);
LQG_DEFINE_ERROR(OverlapRejected);
LQG_DEFINE_ERROR(OutOfRange);
LQG_DEFINE_ERROR(AdapterFailure);
LQG_DEFINE_ERROR(ChunkTooLong);

// tiling
LQG_DEFINE_ERROR(TooShort);

// qgen
LQG_DEFINE_ERROR(UnsupportedStructure);

// imagelink
LQG_DEFINE_ERROR(SchemaError);
LQG_DEFINE_ERROR(UnknownLabel);
LQG_DEFINE_ERROR(SourceMismatch);
LQG_DEFINE_ERROR(ExtractorFailure);

// ranking
LQG_DEFINE_ERROR(DimensionMismatch);

// feedback
LQG_DEFINE_ERROR(MissingFiles);
LQG_DEFINE_ERROR(ParseError);
LQG_DEFINE_ERROR(BadThresholds);

// evalmetrics
LQG_DEFINE_ERROR(ValidationError);
LQG_DEFINE_ERROR(UnknownQuestionId);

// configuration and shipped resources
LQG_DEFINE_ERROR(ConfigError);
LQG_DEFINE_ERROR(ResourceError);

#undef LQG_DEFINE_ERROR

}  // namespace lqg
