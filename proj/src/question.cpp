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

#include "lqg/question.hpp"

#include <array>
#include <utility>

namespace lqg {

namespace {

template <typename E, std::size_t N>
std::optional<E> lookup(const std::array<std::pair<E, std::string_view>, N>& table, std::string_view name) {
  for (const auto& [value, text] : table)
    if (text == name) return value;
  return std::nullopt;
}

template <typename E, std::size_t N>
std::string_view name_of(const std::array<std::pair<E, std::string_view>, N>& table, E value) {
  for (const auto& [v, text] : table)
    if (v == value) return text;
  return {};
}

constexpr std::array<std::pair<WhWord, std::string_view>, 5> kWh = {{{WhWord::Who, "Who"},
                                                                       {WhWord::What, "What"},
                                                                       {WhWord::When, "When"},
                                                                       {WhWord::Where, "Where"},
                                                                       {WhWord::HowMany, "How many"}}};
constexpr std::array<std::pair<Role, std::string_view>, 3> kRole = {
    {{Role::SUBJECT, "SUBJECT"}, {Role::OBJECT, "OBJECT"}, {Role::ADJUNCT, "ADJUNCT"}}};
constexpr std::array<std::pair<LinkStatus, std::string_view>, 4> kLink = {{{LinkStatus::PENDING, "PENDING"},
                                                                          {LinkStatus::LINKED, "LINKED"},
                                                                          {LinkStatus::DISCARDED, "DISCARDED"},
                                                                          {LinkStatus::UNLINKED, "UNLINKED"}}};
constexpr std::array<std::pair<EntityKind, std::string_view>, 5> kKind = {{{EntityKind::PERSON, "PERSON"},
                                                                          {EntityKind::DATE, "DATE"},
                                                                          {EntityKind::NUMBER, "NUMBER"},
                                                                          {EntityKind::LOCATION, "LOCATION"},
                                                                          {EntityKind::NP_OTHER, "NP_OTHER"}}};

}  // namespace

std::string_view wh_name(WhWord wh) { return name_of(kWh, wh); }
std::string_view role_name(Role role) { return name_of(kRole, role); }
std::string_view link_status_name(LinkStatus status) { return name_of(kLink, status); }
std::optional<WhWord> wh_from_name(std::string_view name) { return lookup(kWh, name); }
std::optional<Role> role_from_name(std::string_view name) { return lookup(kRole, name); }
std::optional<LinkStatus> link_status_from_name(std::string_view name) { return lookup(kLink, name); }
std::optional<EntityKind> entity_kind_from_name(std::string_view name) { return lookup(kKind, name); }

}  // namespace lqg
