// Copyright 2026 The nimforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nimforge/core.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace nimforge {

std::string_view to_string(Outcome o) { return o == Outcome::P ? "P" : "N"; }

std::string_view to_string(Phase p) {
  return p == Phase::Final ? "Final" : "Normal";
}

Grundy mex(std::span<const Grundy> values) {
  // The answer is at most values.size(), so larger entries can be ignored.
  std::vector<bool> seen(values.size() + 1, false);
  for (Grundy v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  Grundy m = 0;
  while (seen[m]) ++m;
  return m;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<Count> parse_counts(std::string_view text) {
  std::vector<Count> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view field = trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    Count value = 0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      throw UsageError("invalid position '" + std::string(text) +
                       "': expected comma-separated non-negative integers");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

Position parse_position(std::string_view text) {
  std::vector<Count> v = parse_counts(text);
  if (v.size() == 2) return HeapPair{v[0], v[1]};
  if (v.size() == 3) return HeapTriple{{v[0], v[1], v[2]}};
  throw UsageError("invalid position '" + std::string(text) +
                   "': expected 2 or 3 heaps");
}

HeapPair parse_pair(std::string_view text) {
  Position p = parse_position(text);
  if (auto* pair = std::get_if<HeapPair>(&p)) return *pair;
  throw UsageError("expected a 2-heap position, got '" + std::string(text) + "'");
}

HeapTriple parse_triple(std::string_view text) {
  Position p = parse_position(text);
  if (auto* t = std::get_if<HeapTriple>(&p)) return *t;
  throw UsageError("expected a 3-heap position, got '" + std::string(text) + "'");
}

std::string to_string(const HeapPair& p) {
  return std::to_string(p.x) + "," + std::to_string(p.y);
}

std::string to_string(const HeapTriple& p) {
  return std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
         std::to_string(p[2]);
}

std::string to_string(const Position& p) {
  return std::visit([](const auto& v) { return to_string(v); }, p);
}

std::ostream& operator<<(std::ostream& os, const HeapPair& p) {
  return os << '(' << p.x << ", " << p.y << ')';
}

std::ostream& operator<<(std::ostream& os, const HeapTriple& p) {
  return os << '(' << p[0] << ", " << p[1] << ", " << p[2] << ')';
}

void require_formula_range(std::initializer_list<Count> values) {
  for (Count v : values) {
    if (v >= kFormulaLimit) {
      throw RangeError("heap size " + std::to_string(v) +
                       " outside the supported range [0, 2^31)");
    }
  }
}

}  // namespace nimforge
