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

// Reference Grundy values that share nothing with the solver: every smaller
// position is tested with is_legal_move and the mex is taken by hand.
// Quadratic in the region size, so only for small bounds.

#ifndef NIMFORGE_TESTS_NAIVE_ORACLE_HPP_
#define NIMFORGE_TESTS_NAIVE_ORACLE_HPP_

#include <map>
#include <set>
#include <vector>

#include "nimforge/core.hpp"
#include "nimforge/rulesets.hpp"

namespace nimforge::testing {

inline std::vector<HeapPair> all_pairs(Count bound) {
  std::vector<HeapPair> out;
  for (Count t = 0; t <= bound; ++t) {
    for (Count x = 0; x <= t; ++x) out.push_back({x, t - x});
  }
  return out;
}

inline std::vector<HeapTriple> all_triples(Count bound) {
  std::vector<HeapTriple> out;
  for (Count t = 0; t <= bound; ++t) {
    for (Count x = 0; x <= t; ++x) {
      for (Count y = 0; x + y <= t; ++y) out.push_back({{x, y, t - x - y}});
    }
  }
  return out;
}

template <class Pos>
std::map<Pos, Grundy> naive_grundy(const RulesetSpec& spec, const std::vector<Pos>& region) {
  std::map<Pos, Grundy> value;
  // region is listed by increasing total, so every option is already known.
  for (const Pos& p : region) {
    std::set<Grundy> seen;
    for (const auto& [q, g] : value) {
      if (is_legal_move(spec, p, q)) seen.insert(g);
    }
    Grundy m = 0;
    while (seen.count(m)) ++m;
    value[p] = m;
  }
  return value;
}

// Misere outcome by direct induction: no move means the mover wins.
template <class Pos>
std::map<Pos, bool> naive_misere_p(const RulesetSpec& spec, const std::vector<Pos>& region) {
  std::map<Pos, bool> is_p;
  for (const Pos& p : region) {
    bool any_move = false;
    bool reaches_p = false;
    for (const auto& [q, qp] : is_p) {
      if (!is_legal_move(spec, p, q)) continue;
      any_move = true;
      reaches_p = reaches_p || qp;
    }
    is_p[p] = any_move && !reaches_p;
  }
  return is_p;
}

}  // namespace nimforge::testing

#endif  // NIMFORGE_TESTS_NAIVE_ORACLE_HPP_
