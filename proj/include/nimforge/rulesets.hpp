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

// Option functions for every finite ruleset. Each family is described by the
// moves it allows from a position; all of them strictly decrease the total
// token count, which is what makes the sum-ordered solver sound.

#ifndef NIMFORGE_RULESETS_HPP_
#define NIMFORGE_RULESETS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nimforge/core.hpp"

namespace nimforge {

enum class Family {
  Yama,
  Triangular,
  AbYama,
  AbTriangular,
  YamaWythoff,
  TriangularWythoff,
  GeometricTwist,
  SubGeometricTwist,
  ThreeHeap,
  ClassicWythoff,
};

// A ruleset family plus its parameters. Only the parameters the family uses
// are meaningful; the factories leave the rest at their defaults.
struct RulesetSpec {
  Family family = Family::Yama;
  std::int64_t a = 2;
  std::int64_t b = 1;
  std::int64_t c = 0;
  std::int64_t d = 2;
  int variant = 1;

  static RulesetSpec yama() { return {Family::Yama}; }
  static RulesetSpec triangular() { return {Family::Triangular}; }
  static RulesetSpec ab_yama(std::int64_t a, std::int64_t b);
  static RulesetSpec ab_triangular(std::int64_t a, std::int64_t b);
  static RulesetSpec yama_wythoff(std::int64_t c);
  static RulesetSpec triangular_wythoff(std::int64_t c);
  static RulesetSpec geometric(std::int64_t d);
  static RulesetSpec sub_geometric(std::int64_t d);
  static RulesetSpec three_heap(int variant);
  static RulesetSpec classic_wythoff() { return {Family::ClassicWythoff}; }

  friend bool operator==(const RulesetSpec&, const RulesetSpec&) = default;
};

// Throws UsageError when parameters violate the family's constraints.
void validate(const RulesetSpec& spec);

// 3 for ThreeHeap, 2 otherwise.
int dimension(const RulesetSpec& spec);

// False only for AbYama with b < 0, where no closed form is claimed.
bool has_closed_form(const RulesetSpec& spec);

// Text syntax: yama, triangular, ab-yama:a=3,b=1, ab-tri:a=3,b=-1,
// yama-wythoff:c=2, tri-wythoff:c=0, geo:d=2, subgeo:d=3, three:variant=5,
// wythoff.
RulesetSpec parse_spec(std::string_view text);
std::string to_string(const RulesetSpec& spec);

// Appends every legal option of `pos` to `out` without deduplication. This is
// the hot path used by the solver.
void append_options(const RulesetSpec& spec, const HeapPair& pos,
                    std::vector<HeapPair>& out);
void append_options(const RulesetSpec& spec, const HeapTriple& pos,
                    std::vector<HeapTriple>& out);

// The exact option set, sorted and duplicate-free.
std::vector<HeapPair> options(const RulesetSpec& spec, const HeapPair& pos);
std::vector<HeapTriple> options(const RulesetSpec& spec, const HeapTriple& pos);
std::vector<Position> options(const RulesetSpec& spec, const Position& pos);

// Decides membership of `to` in options(spec, from) from the move
// inequalities directly, without enumerating.
bool is_legal_move(const RulesetSpec& spec, const HeapPair& from,
                   const HeapPair& to);
bool is_legal_move(const RulesetSpec& spec, const HeapTriple& from,
                   const HeapTriple& to);
bool is_legal_move(const RulesetSpec& spec, const Position& from,
                   const Position& to);

}  // namespace nimforge

#endif  // NIMFORGE_RULESETS_HPP_
