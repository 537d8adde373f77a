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

// Exhaustive formula-vs-oracle sweeps. Every sweep walks its region in
// (total, x, y) order and keeps the first disagreement.

#ifndef NIMFORGE_VERIFY_HPP_
#define NIMFORGE_VERIFY_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nimforge/core.hpp"
#include "nimforge/rulesets.hpp"
#include "nimforge/solver.hpp"

namespace nimforge {

enum class VerifyStatus { Match, Mismatch, Flagged };

std::string_view to_string(VerifyStatus s);

// A Grundy value or a P-membership flag, depending on what was compared.
using CheckValue = std::variant<Grundy, bool>;

struct MismatchWitness {
  Position pos;
  CheckValue expected;  // what the closed form (or claim) says
  CheckValue actual;    // what brute force finds
};

struct VerifyReport {
  std::string spec;
  Count bound = 0;
  VerifyStatus status = VerifyStatus::Match;
  std::optional<MismatchWitness> first_mismatch;
  std::size_t checked = 0;
  std::size_t p_count = 0;
  double elapsed_seconds = 0;
  std::string note;
  std::vector<std::string> details;
};

// {"spec","T","status","first_mismatch":{"pos","expected","actual"}|null,
//  "checked","p_count"}; elapsed time only when asked for.
std::string to_json(const VerifyReport& report, bool with_elapsed = false);

using FormulaFn = std::function<CheckValue(const Position&)>;

// Default formula: Grundy closed form for Yama and Triangular, P-membership
// for every other family. AbYama with b < 0 is compared against the window
// union but reported Flagged.
VerifyReport compare_formula_vs_oracle(const RulesetSpec& spec, Count bound,
                                       const SolveOptions& options = {},
                                       const FormulaFn& formula = {});

// Maps a position to the index of its class.
using PartitionFn = std::function<Grundy(const Position&)>;

// Yama: class 0 for |x-y| <= 1, else min + 1. Triangular: class 0, the
// quadratic band, and the step-d progressions. UsageError for other families.
PartitionFn builtin_partition(const RulesetSpec& spec);

// Certifies the partition as the Grundy function: no option of a class-i
// position is in class i, and every class j < i is reachable. No Grundy
// values are computed.
VerifyReport partition_check(const RulesetSpec& spec, const PartitionFn& partition,
                             Count bound);

// Phase-method misere P-set against direct induction, then the family's
// closed-form misere set (Yama, Triangular, Yama-Wythoff) against direct
// induction. Flagged when the region is not admissible.
VerifyReport misere_cross_check(const RulesetSpec& spec, Count bound,
                                const SolveOptions& options = {});

// Oracle positions of Triangular Nim with c-Wythoff twist having Grundy
// value g, against consecutive pairs (a_k, a_{k+1}) of the candidate
// sequence. Pairs with x + y - 1 = g are left out on both sides.
VerifyReport conjecture_scan(Count c, Grundy g, Count bound,
                             const SolveOptions& options = {});

}  // namespace nimforge

#endif  // NIMFORGE_VERIFY_HPP_
