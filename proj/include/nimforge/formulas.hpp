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

// Closed forms for Grundy values and P-position sets. All arithmetic is
// integer-only; heap sizes and parameters must be below kFormulaLimit.

#ifndef NIMFORGE_FORMULAS_HPP_
#define NIMFORGE_FORMULAS_HPP_

#include <cstdint>
#include <optional>

#include "nimforge/core.hpp"
#include "nimforge/rulesets.hpp"

namespace nimforge {

// Largest r with r * r <= n.
std::uint64_t isqrt(unsigned __int128 n);

Grundy yama_grundy(Count x, Count y);
bool yama_misere_p(Count x, Count y);

// Piecewise form keyed on d = |x - y| and (x + y - d^2 - 2) mod 2d.
Grundy triangular_grundy(Count x, Count y);
// Arithmetic-progression form: g when (min, max) are consecutive terms of
// 1 + g + k*d, otherwise x + y - 1.
Grundy triangular_grundy_progression(Count x, Count y);
bool triangular_misere_p(Count x, Count y);

// Union of the windows k(a-b) <= x, y < k(a-b) + a.
bool ab_p_position(std::int64_t a, std::int64_t b, Count x, Count y);

bool yama_wythoff_p(Count c, Count x, Count y);
bool yama_wythoff_misere_p(Count c, Count x, Count y);

// ((1 + c) k^2 + (1 - c) k) / 2. Throws RangeError if it exceeds 64 bits.
Count polygonal(Count c, Count k);
bool triangular_wythoff_p(Count c, Count x, Count y);

bool geometric_p(Count d, Count x, Count y);
bool subgeometric_p(Count d, Count x, Count y);

// The P-position family listed for each 3-heap variant, taken literally.
bool three_heap_p(int variant, Count x, Count y, Count z);

bool classic_wythoff_p(Count x, Count y);

// Candidate a_k for the Grundy-g positions of Triangular Nim with c-Wythoff
// twist: (k^2 + k + 1 - (-1)^k) / 2 for c = 0, g = 1, otherwise
// ((1 + c) k^2 + (1 + 2g - c) k) / 2.
Count conjectured_wythoff_grundy_seq(Count c, Count g, Count k);

// P-membership from the family's closed form. AbYama with b < 0 has none
// and throws UsageError.
bool formula_p(const RulesetSpec& spec, const Position& pos);
bool has_p_formula(const RulesetSpec& spec);

// Grundy value from a closed form; only Yama and Triangular have one.
std::optional<Grundy> formula_grundy(const RulesetSpec& spec, const HeapPair& pos);

// An option that is a P-position, or nullopt when pos is itself P. Uses the
// family's constructive move when it applies, otherwise scans options
// against the closed form, and solves by brute force for families without a
// trusted closed form (3-heap, AbYama with b < 0).
std::optional<Position> winning_move(const RulesetSpec& spec, const Position& pos);

}  // namespace nimforge

#endif  // NIMFORGE_FORMULAS_HPP_
