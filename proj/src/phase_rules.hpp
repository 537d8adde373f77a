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

// Phase assignment and admissibility clauses for a single position, given
// the Grundy value and phase of each option. Shared by the region solver and
// the explicit component graphs.

#ifndef NIMFORGE_SRC_PHASE_RULES_HPP_
#define NIMFORGE_SRC_PHASE_RULES_HPP_

#include <span>
#include <string_view>
#include <utility>

#include "nimforge/core.hpp"

namespace nimforge {

struct OptionLabel {
  Grundy grundy;
  Phase phase;
};

inline Phase classify_phase(Grundy g, std::span<const OptionLabel> options) {
  if (g > 1) return Phase::Normal;
  if (g == 1) {
    for (const auto& o : options) {
      if (o.grundy == 0 && o.phase == Phase::Normal) return Phase::Normal;
    }
    return Phase::Final;
  }
  if (options.empty()) return Phase::Final;
  for (const auto& o : options) {
    if (o.grundy == 1 && o.phase == Phase::Final) return Phase::Final;
  }
  return Phase::Normal;
}

inline constexpr unsigned kClauseAdmissible = 1;
inline constexpr unsigned kClauseI = 2;
inline constexpr unsigned kClauseII = 4;
inline constexpr unsigned kClauseIII = 8;
inline constexpr std::size_t kMaxWitnesses = 16;

inline constexpr std::pair<unsigned, std::string_view> kClauseNames[] = {
    {kClauseAdmissible, "admissible"},
    {kClauseI, "(i)"},
    {kClauseII, "(ii)"},
    {kClauseIII, "(iii)"},
};

// Bitmask of the clauses this position violates.
//   admissible: g > 1 needs an option that is g=0 Normal or g=1 Final.
//   (i):   g = 1 Normal forbids g=0 Final options.
//   (ii):  g = 0 Final forbids g=1 Normal options.
//   (iii): g > 1 needs a g=0 and a g=1 option sharing a phase.
inline unsigned failed_clauses(Grundy g, Phase phase,
                               std::span<const OptionLabel> options) {
  bool zero_normal = false, zero_final = false;
  bool one_normal = false, one_final = false;
  for (const auto& o : options) {
    if (o.grundy == 0) (o.phase == Phase::Normal ? zero_normal : zero_final) = true;
    if (o.grundy == 1) (o.phase == Phase::Normal ? one_normal : one_final) = true;
  }
  unsigned failed = 0;
  if (g > 1) {
    if (!zero_normal && !one_final) failed |= kClauseAdmissible;
    if (!(zero_normal && one_normal) && !(zero_final && one_final)) failed |= kClauseIII;
  } else if (g == 1 && phase == Phase::Normal && zero_final) {
    failed |= kClauseI;
  } else if (g == 0 && phase == Phase::Final && one_normal) {
    failed |= kClauseII;
  }
  return failed;
}

}  // namespace nimforge

#endif  // NIMFORGE_SRC_PHASE_RULES_HPP_
