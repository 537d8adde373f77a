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

// Brute-force ground truth over the simplex {total <= T}.
//
// Every move strictly lowers the total, so the simplex is closed under
// options and positions are solved level by level in increasing total.
// Positions inside one level are independent and are split across worker
// threads; results do not depend on the worker count.

#ifndef NIMFORGE_SOLVER_HPP_
#define NIMFORGE_SOLVER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nimforge/core.hpp"
#include "nimforge/rulesets.hpp"

namespace nimforge {

inline constexpr std::size_t kDefaultCapacity = 5'000'000;

// kDefaultCapacity, or the value of NIMFORGE_CAP when it is set to a positive
// integer.
std::size_t default_capacity();

struct SolveOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
  std::size_t capacity = default_capacity();
  bool with_phases = false;
  bool with_misere = false;
};

// Dense indexing of {total <= T} in (total, x, y) order. Options always have
// a smaller index than the position they come from.
class Simplex {
 public:
  Simplex(int dim, Count bound);

  int dim() const { return dim_; }
  Count bound() const { return bound_; }
  std::size_t size() const { return size_; }

  // First index of level t and the number of positions in it.
  std::size_t level_begin(Count t) const;
  std::size_t level_size(Count t) const;

  bool contains(const HeapPair& p) const { return dim_ == 2 && p.total() <= bound_; }
  bool contains(const HeapTriple& p) const { return dim_ == 3 && p.total() <= bound_; }

  std::size_t index(const HeapPair& p) const;
  std::size_t index(const HeapTriple& p) const;

  HeapPair pair_at(std::size_t i) const;
  HeapTriple triple_at(std::size_t i) const;

  // Number of positions with total <= T in `dim` heaps, saturating.
  static std::size_t count(int dim, Count bound);

 private:
  int dim_;
  Count bound_;
  std::size_t size_;
};

template <class Pos>
struct GrundyMap {
  RulesetSpec spec;
  Simplex region;
  std::vector<Grundy> values;
  std::vector<Phase> phases;     // empty unless requested
  std::vector<Outcome> misere;   // empty unless requested

  std::size_t size() const { return values.size(); }
  bool contains(const Pos& p) const { return region.contains(p); }
  Pos position(std::size_t i) const;

  // Throws RangeError outside the region.
  Grundy grundy(const Pos& p) const;
  Outcome outcome(const Pos& p) const;
  Phase phase(const Pos& p) const;
  Outcome misere_outcome(const Pos& p) const;

 private:
  std::size_t checked_index(const Pos& p) const;
};

using PairMap = GrundyMap<HeapPair>;
using TripleMap = GrundyMap<HeapTriple>;

// Throws CapacityError when the region exceeds options.capacity and
// UsageError when Pos does not match the ruleset's dimension.
template <class Pos>
GrundyMap<Pos> grundy_table(const RulesetSpec& spec, Count bound,
                            const SolveOptions& options = {});

// Normal-play P-positions in (total, x, y) order.
template <class Pos>
std::vector<Pos> p_positions(const GrundyMap<Pos>& map);
template <class Pos>
std::vector<Pos> p_positions(const RulesetSpec& spec, Count bound,
                             const SolveOptions& options = {});

// grundy_table with the phase layer.
template <class Pos>
GrundyMap<Pos> phases(const RulesetSpec& spec, Count bound,
                      SolveOptions options = {});

// grundy_table with the misere layer, filled by direct induction: a
// terminal position is N, otherwise P iff every option is N.
template <class Pos>
GrundyMap<Pos> misere_outcomes_direct(const RulesetSpec& spec, Count bound,
                                      SolveOptions options = {});

template <class Pos>
std::vector<Pos> misere_p_positions(const GrundyMap<Pos>& map);

template <class Pos>
struct MiserePhaseResult {
  std::vector<Pos> p_positions;  // g=0 Normal together with g=1 Final
  bool flagged = false;          // set when the region is not admissible
  std::string note;
};

template <class Pos>
MiserePhaseResult<Pos> misere_p_via_phase(const GrundyMap<Pos>& map);
template <class Pos>
MiserePhaseResult<Pos> misere_p_via_phase(const RulesetSpec& spec, Count bound,
                                          SolveOptions options = {});

template <class Pos>
struct AdmissibilityWitness {
  Pos pos;
  std::string clause;  // "admissible", "(i)", "(ii)" or "(iii)"
};

template <class Pos>
struct AdmissibilityReport {
  bool admissible = true;
  bool universally = true;
  std::vector<AdmissibilityWitness<Pos>> witnesses;  // first few failures
};

// Requires the phase layer.
template <class Pos>
AdmissibilityReport<Pos> check_admissible(const GrundyMap<Pos>& map);
template <class Pos>
AdmissibilityReport<Pos> check_admissible(const RulesetSpec& spec, Count bound,
                                          SolveOptions options = {});

// ---------------------------------------------------------------------------
// Disjunctive sums

// An explicit finite game: node i lists the indices of its options, all of
// which are smaller than i. Built from a ruleset region or a single Nim heap.
class ComponentGraph {
 public:
  static ComponentGraph from_ruleset(const RulesetSpec& spec, Count bound);
  static ComponentGraph nim_heap(Count size);

  std::size_t size() const { return options_.size(); }
  const std::vector<std::uint32_t>& options(std::size_t node) const {
    return options_[node];
  }
  const std::string& name() const { return name_; }

  // Node of a position; throws RangeError or UsageError when it is not part
  // of this graph.
  std::size_t node(const Position& p) const;
  std::size_t node(Count heap) const;
  std::string label(std::size_t node) const;

  // Per-node layers computed from the option lists.
  const std::vector<Grundy>& grundy() const { return grundy_; }
  const std::vector<Phase>& phases() const { return phases_; }
  AdmissibilityReport<std::size_t> admissibility() const;

 private:
  void solve();

  std::string name_;
  std::optional<Simplex> region_;
  std::vector<std::vector<std::uint32_t>> options_;
  std::vector<Grundy> grundy_;
  std::vector<Phase> phases_;
};

// The product game A + B, node (i, j) stored at i * |B| + j.
struct SumGame {
  std::size_t width = 0;  // |B|
  std::vector<Grundy> grundy;
  std::vector<Phase> phases;
  std::vector<Outcome> misere;
};

SumGame solve_sum(const ComponentGraph& a, const ComponentGraph& b,
                  std::size_t capacity = default_capacity());

Grundy disjunctive_sum_grundy(const ComponentGraph& a, const Position& pos_a,
                              const ComponentGraph& b, const Position& pos_b);
Grundy disjunctive_sum_grundy(const ComponentGraph& a, const Position& pos_a,
                              const ComponentGraph& b, Count heap);
Grundy disjunctive_sum_grundy(const RulesetSpec& spec_a, const Position& pos_a,
                              const RulesetSpec& spec_b, const Position& pos_b,
                              Count bound);

struct SumPhaseReport {
  bool consistent = true;   // phase product rule held on every pair
  bool misere_ok = true;    // phase-method misere set equals direct induction
  bool flagged = false;     // a component is not universally admissible
  std::size_t checked = 0;
  std::optional<std::pair<std::string, std::string>> witness;
};

SumPhaseReport sum_phase_check(const ComponentGraph& a, const ComponentGraph& b,
                               std::size_t capacity = default_capacity());
SumPhaseReport sum_phase_check(const RulesetSpec& spec_a,
                               const RulesetSpec& spec_b, Count bound);

// ---------------------------------------------------------------------------
// Export

enum class TableFormat { Ascii, Csv, Json };

TableFormat parse_table_format(std::string_view text);

// csv: header plus one row per position (x,y[,z],grundy,outcome,phase,misere).
// json: {"spec","T","entries":[...]} with the same fields per entry.
// Both need the phase and misere layers.
template <class Pos>
std::string export_csv(const GrundyMap<Pos>& map);
template <class Pos>
std::string export_json(const GrundyMap<Pos>& map);

// Square grid of g(x, y) for 0 <= x, y <= side, x down and y across. Needs
// region bound >= 2 * side.
std::string render_ascii(const PairMap& map, Count side);

}  // namespace nimforge

#endif  // NIMFORGE_SOLVER_HPP_
