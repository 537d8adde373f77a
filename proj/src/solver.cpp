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

#include "nimforge/solver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "phase_rules.hpp"

namespace nimforge {

std::size_t default_capacity() {
  const char* env = std::getenv("NIMFORGE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCapacity;
  std::size_t value = 0;
  std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value == 0) {
    return kDefaultCapacity;
  }
  return value;
}

// ---------------------------------------------------------------------------
// Simplex

namespace {

using U128 = unsigned __int128;

U128 level_start(int dim, U128 t) {
  return dim == 2 ? t * (t + 1) / 2 : t * (t + 1) * (t + 2) / 6;
}

std::size_t saturate(U128 v) {
  constexpr auto kMax = static_cast<U128>(SIZE_MAX);
  return v > kMax ? SIZE_MAX : static_cast<std::size_t>(v);
}

}  // namespace

std::size_t Simplex::count(int dim, Count bound) {
  return saturate(level_start(dim, static_cast<U128>(bound) + 1));
}

Simplex::Simplex(int dim, Count bound)
    : dim_(dim), bound_(bound), size_(count(dim, bound)) {
  if (dim != 2 && dim != 3) throw UsageError("region dimension must be 2 or 3");
}

std::size_t Simplex::level_begin(Count t) const {
  return saturate(level_start(dim_, t));
}

std::size_t Simplex::level_size(Count t) const {
  return dim_ == 2 ? static_cast<std::size_t>(t + 1)
                   : static_cast<std::size_t>((t + 1) * (t + 2) / 2);
}

std::size_t Simplex::index(const HeapPair& p) const {
  if (!contains(p)) throw RangeError("position " + to_string(p) + " outside region");
  return level_begin(p.total()) + p.x;
}

std::size_t Simplex::index(const HeapTriple& p) const {
  if (!contains(p)) throw RangeError("position " + to_string(p) + " outside region");
  const Count t = p.total();
  // Level t lists x ascending; for fixed x, y runs over 0..t-x.
  const Count before_x = p[0] * (t + 1) - p[0] * (p[0] - 1) / 2;
  return level_begin(t) + static_cast<std::size_t>(before_x + p[1]);
}

HeapPair Simplex::pair_at(std::size_t i) const {
  // Largest t with t(t+1)/2 <= i.
  Count lo = 0, hi = bound_ + 1;
  while (hi - lo > 1) {
    Count mid = lo + (hi - lo) / 2;
    if (level_begin(mid) <= i) lo = mid; else hi = mid;
  }
  const Count t = lo;
  const Count x = i - level_begin(t);
  return {x, t - x};
}

HeapTriple Simplex::triple_at(std::size_t i) const {
  Count lo = 0, hi = bound_ + 1;
  while (hi - lo > 1) {
    Count mid = lo + (hi - lo) / 2;
    if (level_begin(mid) <= i) lo = mid; else hi = mid;
  }
  const Count t = lo;
  Count offset = i - level_begin(t);
  Count x = 0;
  while (offset > t - x) {
    offset -= t - x + 1;
    ++x;
  }
  return {{x, offset, t - x - offset}};
}

// ---------------------------------------------------------------------------
// GrundyMap

namespace {

template <class Pos>
constexpr int dim_of() {
  return std::is_same_v<Pos, HeapPair> ? 2 : 3;
}

template <class Pos>
Pos decode(const Simplex& s, std::size_t i) {
  if constexpr (std::is_same_v<Pos, HeapPair>) {
    return s.pair_at(i);
  } else {
    return s.triple_at(i);
  }
}

// Fills `out` with level t in index order without the search in triple_at.
template <class Pos>
void level_positions(Count t, std::vector<Pos>& out) {
  out.clear();
  if constexpr (std::is_same_v<Pos, HeapPair>) {
    for (Count x = 0; x <= t; ++x) out.push_back({x, t - x});
  } else {
    for (Count x = 0; x <= t; ++x) {
      for (Count y = 0; y <= t - x; ++y) out.push_back({{x, y, t - x - y}});
    }
  }
}

}  // namespace

template <class Pos>
Pos GrundyMap<Pos>::position(std::size_t i) const {
  return decode<Pos>(region, i);
}

template <class Pos>
std::size_t GrundyMap<Pos>::checked_index(const Pos& p) const {
  if (!region.contains(p)) {
    throw RangeError("position " + to_string(p) + " outside the solved region T=" +
                     std::to_string(region.bound()));
  }
  return region.index(p);
}

template <class Pos>
Grundy GrundyMap<Pos>::grundy(const Pos& p) const {
  return values[checked_index(p)];
}

template <class Pos>
Outcome GrundyMap<Pos>::outcome(const Pos& p) const {
  return grundy(p) == 0 ? Outcome::P : Outcome::N;
}

template <class Pos>
Phase GrundyMap<Pos>::phase(const Pos& p) const {
  if (phases.empty()) throw UsageError("phase layer was not computed");
  return phases[checked_index(p)];
}

template <class Pos>
Outcome GrundyMap<Pos>::misere_outcome(const Pos& p) const {
  if (misere.empty()) throw UsageError("misere layer was not computed");
  return misere[checked_index(p)];
}

template <class Pos>
GrundyMap<Pos> grundy_table(const RulesetSpec& spec, Count bound,
                            const SolveOptions& options) {
  validate(spec);
  constexpr int kDim = dim_of<Pos>();
  if (dimension(spec) != kDim) {
    throw UsageError("ruleset " + to_string(spec) + " is played on " +
                     std::to_string(dimension(spec)) + " heaps, not " +
                     std::to_string(kDim));
  }
  const std::size_t size = Simplex::count(kDim, bound);
  if (size > options.capacity) {
    throw CapacityError("region T=" + std::to_string(bound) + " has " +
                        std::to_string(size) +
                        " positions, above the capacity cap of " +
                        std::to_string(options.capacity));
  }

  GrundyMap<Pos> map{spec, Simplex(kDim, bound), {}, {}, {}};
  map.values.assign(size, 0);
  if (options.with_phases) map.phases.assign(size, Phase::Normal);
  if (options.with_misere) map.misere.assign(size, Outcome::N);

  unsigned workers = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());

  auto solve_range = [&](const std::vector<Pos>& level, std::size_t base,
                         std::size_t lo, std::size_t hi) {
    std::vector<Pos> opts;
    std::vector<Grundy> seen;
    std::vector<OptionLabel> labels;
    for (std::size_t k = lo; k < hi; ++k) {
      opts.clear();
      append_options(spec, level[k], opts);
      seen.clear();
      for (const Pos& q : opts) seen.push_back(map.values[map.region.index(q)]);
      const Grundy g = mex(seen);
      const std::size_t at = base + k;
      map.values[at] = g;
      if (options.with_phases) {
        labels.clear();
        for (std::size_t o = 0; o < opts.size(); ++o) {
          labels.push_back({seen[o], map.phases[map.region.index(opts[o])]});
        }
        map.phases[at] = classify_phase(g, labels);
      }
      if (options.with_misere) {
        bool all_n = true;
        for (const Pos& q : opts) {
          all_n = all_n && map.misere[map.region.index(q)] == Outcome::N;
        }
        map.misere[at] = (!opts.empty() && all_n) ? Outcome::P : Outcome::N;
      }
    }
  };

  std::vector<Pos> level;
  for (Count t = 0; t <= bound; ++t) {
    level_positions(t, level);
    const std::size_t base = map.region.level_begin(t);
    const std::size_t n = level.size();
    const unsigned used =
        static_cast<unsigned>(std::min<std::size_t>(workers, n / 32 + 1));
    if (used <= 1) {
      solve_range(level, base, 0, n);
      continue;
    }
    std::vector<std::jthread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) {
      const std::size_t lo = n * w / used;
      const std::size_t hi = n * (w + 1) / used;
      pool.emplace_back([&, lo, hi] { solve_range(level, base, lo, hi); });
    }
  }
  return map;
}

template <class Pos>
std::vector<Pos> p_positions(const GrundyMap<Pos>& map) {
  std::vector<Pos> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map.values[i] == 0) out.push_back(map.position(i));
  }
  return out;
}

template <class Pos>
std::vector<Pos> p_positions(const RulesetSpec& spec, Count bound,
                             const SolveOptions& options) {
  return p_positions(grundy_table<Pos>(spec, bound, options));
}

template <class Pos>
GrundyMap<Pos> phases(const RulesetSpec& spec, Count bound, SolveOptions options) {
  options.with_phases = true;
  return grundy_table<Pos>(spec, bound, options);
}

template <class Pos>
GrundyMap<Pos> misere_outcomes_direct(const RulesetSpec& spec, Count bound,
                                      SolveOptions options) {
  options.with_misere = true;
  return grundy_table<Pos>(spec, bound, options);
}

template <class Pos>
std::vector<Pos> misere_p_positions(const GrundyMap<Pos>& map) {
  if (map.misere.empty()) throw UsageError("misere layer was not computed");
  std::vector<Pos> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map.misere[i] == Outcome::P) out.push_back(map.position(i));
  }
  return out;
}

template <class Pos>
AdmissibilityReport<Pos> check_admissible(const GrundyMap<Pos>& map) {
  if (map.phases.empty()) throw UsageError("phase layer was not computed");
  AdmissibilityReport<Pos> report;
  std::vector<Pos> opts;
  std::vector<OptionLabel> labels;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const Pos p = map.position(i);
    opts.clear();
    append_options(map.spec, p, opts);
    labels.clear();
    for (const Pos& q : opts) {
      // Triangle closure: every option is inside the region.
      if (!map.region.contains(q)) {
        throw RangeError("option " + to_string(q) + " of " + to_string(p) +
                         " left the region");
      }
      const std::size_t j = map.region.index(q);
      labels.push_back({map.values[j], map.phases[j]});
    }
    const unsigned failed = failed_clauses(map.values[i], map.phases[i], labels);
    if (failed & kClauseAdmissible) report.admissible = false;
    if (failed & (kClauseI | kClauseII | kClauseIII)) report.universally = false;
    for (const auto& [bit, name] : kClauseNames) {
      if ((failed & bit) && report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back({p, std::string(name)});
      }
    }
  }
  return report;
}

template <class Pos>
AdmissibilityReport<Pos> check_admissible(const RulesetSpec& spec, Count bound,
                                          SolveOptions options) {
  return check_admissible(phases<Pos>(spec, bound, options));
}

template <class Pos>
MiserePhaseResult<Pos> misere_p_via_phase(const GrundyMap<Pos>& map) {
  if (map.phases.empty()) throw UsageError("phase layer was not computed");
  MiserePhaseResult<Pos> result;
  for (std::size_t i = 0; i < map.size(); ++i) {
    const bool p = (map.values[i] == 0 && map.phases[i] == Phase::Normal) ||
                   (map.values[i] == 1 && map.phases[i] == Phase::Final);
    if (p) result.p_positions.push_back(map.position(i));
  }
  const auto adm = check_admissible(map);
  if (!adm.admissible) {
    result.flagged = true;
    result.note = "ruleset is not admissible on the region; first failure at " +
                  to_string(adm.witnesses.front().pos);
  }
  return result;
}

template <class Pos>
MiserePhaseResult<Pos> misere_p_via_phase(const RulesetSpec& spec, Count bound,
                                          SolveOptions options) {
  return misere_p_via_phase(phases<Pos>(spec, bound, options));
}

// ---------------------------------------------------------------------------
// Component graphs and sums

ComponentGraph ComponentGraph::from_ruleset(const RulesetSpec& spec, Count bound) {
  validate(spec);
  ComponentGraph g;
  g.name_ = to_string(spec);
  g.region_.emplace(dimension(spec), bound);
  const Simplex& s = *g.region_;
  if (s.size() > default_capacity() || s.size() > UINT32_MAX) {
    throw CapacityError("component region too large");
  }
  g.options_.resize(s.size());
  auto fill = [&](auto tag) {
    using Pos = decltype(tag);
    std::vector<Pos> opts;
    for (std::size_t i = 0; i < s.size(); ++i) {
      opts.clear();
      append_options(spec, decode<Pos>(s, i), opts);
      auto& out = g.options_[i];
      for (const Pos& q : opts) out.push_back(static_cast<std::uint32_t>(s.index(q)));
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
    }
  };
  if (s.dim() == 2) fill(HeapPair{}); else fill(HeapTriple{});
  g.solve();
  return g;
}

ComponentGraph ComponentGraph::nim_heap(Count size) {
  if (size >= default_capacity()) throw CapacityError("Nim heap too large");
  ComponentGraph g;
  g.name_ = "nim";
  g.options_.resize(size + 1);
  for (std::uint32_t n = 0; n <= size; ++n) {
    for (std::uint32_t m = 0; m < n; ++m) g.options_[n].push_back(m);
  }
  g.solve();
  return g;
}

void ComponentGraph::solve() {
  grundy_.assign(size(), 0);
  phases_.assign(size(), Phase::Normal);
  std::vector<Grundy> seen;
  std::vector<OptionLabel> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    seen.clear();
    labels.clear();
    for (std::uint32_t o : options_[i]) {
      seen.push_back(grundy_[o]);
      labels.push_back({grundy_[o], phases_[o]});
    }
    grundy_[i] = mex(seen);
    phases_[i] = classify_phase(grundy_[i], labels);
  }
}

std::size_t ComponentGraph::node(const Position& p) const {
  if (!region_) throw UsageError("component " + name_ + " is a single Nim heap");
  return std::visit(
      [&](const auto& v) -> std::size_t {
        if (!region_->contains(v)) {
          throw RangeError("position " + to_string(v) + " not in component " + name_);
        }
        return region_->index(v);
      },
      p);
}

std::size_t ComponentGraph::node(Count heap) const {
  if (region_) throw UsageError("component " + name_ + " is not a Nim heap");
  if (heap >= size()) throw RangeError("Nim heap larger than the component");
  return static_cast<std::size_t>(heap);
}

std::string ComponentGraph::label(std::size_t node) const {
  if (!region_) return "*" + std::to_string(node);
  return region_->dim() == 2 ? to_string(region_->pair_at(node))
                             : to_string(region_->triple_at(node));
}

AdmissibilityReport<std::size_t> ComponentGraph::admissibility() const {
  AdmissibilityReport<std::size_t> report;
  std::vector<OptionLabel> labels;
  for (std::size_t i = 0; i < size(); ++i) {
    labels.clear();
    for (std::uint32_t o : options_[i]) labels.push_back({grundy_[o], phases_[o]});
    const unsigned failed = failed_clauses(grundy_[i], phases_[i], labels);
    if (failed & kClauseAdmissible) report.admissible = false;
    if (failed & (kClauseI | kClauseII | kClauseIII)) report.universally = false;
    for (const auto& [bit, name] : kClauseNames) {
      if ((failed & bit) && report.witnesses.size() < kMaxWitnesses) {
        report.witnesses.push_back({i, std::string(name)});
      }
    }
  }
  return report;
}

SumGame solve_sum(const ComponentGraph& a, const ComponentGraph& b,
                  std::size_t capacity) {
  const std::size_t na = a.size(), nb = b.size();
  if (nb != 0 && na > capacity / nb) {
    throw CapacityError("sum game has more than " + std::to_string(capacity) +
                        " positions");
  }
  SumGame s;
  s.width = nb;
  s.grundy.assign(na * nb, 0);
  s.phases.assign(na * nb, Phase::Normal);
  s.misere.assign(na * nb, Outcome::N);
  std::vector<Grundy> seen;
  std::vector<OptionLabel> labels;
  std::vector<std::size_t> opts;
  // Lexicographic (i, j) order: every option changes exactly one coordinate
  // to a smaller node, so it is already solved.
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      opts.clear();
      for (std::uint32_t o : a.options(i)) opts.push_back(o * nb + j);
      for (std::uint32_t o : b.options(j)) opts.push_back(i * nb + o);
      seen.clear();
      labels.clear();
      bool all_n = true;
      for (std::size_t o : opts) {
        seen.push_back(s.grundy[o]);
        labels.push_back({s.grundy[o], s.phases[o]});
        all_n = all_n && s.misere[o] == Outcome::N;
      }
      const std::size_t at = i * nb + j;
      s.grundy[at] = mex(seen);
      s.phases[at] = classify_phase(s.grundy[at], labels);
      s.misere[at] = (!opts.empty() && all_n) ? Outcome::P : Outcome::N;
    }
  }
  return s;
}

namespace {

Grundy sum_value(const ComponentGraph& a, std::size_t na,
                 const ComponentGraph& b, std::size_t nb) {
  const SumGame s = solve_sum(a, b);
  return s.grundy[na * s.width + nb];
}

}  // namespace

Grundy disjunctive_sum_grundy(const ComponentGraph& a, const Position& pos_a,
                              const ComponentGraph& b, const Position& pos_b) {
  return sum_value(a, a.node(pos_a), b, b.node(pos_b));
}

Grundy disjunctive_sum_grundy(const ComponentGraph& a, const Position& pos_a,
                              const ComponentGraph& b, Count heap) {
  return sum_value(a, a.node(pos_a), b, b.node(heap));
}

Grundy disjunctive_sum_grundy(const RulesetSpec& spec_a, const Position& pos_a,
                              const RulesetSpec& spec_b, const Position& pos_b,
                              Count bound) {
  if (total(pos_a) > bound || total(pos_b) > bound) {
    throw RangeError("component position above the region bound");
  }
  // Regions only need to reach each component's own position.
  const auto a = ComponentGraph::from_ruleset(spec_a, total(pos_a));
  const auto b = ComponentGraph::from_ruleset(spec_b, total(pos_b));
  return disjunctive_sum_grundy(a, pos_a, b, pos_b);
}

SumPhaseReport sum_phase_check(const ComponentGraph& a, const ComponentGraph& b,
                               std::size_t capacity) {
  SumPhaseReport report;
  report.flagged = !a.admissibility().universally || !b.admissibility().universally;
  const SumGame s = solve_sum(a, b, capacity);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t at = i * s.width + j;
      ++report.checked;
      const bool both_final =
          a.phases()[i] == Phase::Final && b.phases()[j] == Phase::Final;
      const bool phase_ok = (s.phases[at] == Phase::Final) == both_final;
      const bool via_phase = (s.grundy[at] == 0 && s.phases[at] == Phase::Normal) ||
                             (s.grundy[at] == 1 && s.phases[at] == Phase::Final);
      const bool misere_ok = via_phase == (s.misere[at] == Outcome::P);
      if ((!phase_ok || !misere_ok) && !report.witness) {
        report.witness = std::make_pair(a.label(i), b.label(j));
      }
      report.consistent = report.consistent && phase_ok;
      report.misere_ok = report.misere_ok && misere_ok;
    }
  }
  return report;
}

SumPhaseReport sum_phase_check(const RulesetSpec& spec_a, const RulesetSpec& spec_b,
                               Count bound) {
  return sum_phase_check(ComponentGraph::from_ruleset(spec_a, bound),
                         ComponentGraph::from_ruleset(spec_b, bound));
}

// ---------------------------------------------------------------------------
// Export

TableFormat parse_table_format(std::string_view text) {
  if (text == "ascii") return TableFormat::Ascii;
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  throw UsageError("unknown format '" + std::string(text) +
                   "' (expected ascii, csv or json)");
}

namespace {

template <class Pos>
void require_layers(const GrundyMap<Pos>& map) {
  if (map.phases.empty() || map.misere.empty()) {
    throw UsageError("export needs the phase and misere layers");
  }
}

std::vector<Count> coords(const HeapPair& p) { return {p.x, p.y}; }
std::vector<Count> coords(const HeapTriple& p) { return {p[0], p[1], p[2]}; }

}  // namespace

template <class Pos>
std::string export_csv(const GrundyMap<Pos>& map) {
  require_layers(map);
  std::ostringstream out;
  out << (dim_of<Pos>() == 2 ? "x,y" : "x,y,z") << ",grundy,outcome,phase,misere\n";
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (Count c : coords(map.position(i))) out << c << ',';
    out << map.values[i] << ',' << (map.values[i] == 0 ? "P" : "N") << ','
        << to_string(map.phases[i]) << ',' << to_string(map.misere[i]) << '\n';
  }
  return out.str();
}

template <class Pos>
std::string export_json(const GrundyMap<Pos>& map) {
  require_layers(map);
  nlohmann::ordered_json doc;
  doc["spec"] = to_string(map.spec);
  doc["T"] = map.region.bound();
  auto& entries = doc["entries"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < map.size(); ++i) {
    nlohmann::ordered_json e;
    e["pos"] = coords(map.position(i));
    e["grundy"] = map.values[i];
    e["outcome"] = map.values[i] == 0 ? "P" : "N";
    e["phase"] = to_string(map.phases[i]);
    e["misere"] = to_string(map.misere[i]);
    entries.push_back(std::move(e));
  }
  return doc.dump(2) + "\n";
}

std::string render_ascii(const PairMap& map, Count side) {
  if (map.region.bound() < 2 * side) {
    throw RangeError("ascii table of side " + std::to_string(side) +
                     " needs region T >= " + std::to_string(2 * side));
  }
  std::size_t width = std::to_string(side).size();
  for (Count x = 0; x <= side; ++x) {
    for (Count y = 0; y <= side; ++y) {
      width = std::max(width, std::to_string(map.grundy({x, y})).size());
    }
  }
  std::ostringstream out;
  std::ostringstream header;
  header << "x\\y |";
  for (Count y = 0; y <= side; ++y) header << ' ' << std::setw(static_cast<int>(width)) << y;
  const std::string head = header.str();
  out << head << '\n' << std::string(head.size(), '-') << '\n';
  for (Count x = 0; x <= side; ++x) {
    out << std::setw(3) << x << " |";
    for (Count y = 0; y <= side; ++y) {
      out << ' ' << std::setw(static_cast<int>(width)) << map.grundy({x, y});
    }
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Instantiations

#define NIMFORGE_INSTANTIATE(Pos)                                              \
  template struct GrundyMap<Pos>;                                              \
  template GrundyMap<Pos> grundy_table<Pos>(const RulesetSpec&, Count,         \
                                            const SolveOptions&);              \
  template std::vector<Pos> p_positions<Pos>(const GrundyMap<Pos>&);           \
  template std::vector<Pos> p_positions<Pos>(const RulesetSpec&, Count,        \
                                             const SolveOptions&);             \
  template GrundyMap<Pos> phases<Pos>(const RulesetSpec&, Count, SolveOptions); \
  template GrundyMap<Pos> misere_outcomes_direct<Pos>(const RulesetSpec&,      \
                                                      Count, SolveOptions);    \
  template std::vector<Pos> misere_p_positions<Pos>(const GrundyMap<Pos>&);    \
  template MiserePhaseResult<Pos> misere_p_via_phase<Pos>(                     \
      const GrundyMap<Pos>&);                                                  \
  template MiserePhaseResult<Pos> misere_p_via_phase<Pos>(const RulesetSpec&,  \
                                                          Count, SolveOptions); \
  template AdmissibilityReport<Pos> check_admissible<Pos>(                     \
      const GrundyMap<Pos>&);                                                  \
  template AdmissibilityReport<Pos> check_admissible<Pos>(const RulesetSpec&,  \
                                                          Count, SolveOptions); \
  template std::string export_csv<Pos>(const GrundyMap<Pos>&);                 \
  template std::string export_json<Pos>(const GrundyMap<Pos>&);

NIMFORGE_INSTANTIATE(HeapPair)
NIMFORGE_INSTANTIATE(HeapTriple)

#undef NIMFORGE_INSTANTIATE

}  // namespace nimforge
