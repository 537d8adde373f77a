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

// Ordinals below epsilon_0 in Cantor normal form, natural (Hessenberg) sums,
// and the transfinite Wythoff, Yama and Triangular rulesets checked on
// finite sub-universes.

#ifndef NIMFORGE_TRANSFINITE_HPP_
#define NIMFORGE_TRANSFINITE_HPP_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nimforge/core.hpp"

namespace nimforge {

inline constexpr int kMaxOrdinalDepth = 3;

// Sum of coefficient * w^exponent terms with strictly decreasing exponents
// and positive coefficients; the empty sum is 0. Always canonical.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;
  explicit Ordinal(Count n);

  // coefficient * w^exponent; coefficient 0 gives 0.
  static Ordinal omega_power(const Ordinal& exponent, Count coefficient = 1);
  static Ordinal omega() { return omega_power(Ordinal(1)); }

  // Throws UsageError on syntax errors and on non-canonical forms
  // (unsorted or repeated exponents, zero coefficients, too deep).
  //   expr := term ('+' term)*
  //   term := 'w' ('^' (nat | '(' expr ')'))? ('*' nat)? | nat
  static Ordinal parse(std::string_view text);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // Coefficient of w^0.
  Count unit_coefficient() const;
  // 0 for naturals, 1 + depth of the largest exponent otherwise.
  int depth() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal& a, const Ordinal& b);

 private:
  friend Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  Count coefficient = 0;
};

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);

// Coefficientwise merge; commutative. Throws RangeError on coefficient
// overflow.
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);
Ordinal successor(const Ordinal& a);
// Defined only when a has a w^0 term.
std::optional<Ordinal> predecessor(const Ordinal& a);

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

// All ordinals whose exponents lie in `exponents` and whose coefficients lie
// in 0..coeff_cap. Exponent 0 must be present. Elements are indexed in
// mixed radix with the largest exponent most significant, so index order is
// ordinal order.
class OrdinalUniverse {
 public:
  OrdinalUniverse(std::vector<Ordinal> exponents, Count coeff_cap, Count margin);

  const std::vector<Ordinal>& exponents() const { return exponents_; }  // descending
  Count coeff_cap() const { return coeff_cap_; }
  Count margin() const { return margin_; }
  std::size_t size() const { return size_; }

  Ordinal element(std::size_t index) const;
  std::optional<std::size_t> index_of(const Ordinal& a) const;
  bool contains(const Ordinal& a) const { return index_of(a).has_value(); }
  // Every coefficient at most coeff_cap - margin.
  bool interior(const Ordinal& a) const;

  // Coefficients along exponents(); empty when a is outside the universe.
  std::optional<std::vector<Count>> coefficients(const Ordinal& a) const;

  std::string describe() const;

 private:
  std::vector<Ordinal> exponents_;
  Count coeff_cap_;
  Count margin_;
  std::size_t size_;
};

enum class TransfiniteFamily { Wythoff, Yama, Triangular };

TransfiniteFamily parse_transfinite_family(std::string_view text);
std::string_view to_string(TransfiniteFamily f);

using OrdinalPair = std::pair<Ordinal, Ordinal>;

// The move rule, decided with ordinal comparisons and natural sums.
bool is_transfinite_move(TransfiniteFamily family, const OrdinalPair& from,
                         const OrdinalPair& to);

struct TransfiniteOptions {
  std::vector<OrdinalPair> options;  // in-universe options, sorted
  bool truncated = false;            // some real option lies outside
};

// Throws UsageError when `from` is outside the universe.
TransfiniteOptions transfinite_options(TransfiniteFamily family,
                                       const OrdinalPair& from,
                                       const OrdinalUniverse& universe);

// True when some legal option of `from` lies outside the universe.
bool options_leave_universe(TransfiniteFamily family, const OrdinalPair& from,
                            const OrdinalUniverse& universe);

// Same exponents in the same order, and each coefficient pair is a
// P-position of finite Wythoff Nim.
bool transfinite_wythoff_p(const Ordinal& a, const Ordinal& b);
// a + 1 = b or b + 1 = a, read literally.
bool transfinite_successor_adjacent(const Ordinal& a, const Ordinal& b);
// Equal or successor-adjacent. The literal adjacency set misses the equal
// pairs, which have no option into it.
bool transfinite_yama_p(const Ordinal& a, const Ordinal& b);
bool transfinite_triangular_p(const Ordinal& a, const Ordinal& b);
bool transfinite_p(TransfiniteFamily family, const Ordinal& a, const Ordinal& b);

using OrdinalPairPredicate = std::function<bool(const Ordinal&, const Ordinal&)>;

struct ClosureReport {
  TransfiniteFamily family = TransfiniteFamily::Wythoff;
  std::string universe;
  std::size_t pairs = 0;
  std::size_t p_count = 0;
  // P-pairs with an in-universe option into the set.
  std::size_t condition1_failures = 0;
  // Interior non-P pairs, all options inside the universe, none into the set.
  std::size_t interior_failures = 0;
  std::size_t interior_checked = 0;
  // Interior pairs whose P option lies beyond the coefficient cap and was
  // found in the extended search.
  std::size_t extended_resolved = 0;
  // Non-P pairs not certified: outside the interior, or truncated and not
  // resolved by the extended search.
  std::size_t unchecked = 0;
  std::optional<OrdinalPair> first_failure;
  std::string first_failure_kind;

  bool passed() const { return condition1_failures == 0 && interior_failures == 0; }
};

// Checks that the set S given by `is_p` (default: the family's P formula) is
// the P-set on the universe: (1) no move from S into S; (2) every interior
// pair outside S has a move into S. Condition (2) searches the universe and,
// for pairs whose options leave it, the universe with coefficient cap doubled.
ClosureReport closure_check(TransfiniteFamily family, const OrdinalUniverse& universe,
                            const OrdinalPairPredicate& is_p = {},
                            unsigned threads = 0);

}  // namespace nimforge

#endif  // NIMFORGE_TRANSFINITE_HPP_
