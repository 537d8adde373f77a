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

#include "nimforge/transfinite.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <limits>
#include <thread>

#include "nimforge/formulas.hpp"
#include "nimforge/solver.hpp"

namespace nimforge {

// ---------------------------------------------------------------------------
// Ordinal

Ordinal::Ordinal(Count n) {
  if (n > 0) terms_.push_back({Ordinal(), n});
}

Ordinal Ordinal::omega_power(const Ordinal& exponent, Count coefficient) {
  Ordinal out;
  if (coefficient > 0) out.terms_.push_back({exponent, coefficient});
  if (out.depth() > kMaxOrdinalDepth) {
    throw UsageError("ordinal nesting deeper than " + std::to_string(kMaxOrdinalDepth));
  }
  return out;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

Count Ordinal::unit_coefficient() const {
  if (!terms_.empty() && terms_.back().exponent.is_zero()) {
    return terms_.back().coefficient;
  }
  return 0;
}

int Ordinal::depth() const {
  if (terms_.empty() || terms_.front().exponent.is_zero()) return 0;
  return 1 + terms_.front().exponent.depth();
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ta = a.terms_[i];
    const auto& tb = b.terms_[i];
    if (auto c = ta.exponent <=> tb.exponent; c != 0) return c;
    if (auto c = ta.coefficient <=> tb.coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  Ordinal out;
  auto& t = out.terms_;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].exponent > b.terms_[j].exponent)) {
      t.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].exponent > a.terms_[i].exponent) {
      t.push_back(b.terms_[j++]);
    } else {
      const Count ca = a.terms_[i].coefficient, cb = b.terms_[j].coefficient;
      if (ca > std::numeric_limits<Count>::max() - cb) {
        throw RangeError("ordinal coefficient overflow in natural sum");
      }
      t.push_back({a.terms_[i].exponent, ca + cb});
      ++i;
      ++j;
    }
  }
  return out;
}

Ordinal successor(const Ordinal& a) { return natural_sum(a, Ordinal(1)); }

std::optional<Ordinal> predecessor(const Ordinal& a) {
  if (a.unit_coefficient() == 0) return std::nullopt;
  Ordinal out;
  for (const auto& t : a.terms()) {
    if (t.exponent.is_zero()) {
      out = natural_sum(out, Ordinal(t.coefficient - 1));
    } else {
      out = natural_sum(out, Ordinal::omega_power(t.exponent, t.coefficient));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal value = expr(0);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  Ordinal expr(int depth) {
    if (depth > kMaxOrdinalDepth) fail("nesting deeper than " + std::to_string(kMaxOrdinalDepth));
    std::vector<Ordinal::Term> terms;
    terms.push_back(term(depth));
    while (peek() == '+') {
      ++pos_;
      terms.push_back(term(depth));
    }
    if (terms.size() == 1 && terms[0].coefficient == 0) return Ordinal();
    Ordinal out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].coefficient == 0) fail("zero term in a sum");
      if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
        fail("terms must have strictly decreasing exponents");
      }
      out = natural_sum(out, Ordinal::omega_power(terms[i].exponent, terms[i].coefficient));
    }
    return out;
  }

  Ordinal::Term term(int depth) {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return {Ordinal(), nat()};
    if (c != 'w') fail("expected a natural number or 'w'");
    ++pos_;
    Ordinal exponent(1);
    if (peek() == '^') {
      ++pos_;
      if (peek() == '(') {
        ++pos_;
        exponent = expr(depth + 1);
        if (peek() != ')') fail("missing ')'");
        ++pos_;
      } else {
        exponent = Ordinal(nat());
      }
      if (exponent.is_zero()) fail("w^0 is written as a natural number");
    }
    Count coefficient = 1;
    if (peek() == '*') {
      ++pos_;
      coefficient = nat();
      if (coefficient == 0) fail("zero coefficient");
    }
    if (exponent.depth() + 1 > kMaxOrdinalDepth) {
      fail("nesting deeper than " + std::to_string(kMaxOrdinalDepth));
    }
    return {exponent, coefficient};
  }

  Count nat() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    Count value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (start == pos_ || ec != std::errc()) fail("expected a natural number");
    (void)ptr;
    return value;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw UsageError("invalid ordinal '" + std::string(text_) + "': " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) { return OrdinalParser(text).parse_all(); }

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) {
      out += t.exponent.is_finite() ? "^" + t.exponent.to_string()
                                    : "^(" + t.exponent.to_string() + ")";
    }
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Universe

OrdinalUniverse::OrdinalUniverse(std::vector<Ordinal> exponents, Count coeff_cap,
                                 Count margin)
    : exponents_(std::move(exponents)), coeff_cap_(coeff_cap), margin_(margin) {
  std::sort(exponents_.begin(), exponents_.end(), std::greater<>());
  exponents_.erase(std::unique(exponents_.begin(), exponents_.end()), exponents_.end());
  if (exponents_.empty() || !exponents_.back().is_zero()) {
    throw UsageError("universe exponents must include 0");
  }
  if (coeff_cap == 0) throw UsageError("coefficient cap must be positive");
  if (margin > coeff_cap) throw UsageError("margin cannot exceed the coefficient cap");
  for (const auto& e : exponents_) {
    if (e.depth() + 1 > kMaxOrdinalDepth) throw UsageError("exponent nested too deeply");
  }
  unsigned __int128 size = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    size *= static_cast<unsigned __int128>(coeff_cap) + 1;
    if (size > std::numeric_limits<std::uint32_t>::max()) {
      throw CapacityError("ordinal universe too large");
    }
  }
  size_ = static_cast<std::size_t>(size);
}

Ordinal OrdinalUniverse::element(std::size_t index) const {
  if (index >= size_) throw RangeError("universe index out of range");
  const Count radix = coeff_cap_ + 1;
  std::vector<Count> digits(exponents_.size());
  for (std::size_t k = exponents_.size(); k-- > 0;) {
    digits[k] = index % radix;
    index /= radix;
  }
  Ordinal out;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    out = natural_sum(out, Ordinal::omega_power(exponents_[k], digits[k]));
  }
  return out;
}

std::optional<std::vector<Count>> OrdinalUniverse::coefficients(const Ordinal& a) const {
  std::vector<Count> out(exponents_.size(), 0);
  std::size_t k = 0;
  for (const auto& t : a.terms()) {
    while (k < exponents_.size() && exponents_[k] > t.exponent) ++k;
    if (k == exponents_.size() || exponents_[k] != t.exponent) return std::nullopt;
    if (t.coefficient > coeff_cap_) return std::nullopt;
    out[k] = t.coefficient;
  }
  return out;
}

std::optional<std::size_t> OrdinalUniverse::index_of(const Ordinal& a) const {
  auto digits = coefficients(a);
  if (!digits) return std::nullopt;
  std::size_t index = 0;
  for (Count d : *digits) index = index * (coeff_cap_ + 1) + d;
  return index;
}

bool OrdinalUniverse::interior(const Ordinal& a) const {
  auto digits = coefficients(a);
  if (!digits) return false;
  return std::all_of(digits->begin(), digits->end(),
                     [&](Count d) { return d + margin_ <= coeff_cap_; });
}

std::string OrdinalUniverse::describe() const {
  std::string out = "E={";
  for (std::size_t k = exponents_.size(); k-- > 0;) {
    out += exponents_[k].to_string();
    if (k > 0) out += ",";
  }
  return out + "},C=" + std::to_string(coeff_cap_) + ",margin=" + std::to_string(margin_);
}

// ---------------------------------------------------------------------------
// Rulesets

TransfiniteFamily parse_transfinite_family(std::string_view text) {
  if (text == "wythoff") return TransfiniteFamily::Wythoff;
  if (text == "yama") return TransfiniteFamily::Yama;
  if (text == "triangular") return TransfiniteFamily::Triangular;
  throw UsageError("unknown transfinite family '" + std::string(text) +
                   "' (expected wythoff, yama or triangular)");
}

std::string_view to_string(TransfiniteFamily f) {
  switch (f) {
    case TransfiniteFamily::Wythoff: return "wythoff";
    case TransfiniteFamily::Yama: return "yama";
    case TransfiniteFamily::Triangular: return "triangular";
  }
  return "?";
}

bool is_transfinite_move(TransfiniteFamily family, const OrdinalPair& from,
                         const OrdinalPair& to) {
  const auto& [a, b] = from;
  const auto& [a2, b2] = to;
  switch (family) {
    case TransfiniteFamily::Wythoff:
      if (a2 < a && b2 == b) return true;
      if (a2 == a && b2 < b) return true;
      return a2 < a && natural_sum(a, b2) == natural_sum(b, a2);
    case TransfiniteFamily::Yama:
      return (b2 == successor(b) && successor(a2) < a) ||
             (a2 == successor(a) && successor(b2) < b);
    case TransfiniteFamily::Triangular:
      if (!(natural_sum(a2, b2) < natural_sum(a, b))) return false;
      return (a2 < a && b < b2) || (a < a2 && b2 < b);
  }
  return false;
}

bool options_leave_universe(TransfiniteFamily family, const OrdinalPair& from,
                            const OrdinalUniverse& universe) {
  const auto& [a, b] = from;
  const Ordinal two(2);
  switch (family) {
    case TransfiniteFamily::Wythoff:
      // Below an infinite heap every natural number is reachable.
      return !a.is_finite() || !b.is_finite();
    case TransfiniteFamily::Yama: {
      auto side = [&](const Ordinal& source, const Ordinal& target) {
        if (source < two) return false;  // no source with s' + 1 < source
        return !source.is_finite() || !universe.contains(successor(target));
      };
      return side(a, b) || side(b, a);
    }
    case TransfiniteFamily::Triangular: {
      // Lowering `source` to s' lets `target` grow to anything below
      // target + (source - s'); finite sources bound this by
      // target + (source - 1).
      auto side = [&](const Ordinal& source, const Ordinal& target) {
        if (source < two) return false;
        if (!source.is_finite()) return true;
        return !universe.contains(natural_sum(target, Ordinal(source.unit_coefficient() - 1)));
      };
      return side(a, b) || side(b, a);
    }
  }
  return false;
}

TransfiniteOptions transfinite_options(TransfiniteFamily family, const OrdinalPair& from,
                                       const OrdinalUniverse& universe) {
  if (!universe.contains(from.first) || !universe.contains(from.second)) {
    throw UsageError("position (" + from.first.to_string() + ", " +
                     from.second.to_string() + ") is outside " + universe.describe());
  }
  TransfiniteOptions out;
  std::vector<Ordinal> elements;
  elements.reserve(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) elements.push_back(universe.element(i));
  for (const auto& a2 : elements) {
    for (const auto& b2 : elements) {
      if (is_transfinite_move(family, from, {a2, b2})) out.options.push_back({a2, b2});
    }
  }
  out.truncated = options_leave_universe(family, from, universe);
  return out;
}

bool transfinite_wythoff_p(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  if (ta.size() != tb.size()) return false;
  for (std::size_t i = 0; i < ta.size(); ++i) {
    if (ta[i].exponent != tb[i].exponent) return false;
    if (ta[i].coefficient >= kFormulaLimit || tb[i].coefficient >= kFormulaLimit) {
      throw RangeError("ordinal coefficient outside the supported range [0, 2^31)");
    }
    if (!classic_wythoff_p(ta[i].coefficient, tb[i].coefficient)) return false;
  }
  return true;
}

bool transfinite_successor_adjacent(const Ordinal& a, const Ordinal& b) {
  return successor(a) == b || successor(b) == a;
}

bool transfinite_yama_p(const Ordinal& a, const Ordinal& b) {
  return a == b || transfinite_successor_adjacent(a, b);
}

bool transfinite_triangular_p(const Ordinal& a, const Ordinal& b) {
  return transfinite_yama_p(a, b);
}

bool transfinite_p(TransfiniteFamily family, const Ordinal& a, const Ordinal& b) {
  switch (family) {
    case TransfiniteFamily::Wythoff: return transfinite_wythoff_p(a, b);
    case TransfiniteFamily::Yama: return transfinite_yama_p(a, b);
    case TransfiniteFamily::Triangular: return transfinite_triangular_p(a, b);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Closure check on coefficient vectors
//
// With exponents fixed, an ordinal is its coefficient vector, ordinal order
// is lexicographic order, and natural sum is vector addition. The move rules
// below mirror is_transfinite_move in that encoding; the unit coefficient is
// the last entry.

namespace {

using Coeffs = const Count*;

int lex(Coeffs a, Coeffs b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

// a + 1 == s
bool is_successor(Coeffs s, Coeffs a, std::size_t n) {
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (s[k] != a[k]) return false;
  }
  return s[n - 1] == a[n - 1] + 1;
}

// a + 1 < b
bool successor_below(Coeffs a, Coeffs b, std::size_t n) {
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k] != b[k]) return a[k] < b[k];
  }
  return a[n - 1] + 1 < b[n - 1];
}

// a2 + b2 < a + b
bool sum_below(Coeffs a2, Coeffs b2, Coeffs a, Coeffs b, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    const Count lhs = a2[k] + b2[k], rhs = a[k] + b[k];
    if (lhs != rhs) return lhs < rhs;
  }
  return false;
}

bool encoded_move(TransfiniteFamily family, Coeffs a, Coeffs b, Coeffs a2, Coeffs b2,
                  std::size_t n) {
  switch (family) {
    case TransfiniteFamily::Wythoff: {
      const int ca = lex(a2, a, n), cb = lex(b2, b, n);
      if (ca < 0 && cb == 0) return true;
      if (ca == 0 && cb < 0) return true;
      if (ca >= 0) return false;
      for (std::size_t k = 0; k < n; ++k) {
        // a - a2 == b - b2, kept in unsigned arithmetic
        if (a[k] + b2[k] != b[k] + a2[k]) return false;
      }
      return true;
    }
    case TransfiniteFamily::Yama:
      return (is_successor(b2, b, n) && successor_below(a2, a, n)) ||
             (is_successor(a2, a, n) && successor_below(b2, b, n));
    case TransfiniteFamily::Triangular: {
      if (!sum_below(a2, b2, a, b, n)) return false;
      const int ca = lex(a2, a, n), cb = lex(b2, b, n);
      return (ca < 0 && cb > 0) || (ca > 0 && cb < 0);
    }
  }
  return false;
}

struct EncodedUniverse {
  std::size_t n = 0;
  std::vector<Ordinal> ordinals;
  std::vector<Count> coeffs;  // ordinals.size() * n

  explicit EncodedUniverse(const OrdinalUniverse& u) : n(u.exponents().size()) {
    ordinals.reserve(u.size());
    coeffs.reserve(u.size() * n);
    for (std::size_t i = 0; i < u.size(); ++i) {
      ordinals.push_back(u.element(i));
      auto c = *u.coefficients(ordinals.back());
      coeffs.insert(coeffs.end(), c.begin(), c.end());
    }
  }
  Coeffs at(std::size_t i) const { return coeffs.data() + i * n; }
  std::size_t size() const { return ordinals.size(); }
};

using PairList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

PairList p_pairs(const EncodedUniverse& u, const OrdinalPairPredicate& is_p) {
  PairList out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (is_p(u.ordinals[i], u.ordinals[j])) {
        out.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
      }
    }
  }
  return out;
}

bool reaches(TransfiniteFamily family, Coeffs a, Coeffs b, const EncodedUniverse& targets,
             const PairList& p_list) {
  for (const auto& [i, j] : p_list) {
    if (encoded_move(family, a, b, targets.at(i), targets.at(j), targets.n)) return true;
  }
  return false;
}

}  // namespace

ClosureReport closure_check(TransfiniteFamily family, const OrdinalUniverse& universe,
                            const OrdinalPairPredicate& is_p_in, unsigned threads) {
  const OrdinalPairPredicate is_p =
      is_p_in ? is_p_in : [family](const Ordinal& a, const Ordinal& b) {
        return transfinite_p(family, a, b);
      };
  const std::size_t m = universe.size();
  if (m > 0 && m > default_capacity() / m) {
    throw CapacityError("universe has more than " + std::to_string(default_capacity()) +
                        " pairs");
  }

  const EncodedUniverse enc(universe);
  const PairList p_list = p_pairs(enc, is_p);
  std::vector<char> in_p(m * m, 0);
  for (const auto& [i, j] : p_list) in_p[i * m + j] = 1;
  std::vector<char> interior(m);
  for (std::size_t i = 0; i < m; ++i) interior[i] = universe.interior(enc.ordinals[i]);

  ClosureReport report;
  report.family = family;
  report.universe = universe.describe();
  report.pairs = m * m;
  report.p_count = p_list.size();

  enum Verdict : char { kOk, kCond1, kInterior, kNeedsExtension, kUnchecked };
  std::vector<char> verdict(m * m, kOk);

  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t at = i * m + j;
        if (in_p[at]) {
          if (reaches(family, enc.at(i), enc.at(j), enc, p_list)) verdict[at] = kCond1;
          continue;
        }
        if (!interior[i] || !interior[j]) {
          verdict[at] = kUnchecked;
          continue;
        }
        if (reaches(family, enc.at(i), enc.at(j), enc, p_list)) continue;
        verdict[at] = options_leave_universe(family, {enc.ordinals[i], enc.ordinals[j]}, universe)
                          ? kNeedsExtension
                          : kInterior;
      }
    }
  };
  const unsigned workers = std::max<unsigned>(
      1, std::min<std::size_t>(threads ? threads : std::thread::hardware_concurrency(), m));
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, m * w / workers, m * (w + 1) / workers);
    }
  }

  // Winning moves whose target needs a coefficient above the cap.
  std::optional<EncodedUniverse> wide;
  PairList wide_p;
  for (std::size_t at = 0; at < m * m; ++at) {
    if (verdict[at] != kNeedsExtension) continue;
    if (!wide) {
      wide.emplace(OrdinalUniverse(universe.exponents(), 2 * universe.coeff_cap(), 0));
      wide_p = p_pairs(*wide, is_p);
    }
    const std::size_t i = at / m, j = at % m;
    if (reaches(family, enc.at(i), enc.at(j), *wide, wide_p)) {
      verdict[at] = kOk;
      ++report.extended_resolved;
    } else {
      verdict[at] = kUnchecked;
    }
  }

  for (std::size_t at = 0; at < m * m; ++at) {
    const std::size_t i = at / m, j = at % m;
    if (!in_p[at] && interior[i] && interior[j]) ++report.interior_checked;
    switch (verdict[at]) {
      case kCond1: ++report.condition1_failures; break;
      case kInterior: ++report.interior_failures; break;
      case kUnchecked: ++report.unchecked; break;
      default: break;
    }
    if ((verdict[at] == kCond1 || verdict[at] == kInterior) && !report.first_failure) {
      report.first_failure = OrdinalPair{enc.ordinals[i], enc.ordinals[j]};
      report.first_failure_kind =
          verdict[at] == kCond1 ? "P-position with a move into the set"
                                : "interior non-P position with no move into the set";
    }
  }
  return report;
}

}  // namespace nimforge
