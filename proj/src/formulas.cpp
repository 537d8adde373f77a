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

#include "nimforge/formulas.hpp"

#include <algorithm>

#include "nimforge/solver.hpp"

namespace nimforge {

using I128 = __int128;
using U128 = unsigned __int128;

std::uint64_t isqrt(U128 n) {
  if (n == 0) return 0;
  // Newton iteration from an overestimate; converges monotonically down.
  U128 r = n;
  U128 next = (r + 1) / 2;
  while (next < r) {
    r = next;
    next = (r + n / r) / 2;
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

Count absdiff(Count x, Count y) { return x > y ? x - y : y - x; }

}  // namespace

Grundy yama_grundy(Count x, Count y) {
  require_formula_range({x, y});
  return absdiff(x, y) <= 1 ? 0 : std::min(x, y) + 1;
}

bool yama_misere_p(Count x, Count y) {
  require_formula_range({x, y});
  return std::min(x, y) == 0 && std::max(x, y) >= 2;
}

Grundy triangular_grundy(Count x, Count y) {
  require_formula_range({x, y});
  const Count d = absdiff(x, y);
  if (d <= 1) return 0;
  const Count sum = x + y;
  if (sum <= d * d + 1) return sum - 1;
  // sum and d share parity, so the residue is even.
  const Count k = ((sum - (d * d + 2)) % (2 * d)) / 2;
  return d * (d - 1) / 2 + k;
}

Grundy triangular_grundy_progression(Count x, Count y) {
  require_formula_range({x, y});
  if (x == y) return 0;
  const Count lo = std::min(x, y);
  const Count d = y > x ? y - x : x - y;
  // The progression for g has difference d exactly when
  // d(d-1)/2 <= g < d(d+1)/2; a window of d consecutive values holds one g
  // with lo = 1 + g + k*d.
  if (lo >= 1) {
    const Count base = d * (d - 1) / 2;
    const Count target = (lo - 1) % d;
    const Count g = base + (target + d - base % d) % d;
    if (g <= lo - 1) return g;
  }
  return x + y - 1;
}

bool triangular_misere_p(Count x, Count y) {
  require_formula_range({x, y});
  if (std::min(x, y) >= 2 && absdiff(x, y) <= 1) return true;
  return (x == 0 && y == 2) || (x == 2 && y == 0);
}

bool ab_p_position(std::int64_t a, std::int64_t b, Count x, Count y) {
  if (a < 1 || b >= a) {
    throw UsageError("ab windows need a >= 1 and b < a");
  }
  require_formula_range({x, y});
  const I128 step = static_cast<I128>(a) - b;
  const I128 lo = std::min(x, y);
  const I128 hi = std::max(x, y);
  // The best window is the last one starting at or below lo; earlier ones
  // end sooner.
  const I128 k = lo / step;
  for (I128 j = k; j >= 0 && j >= k - 1; --j) {
    if (j * step <= lo && hi < j * step + a) return true;
  }
  return false;
}

bool yama_wythoff_p(Count c, Count x, Count y) {
  require_formula_range({c, x, y});
  const Count lo = std::min(x, y), hi = std::max(x, y);
  if (lo == 0 && hi <= 1) return true;
  return lo == 1 && hi >= 3 + c;
}

bool yama_wythoff_misere_p(Count c, Count x, Count y) {
  require_formula_range({c, x, y});
  const Count lo = std::min(x, y), hi = std::max(x, y);
  if ((lo == 0 && hi == 2) || (lo == 1 && hi == 1)) return true;
  if (c == 0) return (lo == 2 && hi == 3) || (lo == 3 && hi >= 6);
  return lo == 2 && hi >= 5 + c;
}

Count polygonal(Count c, Count k) {
  require_formula_range({c, k});
  const I128 twice = static_cast<I128>(1 + c) * k * k +
                     (static_cast<I128>(1) - static_cast<I128>(c)) * k;
  const I128 value = twice / 2;
  if (value > static_cast<I128>(UINT64_MAX)) {
    throw RangeError("polygonal number exceeds 64 bits");
  }
  return static_cast<Count>(value);
}

namespace {

I128 polygonal_wide(Count c, I128 k) {
  return ((1 + static_cast<I128>(c)) * k * k + (1 - static_cast<I128>(c)) * k) / 2;
}

}  // namespace

bool triangular_wythoff_p(Count c, Count x, Count y) {
  require_formula_range({c, x, y});
  const Count lo = std::min(x, y), hi = std::max(x, y);
  if (lo == 0 && hi == 0) return true;
  // The sequence is strictly increasing, so k with a_k = lo is found by
  // bisection; a_k <= lo < 2^31 bounds k by 2^17.
  I128 left = 0, right = I128{1} << 17;
  while (left < right) {
    const I128 mid = (left + right) / 2;
    if (polygonal_wide(c, mid) < lo) left = mid + 1; else right = mid;
  }
  return polygonal_wide(c, left) == lo && polygonal_wide(c, left + 1) == hi;
}

namespace {

bool is_power_of(Count d, Count n) {
  if (n == 0) return false;
  while (n % d == 0) n /= d;
  return n == 1;
}

// n = 1 + d + ... + d^(k-1) for some k >= 1.
bool is_repunit(Count d, Count n) {
  if (n == 0) return false;
  while (n > 1) {
    if ((n - 1) % d != 0) return false;
    n = (n - 1) / d;
  }
  return true;
}

void require_base(Count d) {
  if (d < 2) throw UsageError("geometric twist needs d >= 2");
}

}  // namespace

bool geometric_p(Count d, Count x, Count y) {
  require_base(d);
  require_formula_range({d, x, y});
  const Count lo = std::min(x, y), hi = std::max(x, y);
  if (lo == 0) return hi <= 1;
  if (d == 2 && lo == 1 && hi == 1) return true;
  return is_power_of(d, lo) && static_cast<U128>(lo) * d == hi;
}

bool subgeometric_p(Count d, Count x, Count y) {
  require_base(d);
  require_formula_range({d, x, y});
  const Count lo = std::min(x, y), hi = std::max(x, y);
  if (lo == 0) return hi <= 1;
  return is_repunit(d, lo) && static_cast<U128>(lo) * d + 1 == hi;
}

bool three_heap_p(int variant, Count x0, Count y0, Count z0) {
  require_formula_range({x0, y0, z0});
  std::array<Count, 3> h{x0, y0, z0};
  std::sort(h.begin(), h.end());
  const Count x = h[0], y = h[1], z = h[2];
  const bool one_y_y = x == 1 && y == z;
  const bool is_112 = x == 1 && y == 1 && z == 2;
  switch (variant) {
    case 1:
      return (x == 0 && y == 0 && z == 1) || (x == 0 && y == z) ||
             (x == y && y == z) || (x == y && z == 2 * x);
    case 2:
      return z <= 2 || (x == 0 && z <= y + 1) || one_y_y;
    case 3:
      return z <= 1 || is_112 || (x == 0 && y == z);
    case 4:
      return x == 0 && y == 0;
    case 5:
      return z <= 1 || (x == 0 && y == 0) || one_y_y || is_112 ||
             (x >= 1 && x == y && z == 2 * x - 1);
    case 6:
      return z <= 2 || (x == 2 && y == 2 && z == 3) || (x == 0 && y == 0) ||
             one_y_y;
    default:
      throw UsageError("3-heap variant must be in 1..6");
  }
}

bool classic_wythoff_p(Count x, Count y) {
  require_formula_range({x, y});
  const Count lo = std::min(x, y);
  const U128 k = std::max(x, y) - lo;
  // lo == floor(k * phi) == floor((k + floor(k * sqrt 5)) / 2).
  return lo == (k + isqrt(5 * k * k)) / 2;
}

Count conjectured_wythoff_grundy_seq(Count c, Count g, Count k) {
  require_formula_range({c, g, k});
  const I128 kk = k;
  I128 twice;
  if (c == 0 && g == 1) {
    twice = kk * kk + kk + 1 - (k % 2 == 0 ? 1 : -1);
  } else {
    twice = (1 + static_cast<I128>(c)) * kk * kk +
            (1 + 2 * static_cast<I128>(g) - static_cast<I128>(c)) * kk;
  }
  return static_cast<Count>(twice / 2);
}

// ---------------------------------------------------------------------------
// Dispatch

bool has_p_formula(const RulesetSpec& spec) { return has_closed_form(spec); }

bool formula_p(const RulesetSpec& spec, const Position& pos) {
  validate(spec);
  if (dimension(pos) != dimension(spec)) {
    throw UsageError("ruleset " + to_string(spec) + " is played on " +
                     std::to_string(dimension(spec)) + " heaps, got " +
                     to_string(pos));
  }
  if (spec.family == Family::ThreeHeap) {
    const auto& t = std::get<HeapTriple>(pos);
    return three_heap_p(spec.variant, t[0], t[1], t[2]);
  }
  const auto& p = std::get<HeapPair>(pos);
  const auto c = static_cast<Count>(spec.c);
  const auto d = static_cast<Count>(spec.d);
  switch (spec.family) {
    case Family::Yama:
      return yama_grundy(p.x, p.y) == 0;
    case Family::Triangular:
      return triangular_grundy(p.x, p.y) == 0;
    case Family::AbYama:
      if (!has_closed_form(spec)) {
        throw UsageError("no closed form for " + to_string(spec) + " (b < 0)");
      }
      return ab_p_position(spec.a, spec.b, p.x, p.y);
    case Family::AbTriangular:
      return ab_p_position(spec.a, spec.b, p.x, p.y);
    case Family::YamaWythoff:
      return yama_wythoff_p(c, p.x, p.y);
    case Family::TriangularWythoff:
      return triangular_wythoff_p(c, p.x, p.y);
    case Family::GeometricTwist:
      return geometric_p(d, p.x, p.y);
    case Family::SubGeometricTwist:
      return subgeometric_p(d, p.x, p.y);
    case Family::ClassicWythoff:
      return classic_wythoff_p(p.x, p.y);
    case Family::ThreeHeap:
      break;
  }
  return false;
}

std::optional<Grundy> formula_grundy(const RulesetSpec& spec, const HeapPair& pos) {
  if (spec.family == Family::Yama) return yama_grundy(pos.x, pos.y);
  if (spec.family == Family::Triangular) return triangular_grundy(pos.x, pos.y);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Winning moves

namespace {

// Option scans enumerate up to x*y candidates; keep them at desk scale.
constexpr Count kScanLimit = Count{1} << 16;

template <class Pos>
std::optional<Position> oracle_move(const RulesetSpec& spec, const Pos& pos) {
  SolveOptions opts;
  opts.threads = 1;
  const auto map = grundy_table<Pos>(spec, pos.total(), opts);
  if (map.grundy(pos) == 0) return std::nullopt;
  for (const Pos& q : options(spec, pos)) {
    if (map.grundy(q) == 0) return Position{q};
  }
  throw std::logic_error("N-position without a P option");
}

// The standard constructive reply for each family, when it is a legal option.
std::optional<HeapPair> constructive_move(const RulesetSpec& spec, const HeapPair& p) {
  const bool x_small = p.x < p.y;
  const Count lo = p.min(), hi = p.max();
  auto orient = [&](Count small_side, Count big_side) {
    return x_small ? HeapPair{small_side, big_side} : HeapPair{big_side, small_side};
  };
  switch (spec.family) {
    case Family::Yama:
    case Family::Triangular:
      // Take from the larger heap down to lo and give one back: (lo+1, lo).
      if (hi >= lo + 2) return orient(lo + 1, lo);
      return std::nullopt;
    case Family::TriangularWythoff:
      if (absdiff(p.x, p.y) <= static_cast<Count>(spec.c) && lo > 0) {
        return HeapPair{0, 0};
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<Position> winning_move(const RulesetSpec& spec, const Position& pos) {
  validate(spec);
  if (dimension(pos) != dimension(spec)) {
    throw UsageError("ruleset " + to_string(spec) + " is played on " +
                     std::to_string(dimension(spec)) + " heaps, got " +
                     to_string(pos));
  }
  if (spec.family == Family::ThreeHeap) {
    return oracle_move(spec, std::get<HeapTriple>(pos));
  }
  const auto& p = std::get<HeapPair>(pos);
  if (!has_p_formula(spec)) return oracle_move(spec, p);

  if (formula_p(spec, pos)) return std::nullopt;
  if (auto m = constructive_move(spec, p);
      m && is_legal_move(spec, p, *m) && formula_p(spec, *m)) {
    return Position{*m};
  }
  if (p.total() > kScanLimit) {
    throw CapacityError("position " + to_string(p) +
                        " is too large for an option scan");
  }
  for (const HeapPair& q : options(spec, p)) {
    if (formula_p(spec, q)) return Position{q};
  }
  throw std::logic_error("closed form marks " + to_string(p) +
                         " as N but no option is P");
}

}  // namespace nimforge
