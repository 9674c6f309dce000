#pragma once

// Closed-form, recursive, morphic and asymptotic descriptions of the
// P-positions of K^l and W^k, each checkable against the brute-force
// tables of game.hpp.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "wythoff/fib.hpp"
#include "wythoff/game.hpp"
#include "wythoff/golden.hpp"
#include "wythoff/kernel.hpp"
#include "wythoff/sequences.hpp"

namespace wythoff {

/// Outcome of a sequence-level check; `detail` names the first failure.
struct CheckResult {
  bool holds = true;
  std::string detail;

  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return holds; }
};

// --- recursive description -------------------------------------------------

/// (a_0, b_0) = (l+1, 2l+2); a_n = mex({a_i, b_i : i < n} u {0..l}),
/// b_n = a_n + n + l + 1.
inline PposSequence mex_sequence(nat ell, std::size_t count) {
  PposSequence s;
  s.ell = ell;
  s.pairs.reserve(count);
  MexSet used;
  for (nat v = 0; v <= ell; ++v) used.insert(v);
  for (std::size_t n = 0; n < count; ++n) {
    const nat a = used.mex();
    const nat b = a + n + ell + 1;
    used.insert(a);
    used.insert(b);
    s.pairs.push_back({a, b});
  }
  return s;
}

/// First pairs of mex_sequence(ell) whose b-value is at most `bound`.
inline PposSequence mex_sequence_within(nat ell, nat bound) {
  PposSequence s;
  s.ell = ell;
  MexSet used;
  for (nat v = 0; v <= ell; ++v) used.insert(v);
  for (std::size_t n = 0;; ++n) {
    const nat a = used.mex();
    const nat b = a + n + ell + 1;
    if (b > bound) break;
    used.insert(a);
    used.insert(b);
    s.pairs.push_back({a, b});
  }
  return s;
}

/// Structural properties of a mex-defined sequence: both coordinates strictly
/// increasing, b_n = a_n + n + l + 1, gaps in {1,2} and {2,3}, and
/// {a_n} u {b_n} partitioning (l, b_last] up to the last b-value covered by
/// the a-values.
inline CheckResult check_ppos_structure(const PposSequence& s) {
  const nat ell = s.ell;
  for (std::size_t n = 0; n < s.size(); ++n) {
    const auto& [a, b] = s[n];
    if (b != a + n + ell + 1) return CheckResult::fail("b_n != a_n + n + l + 1 at n=" + std::to_string(n));
    if (n == 0) continue;
    const auto& prev = s[n - 1];
    const nat da = a - prev.a;
    const nat db = b - prev.b;
    if (a <= prev.a || (da != 1 && da != 2)) return CheckResult::fail("a-gap outside {1,2} at n=" + std::to_string(n));
    if (db != 2 && db != 3) return CheckResult::fail("b-gap outside {2,3} at n=" + std::to_string(n));
  }
  if (s.size() == 0) return {};
  // Every value in (l, a_last] must be hit exactly once.
  const nat horizon = s.pairs.back().a;
  std::vector<std::uint8_t> hits(static_cast<std::size_t>(horizon) + 1, 0);
  for (const auto& [a, b] : s.pairs) {
    if (a <= ell) return CheckResult::fail("a-value inside the terminal range");
    if (++hits[a] > 1) return CheckResult::fail("value " + std::to_string(a) + " used twice");
    if (b <= horizon && ++hits[b] > 1) return CheckResult::fail("value " + std::to_string(b) + " used twice");
  }
  for (nat v = ell + 1; v <= horizon; ++v)
    if (!hits[v]) return CheckResult::fail("value " + std::to_string(v) + " missing from the partition");
  return {};
}

// --- K^1 --------------------------------------------------------------------

/// (a, b) with a <= b is a P-position of K^1 iff a + b <= 1, or rep(a) ends
/// with 0 and rep(b) = rep(a)1.
inline bool closed_form_K1(nat a, nat b) {
  if (a + b <= 1) return true;
  const auto ra = rep_f(a);
  if (ra.empty() || ra.digits().back() != 0) return false;
  const auto rb = rep_f(b);
  if (rb.size() != ra.size() + 1 || rb.digits().back() != 1) return false;
  return std::equal(ra.digits().begin(), ra.digits().end(), rb.digits().begin());
}

inline bool ppos_K1(nat x, nat y) { return x <= y ? closed_form_K1(x, y) : closed_form_K1(y, x); }

/// floor((n+1) phi - 1), floor((n+1) phi^2 - 1): the K^1 pairs indexed with
/// the terminal pair (0,1) at n = 0, so that n = m+1 gives mex pair m.
inline PPair k1_beatty_pair(nat n) { return {floor_phi(n + 1) - 1, floor_phi2(n + 1) - 1}; }

// --- K^2, K^3, K^4 ----------------------------------------------------------

inline const AutomaticSequence& g_automaton() {
  static const AutomaticSequence s(known::g_sequence());
  return s;
}
inline const AutomaticSequence& g3_automaton() {
  static const AutomaticSequence s(known::g3_sequence());
  return s;
}
inline const AutomaticSequence& g4_automaton() {
  static const AutomaticSequence s(known::g4_sequence());
  return s;
}

/// (floor(n phi) + g(n) - 1, floor(n phi^2) + g(n)), n >= 0. Small n land in
/// the terminal region.
inline PPair closed_form_K2(nat n) {
  const nat g = static_cast<nat>(g_automaton()(n));
  return {floor_phi(n) + g - 1, floor_phi2(n) + g};
}

/// n-th non-terminal pair of K^3: (floor((n+2) phi) + g3(n+1) - 1,
/// floor((n+2) phi^2) + g3(n+1) + 1).
inline PPair closed_form_K3(nat n) {
  const nat g = static_cast<nat>(g3_automaton()(n + 1));
  return {floor_phi(n + 2) + g - 1, floor_phi2(n + 2) + g + 1};
}

/// n-th non-terminal pair of K^4: (floor((n+2) phi) + g4(n+1),
/// floor((n+2) phi^2) + g4(n+1) + 3).
inline PPair closed_form_K4(nat n) {
  const nat g = static_cast<nat>(g4_automaton()(n + 1));
  return {floor_phi(n + 2) + g, floor_phi2(n + 2) + g + 3};
}

/// Membership in the union of the terminal region of `spec` and the unordered
/// pairs listed, restricted to [0,B]^2.
inline Membership pair_set_membership(const std::vector<PPair>& pairs, const GameSpec& spec, nat bound) {
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  auto box = std::make_shared<std::vector<std::uint8_t>>(n * n, 0);
  for (const auto& [a, b] : pairs) {
    if (a <= bound && b <= bound) {
      (*box)[b * n + a] = 1;
      (*box)[a * n + b] = 1;
    }
  }
  return [box, n, spec](nat x, nat y) { return spec.is_terminal(x, y) || (*box)[y * n + x] != 0; };
}

/// Every pair of the K^2 algebraic family with a <= B.
inline std::vector<PPair> k2_family(nat bound) {
  std::vector<PPair> r;
  for (nat n = 0; floor_phi(n) <= bound + 1; ++n) r.push_back(closed_form_K2(n));
  return r;
}

// --- blocking games ---------------------------------------------------------

/// R_2 = {(0,0)} u {{n, 2n+1}} u {{2 floor(n phi) + 2, 2 floor(n phi^2) + 2}}.
inline bool ppos_W2(nat x, nat y) {
  const nat lo = std::min(x, y), hi = std::max(x, y);
  if (lo == 0 && hi == 0) return true;
  if (hi == 2 * lo + 1) return true;
  if (lo % 2 || hi % 2 || lo < 2) return false;
  const nat target = lo / 2 - 1;  // must equal floor(n phi)
  nat low = 0, high = target + 1;
  while (low < high) {
    const nat mid = low + (high - low) / 2;
    if (floor_phi(mid) < target) low = mid + 1; else high = mid;
  }
  return floor_phi(low) == target && hi == 2 * floor_phi2(low) + 2;
}

/// R_3 = {(0,0)} u {{n, 2n+1}, {n, 2n+2}}.
inline bool ppos_W3(nat x, nat y) {
  const nat lo = std::min(x, y), hi = std::max(x, y);
  return (lo == 0 && hi == 0) || hi == 2 * lo + 1 || hi == 2 * lo + 2;
}

// --- discrepancy ------------------------------------------------------------

/// Per-index quantities along mex_sequence(ell):
///   S_n = #{i : b_i < a_n} = a_n - l - 1 - n,
///   eps_n = S_n + S_{S_n} - n + l  (in {0,1} whenever S_n >= 1),
///   lambda_n = a_n - floor((n+l) phi),
/// and D_n = S_n - n/phi = (S_n + n) - n phi, kept as its two integer parts.
struct DiscrepancyProfile {
  nat ell = 0;
  PposSequence pairs;
  std::vector<nat> S;
  std::vector<std::int64_t> epsilon;
  std::vector<std::int64_t> lambda;

  std::size_t size() const { return S.size(); }

  /// Display only; no decision depends on it.
  double approx_discrepancy(std::size_t n) const {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    return static_cast<double>(S[n]) - static_cast<double>(n) / phi;
  }

  /// |D_n| <= phi * l, decided exactly:
  /// -phi l <= (S_n + n) - n phi <= phi l  iff
  /// S_n + n <= (n + l) phi  and  S_n + n >= (n - l) phi.
  bool discrepancy_bounded(std::size_t n) const {
    const auto p = static_cast<std::int64_t>(S[n] + n);
    const auto nn = static_cast<std::int64_t>(n);
    const auto l = static_cast<std::int64_t>(ell);
    return golden::le_phi_multiple(p, nn + l) && golden::ge_phi_multiple(p, nn - l);
  }
};

inline DiscrepancyProfile discrepancy_profile(nat ell, std::size_t horizon) {
  DiscrepancyProfile d;
  d.ell = ell;
  d.pairs = mex_sequence(ell, horizon + 1);
  d.S.resize(horizon + 1);
  d.epsilon.resize(horizon + 1);
  d.lambda.resize(horizon + 1);
  for (std::size_t n = 0; n <= horizon; ++n) d.S[n] = d.pairs[n].a - ell - 1 - n;
  for (std::size_t n = 0; n <= horizon; ++n) {
    const auto s = d.S[n];
    d.epsilon[n] = static_cast<std::int64_t>(s + d.S[s]) - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(ell);
    d.lambda[n] = static_cast<std::int64_t>(d.pairs[n].a) - static_cast<std::int64_t>(floor_phi(n + ell));
  }
  return d;
}

/// All identities of the discrepancy argument on the profile's range:
///  - S_0 = ... = S_l = 0, S_{l+1} = 1, S non-decreasing;
///  - S_n counts the b-values below a_n (two-pointer count);
///  - eps_n in {0,1} wherever S_n >= 1 (the identity's domain);
///  - |D_n| <= phi l for every n;
///  - 1 - l sqrt5 < lambda_n < l + 2, hence |lambda_n| <= l (phi - 1) + phi l + 2.
inline CheckResult check_discrepancy(const DiscrepancyProfile& d) {
  const nat ell = d.ell;
  const auto l = static_cast<std::int64_t>(ell);
  const auto at = [](std::size_t n) { return " at n=" + std::to_string(n); };
  std::size_t below = 0;
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (n <= ell && d.S[n] != 0) return CheckResult::fail("S_n != 0 inside the initial run" + at(n));
    if (n == ell + 1 && d.S[n] != 1) return CheckResult::fail("S_{l+1} != 1");
    if (n > 0 && d.S[n] < d.S[n - 1]) return CheckResult::fail("S decreases" + at(n));
    while (below < d.size() && d.pairs[below].b < d.pairs[n].a) ++below;
    if (below == d.size()) return CheckResult::fail("horizon too short to count b-values" + at(n));
    if (d.S[n] != below) return CheckResult::fail("S_n differs from the count of b-values below a_n" + at(n));
    if (d.S[n] >= 1 && d.epsilon[n] != 0 && d.epsilon[n] != 1)
      return CheckResult::fail("eps_n = " + std::to_string(d.epsilon[n]) + at(n));
    if (!d.discrepancy_bounded(n)) return CheckResult::fail("|D_n| > phi l" + at(n));
    const auto lam = d.lambda[n];
    if (!golden::gt(lam - 1, -l) || lam >= l + 2) return CheckResult::fail("lambda outside (1 - l sqrt5, l + 2)" + at(n));
    if (!golden::le(std::abs(lam) - 2, l)) return CheckResult::fail("|lambda| > l sqrt5 + 2" + at(n));
  }
  return {};
}

/// |a_n / n - phi| <= 1/100, decided exactly: with 100 n phi = 50n + 50n sqrt5,
/// 100 a_n - 51 n <= 50 n sqrt5 <= 100 a_n - 49 n.
inline bool density_within_percent(nat a_n, nat n) {
  const auto a = static_cast<std::int64_t>(a_n);
  const auto m = static_cast<std::int64_t>(n);
  return golden::le(100 * a - 51 * m, 50 * m) && golden::ge(100 * a - 49 * m, 50 * m);
}

// --- counting ---------------------------------------------------------------

/// pi_A(x) + pi_B(x) = x - l - 1 for l + 1 < x <= X, and pi_A(b_n) = a_n
/// for every b_n <= X. Needs the a-values to reach X, so that no value below
/// X is missing.
inline CheckResult counting_check(const PposSequence& s, nat limit) {
  const nat ell = s.ell;
  if (s.size() == 0 || s.pairs.back().a < limit) return CheckResult::fail("sequence does not reach past X");
  std::size_t pa = 0, pb = 0;  // pi_A(x), pi_B(x)
  for (nat x = ell + 2; x <= limit; ++x) {
    while (pa < s.size() && s[pa].a < x) ++pa;
    while (pb < s.size() && s[pb].b < x) ++pb;
    if (pa + pb != x - ell - 1)
      return CheckResult::fail("pi_A + pi_B != x - l - 1 at x=" + std::to_string(x));
  }
  std::size_t count_a = 0;
  for (std::size_t n = 0; n < s.size() && s[n].b <= limit; ++n) {
    while (count_a < s.size() && s[count_a].a < s[n].b) ++count_a;
    if (count_a != s[n].a) return CheckResult::fail("pi_A(b_n) != a_n at n=" + std::to_string(n));
  }
  return {};
}

// --- spectrum statistics ----------------------------------------------------

using Rational = boost::rational<std::int64_t>;

struct SpectrumBounds {
  /// max over 1 <= i < k <= L of (c_k - c_{k-i} - 1) / i
  Rational lower;
  /// min over 1 <= i < k <= L of (c_k - c_{k-i} + 1) / i
  Rational upper;

  /// A spectrum floor(n alpha + beta) exists iff lower < upper.
  bool is_spectrum() const { return lower < upper; }
};

inline SpectrumBounds spectrum_bounds(const std::vector<nat>& c) {
  if (c.size() < 2) throw std::invalid_argument("spectrum_bounds: prefix length must be at least 2");
  SpectrumBounds r;
  bool first = true;
  for (std::size_t k = 1; k < c.size(); ++k) {
    for (std::size_t i = 1; i <= k; ++i) {
      const auto diff = static_cast<std::int64_t>(c[k]) - static_cast<std::int64_t>(c[k - i]);
      const Rational lo(diff - 1, static_cast<std::int64_t>(i));
      const Rational hi(diff + 1, static_cast<std::int64_t>(i));
      if (first || lo > r.lower) r.lower = lo;
      if (first || hi < r.upper) r.upper = hi;
      first = false;
    }
  }
  return r;
}

// --- morphic codings --------------------------------------------------------

/// The letter at a_n - offset of the coded fixed point is a, the letter at
/// b_n - offset is b, for every pair with b_n <= horizon.
inline CheckResult morphic_coding_check(const MorphicWord& w, nat offset, const PposSequence& s, nat horizon) {
  if (horizon < offset) return CheckResult::fail("horizon below the offset");
  const auto word = morphic_prefix(w, static_cast<std::size_t>(horizon - offset + 1));
  std::size_t checked = 0;
  for (std::size_t n = 0; n < s.size() && s[n].b <= horizon; ++n) {
    const auto& [a, b] = s[n];
    if (a < offset) return CheckResult::fail("a_n below the offset at n=" + std::to_string(n));
    if (word[a - offset] != kSymbolA) return CheckResult::fail("letter at a_" + std::to_string(n) + " is not a");
    if (word[b - offset] != kSymbolB) return CheckResult::fail("letter at b_" + std::to_string(n) + " is not b");
    ++checked;
  }
  if (checked == 0) return CheckResult::fail("no pair inside the horizon");
  return {};
}

}  // namespace wythoff
