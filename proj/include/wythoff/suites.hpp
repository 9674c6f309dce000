#pragma once

// Named verification suites over the library, collected into a report
// sorted by item name.

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <iomanip>
#include <stdexcept>
#include <string>
#include <vector>

#include "wythoff/characterizations.hpp"
#include "wythoff/game.hpp"
#include "wythoff/kernel.hpp"
#include "wythoff/sequences.hpp"

namespace wythoff {

struct ReportEntry {
  std::string name;
  std::string spec;
  nat bound = 0;
  bool pass = false;
  std::optional<std::string> counterexample;
  double seconds = 0;
};

class VerificationReport {
 public:
  void add(ReportEntry e) { entries_.push_back(std::move(e)); }

  /// Times `check` and records its outcome. An empty optional means PASS.
  void run(std::string name, std::string spec, nat bound, const std::function<std::optional<std::string>()>& check) {
    const auto t0 = std::chrono::steady_clock::now();
    auto failure = check();
    const auto t1 = std::chrono::steady_clock::now();
    add({std::move(name), std::move(spec), bound, !failure.has_value(), std::move(failure),
         std::chrono::duration<double>(t1 - t0).count()});
  }

  void merge(const VerificationReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  std::vector<ReportEntry> sorted() const {
    auto r = entries_;
    std::stable_sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return r;
  }

  bool passed() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.pass; });
  }
  std::size_t size() const { return entries_.size(); }

  void print(std::ostream& out) const {
    for (const auto& e : sorted()) {
      out << (e.pass ? "PASS " : "FAIL ") << std::left << std::setw(34) << e.name << ' ' << std::setw(6) << e.spec
          << " B=" << std::setw(7) << e.bound << ' ' << std::fixed << std::setprecision(3) << e.seconds << "s";
      if (e.counterexample) out << "  " << *e.counterexample;
      out << '\n';
    }
    out << (passed() ? "all " : "some ") << "checks " << (passed() ? "passed" : "FAILED") << " (" << size()
        << ")\n";
  }

 private:
  std::vector<ReportEntry> entries_;
};

inline constexpr nat kDefaultBoundK = 800;
inline constexpr nat kDefaultBoundW = 400;
inline constexpr nat kDefaultDiscrepancyHorizon = 100000;
inline constexpr nat kDefaultMorphicHorizon = 10000;
inline constexpr nat kRedundancyMaxStep = 30;

namespace suites {

namespace detail {

inline std::optional<std::string> describe(const Verdict& v) {
  if (v.holds) return std::nullopt;
  const auto& c = *v.counterexample;
  std::string s = "at " + to_string(c.at) + ": " + c.detail;
  if (c.target) s += " -> " + to_string(*c.target);
  return s;
}

inline std::optional<std::string> describe(const CheckResult& r) {
  if (r.holds) return std::nullopt;
  return r.detail;
}

inline std::optional<std::string> compare_sets(const Membership& expected, const PNTable& t) {
  for (nat y = 0; y <= t.bound(); ++y)
    for (nat x = 0; x <= t.bound(); ++x)
      if (expected(x, y) != t.is_p(x, y))
        return "mismatch at " + to_string(Position{x, y}) + ": candidate says " + (expected(x, y) ? "P" : "N");
  return std::nullopt;
}

inline std::optional<std::string> compare_pairs(const PposSequence& expected, const PposSequence& actual,
                                                std::size_t count) {
  if (actual.size() < count) return "only " + std::to_string(actual.size()) + " pairs available";
  if (expected.size() < count) return "only " + std::to_string(expected.size()) + " expected pairs";
  for (std::size_t n = 0; n < count; ++n)
    if (!(expected[n] == actual[n]))
      return "pair " + std::to_string(n) + ": expected (" + std::to_string(expected[n].a) + "," +
             std::to_string(expected[n].b) + "), solved (" + std::to_string(actual[n].a) + "," +
             std::to_string(actual[n].b) + ")";
  return std::nullopt;
}

}  // namespace detail

/// Stability and absorption of solve's own output.
inline VerificationReport kernel(const GameSpec& spec, nat bound) {
  VerificationReport r;
  const auto t = solve(spec, bound);
  r.run("kernel/" + spec.name() + "/stable", spec.name(), bound,
        [&] { return detail::describe(check_stable(membership_of(t), spec, bound)); });
  r.run("kernel/" + spec.name() + "/absorbing", spec.name(), bound,
        [&] { return detail::describe(check_absorbing(membership_of(t), spec, bound)); });
  return r;
}

/// K^1 digit rule, K^2 algebraic family (as sets), K^3 and K^4 pair lists.
inline VerificationReport closed_forms(nat ell, nat bound) {
  if (ell < 1 || ell > 4) throw std::invalid_argument("closed-forms: ell must be 1, 2, 3 or 4");
  VerificationReport r;
  const auto spec = GameSpec::terminal(ell);
  const std::string name = "closed-forms/" + spec.name();
  r.run(name, spec.name(), bound, [&]() -> std::optional<std::string> {
    const auto t = solve(spec, bound);
    if (ell == 1) return detail::compare_sets(ppos_K1, t);
    if (ell == 2) return detail::compare_sets(pair_set_membership(k2_family(bound), spec, bound), t);
    const auto solved = ppos_list(t);
    PposSequence expected;
    expected.ell = ell;
    for (nat n = 0;; ++n) {
      const auto p = ell == 3 ? closed_form_K3(n) : closed_form_K4(n);
      if (p.b > bound) break;
      expected.pairs.push_back(p);
    }
    if (expected.size() != solved.size())
      return "pair counts differ: " + std::to_string(expected.size()) + " vs " + std::to_string(solved.size());
    return detail::compare_pairs(expected, solved, expected.size());
  });
  return r;
}

/// mex recursion against brute force, plus partition and counting identities.
inline VerificationReport mex(nat ell, nat bound) {
  VerificationReport r;
  const auto spec = GameSpec::terminal(ell);
  const auto solved = ppos_list(solve(spec, bound));
  const auto expected = mex_sequence_within(ell, bound);
  const std::string name = "mex/" + spec.name();
  r.run(name + "/equals-solve", spec.name(), bound, [&]() -> std::optional<std::string> {
    if (expected.size() != solved.size())
      return "pair counts differ: " + std::to_string(expected.size()) + " vs " + std::to_string(solved.size());
    return detail::compare_pairs(expected, solved, expected.size());
  });
  r.run(name + "/partition", spec.name(), bound, [&] { return detail::describe(check_ppos_structure(solved)); });
  r.run(name + "/counting", spec.name(), bound, [&] {
    const auto s = mex_sequence_within(ell, 2 * bound + 2 * ell + 4);
    return detail::describe(counting_check(s, bound));
  });
  return r;
}

/// k = 1: W^1 coincides with K^0. k = 2, 3: the explicit sets R_2, R_3.
inline VerificationReport blocking(nat k, nat bound) {
  if (k < 1 || k > 3) throw std::invalid_argument("blocking: k must be 1, 2 or 3");
  VerificationReport r;
  const auto spec = GameSpec::blocking(k);
  r.run("blocking/" + spec.name(), spec.name(), bound, [&]() -> std::optional<std::string> {
    const auto t = solve(spec, bound);
    if (k == 1) {
      const auto k0 = solve(GameSpec::terminal(0), bound);
      return detail::compare_sets(membership_of(k0), t);
    }
    return detail::compare_sets(k == 2 ? Membership(ppos_W2) : Membership(ppos_W3), t);
  });
  return r;
}

inline VerificationReport discrepancy(nat ell, nat horizon) {
  VerificationReport r;
  const std::string spec = GameSpec::terminal(ell).name();
  r.run("discrepancy/" + spec, spec, horizon, [&]() -> std::optional<std::string> {
    const auto d = discrepancy_profile(ell, horizon);
    if (auto f = detail::describe(check_discrepancy(d))) return f;
    if (horizon > 0 && !density_within_percent(d.pairs[horizon].a, horizon))
      return "|a_n / n - phi| > 1/100 at n=" + std::to_string(horizon);
    return std::nullopt;
  });
  return r;
}

/// Every move (i,0), (0,i), (i,i) with i <= max_step has a witness.
inline VerificationReport redundancy(const GameSpec& spec, nat bound, nat max_step = kRedundancyMaxStep) {
  VerificationReport r;
  r.run("redundancy/" + spec.name(), spec.name(), bound, [&]() -> std::optional<std::string> {
    const auto t = solve(spec, bound);
    const RedundancyProbe probe(t);
    for (nat i = 1; i <= max_step; ++i)
      for (const auto& m : {Move::horizontal(i), Move::vertical(i), Move::diagonal(i)})
        if (!probe.witness(m))
          return "no witness for move (" + std::to_string(m.dx) + "," + std::to_string(m.dy) + ")";
    return std::nullopt;
  });
  return r;
}

/// The a/b codings of K^1, K^2, K^3 against brute-force pairs.
inline VerificationReport morphic(nat horizon) {
  VerificationReport r;
  const std::vector<std::pair<MorphicWord, nat>> words = {
      {known::k1_pposition_word(), 2}, {known::k2_pposition_word(), 3}, {known::k3_pposition_word(), 4}};
  for (nat ell = 1; ell <= 3; ++ell) {
    const auto spec = GameSpec::terminal(ell);
    r.run("morphic/" + spec.name(), spec.name(), horizon, [&]() -> std::optional<std::string> {
      const auto s = ppos_list(solve(spec, horizon));
      const auto& [w, offset] = words[ell - 1];
      return detail::describe(morphic_coding_check(w, offset, s, horizon));
    });
  }
  return r;
}

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> n = {"all",         "blocking", "closed-forms", "discrepancy",
                                             "kernel",      "mex",      "morphic",      "redundancy"};
  return n;
}

/// Every suite at its default bounds.
inline VerificationReport all() {
  VerificationReport r;
  for (nat ell = 1; ell <= 4; ++ell) r.merge(kernel(GameSpec::terminal(ell), kDefaultBoundK));
  for (nat k = 1; k <= 3; ++k) r.merge(kernel(GameSpec::blocking(k), kDefaultBoundW));
  for (nat ell = 1; ell <= 4; ++ell) r.merge(closed_forms(ell, kDefaultBoundK));
  for (nat ell = 0; ell <= 9; ++ell) r.merge(mex(ell, kDefaultBoundK));
  for (nat k = 1; k <= 3; ++k) r.merge(blocking(k, kDefaultBoundW));
  for (nat ell = 1; ell <= 8; ++ell) r.merge(discrepancy(ell, kDefaultDiscrepancyHorizon));
  for (nat ell = 1; ell <= 4; ++ell) r.merge(redundancy(GameSpec::terminal(ell), kDefaultBoundW));
  for (nat k = 2; k <= 3; ++k) r.merge(redundancy(GameSpec::blocking(k), kDefaultBoundW));
  r.merge(morphic(kDefaultMorphicHorizon));
  return r;
}

}  // namespace suites
}  // namespace wythoff
