#pragma once

// The sequence g behind the K^2 P-positions, and the known morphisms
// and codings for g, g3, g4 and the P-position words of K^1, K^2, K^3.

#include <algorithm>
#include <vector>

#include "wythoff/fib.hpp"
#include "wythoff/morphism.hpp"

namespace wythoff {

/// g(0..count-1) from the Beatty-sequence definition: g(0) = 1, g(1) = 0,
/// g(n) = 1 - g(m) when floor(n phi) = floor(m phi^2) + 1 for some m,
/// and 1 otherwise. The witness m is found by exact bisection over m <= n,
/// since floor(m phi^2) is strictly increasing and at least 2m.
inline std::vector<int> g_by_definition(std::size_t count) {
  std::vector<int> g(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n == 0) { g[n] = 1; continue; }
    if (n == 1) { g[n] = 0; continue; }
    const nat target = floor_phi(n);
    nat lo = 0, hi = n;
    while (lo < hi) {
      const nat mid = lo + (hi - lo) / 2;
      if (floor_phi2(mid) + 1 < target) lo = mid + 1; else hi = mid;
    }
    g[n] = (floor_phi2(lo) + 1 == target) ? 1 - g[lo] : 1;
  }
  return g;
}

/// g(0..count-1) from the Hofstadter recurrence: for n >= 2,
/// g(n) = 1 - g(h(n-1)) if h(n-2) < h(n-1), and 1 otherwise.
/// Base values follow the definition: g(0) = 1, g(1) = 0.
inline std::vector<int> g_by_hofstadter(std::size_t count) {
  std::vector<int> g(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n == 0) { g[n] = 1; continue; }
    if (n == 1) { g[n] = 0; continue; }
    const nat prev = hofstadter_h(n - 2);
    const nat cur = hofstadter_h(n - 1);
    g[n] = prev < cur ? 1 - g[cur] : 1;
  }
  return g;
}

/// Hofstadter G by its own recurrence h(0) = 0, h(n) = n - h(h(n-1)).
inline std::vector<nat> hofstadter_by_recurrence(std::size_t count) {
  std::vector<nat> h(count);
  for (std::size_t n = 1; n < count; ++n) h[n] = n - h[h[n - 1]];
  return h;
}

struct MorphicWord {
  Morphism mu;
  Coding coding;
  /// The coded fixed point starts from this letter.
  Letter seed = 0;
};

namespace known {

/// sigma: a -> ab, b -> a with a = 0, b = 1, coded to kSymbolA / kSymbolB.
inline MorphicWord fibonacci_word() {
  return {Morphism({{0, 1}, {0}}), Coding({kSymbolA, kSymbolB})};
}

/// g = rho(mu^omega(0)), mu: 0->01, 1->2, 2->31, 3->45, 4->35, 5->4.
inline MorphicWord g_sequence() {
  return {Morphism({{0, 1}, {2}, {3, 1}, {4, 5}, {3, 5}, {4}}), Coding({1, 0, 1, 1, 0, 1})};
}

/// Structural coding of the g morphism: 0,2,3,4 -> a and 1,5 -> b.
inline Coding g_structural() { return Coding({kSymbolA, kSymbolB, kSymbolA, kSymbolA, kSymbolA, kSymbolB}); }

/// g3 over letters 0-9, a=10, b=11.
inline MorphicWord g3_sequence() {
  Morphism mu({{0, 1}, {2}, {3, 4}, {5, 6}, {7}, {7, 8}, {9}, {10, 11}, {10}, {5, 6}, {10, 11}, {7}});
  //            0  1  2  3  4  5  6  7  8  9  a  b
  Coding rho({1, 2, 2, 1, 0, 1, 1, 2, 1, 2, 1, 1});
  return {std::move(mu), std::move(rho)};
}

/// g4 over letters 0-9, a=10 ... h=17.
inline MorphicWord g4_sequence() {
  Morphism mu({{0, 1}, {2}, {3, 4}, {5, 6}, {7}, {8, 9}, {10}, {11, 12}, {13, 12}, {13},
               {14, 15}, {14, 15}, {14}, {7, 16}, {14, 17}, {11}, {13}, {11}});
  //            0  1  2  3  4  5  6  7  8  9  a  b  c  d  e  f  g  h
  Coding rho({1, 2, 2, 1, 0, 0, 0, 1, 1, 1, 2, 1, 1, 1, 1, 0, 0, 1});
  return {std::move(mu), std::move(rho)};
}

/// Word whose a/b letters (indexed from 2) mark the K^1 P-pairs.
inline MorphicWord k1_pposition_word() {
  Morphism mu({{0, 1}, {2}, {3, 4}, {3, 1}, {2}});
  Coding c({kSymbolA, kSymbolA, kSymbolB, kSymbolA, kSymbolB});
  return {std::move(mu), std::move(c)};
}

/// Word whose a/b letters (indexed from 3) mark the K^2 P-pairs.
inline MorphicWord k2_pposition_word() {
  Morphism mu({{0, 1}, {2}, {3, 4}, {5, 6}, {7}, {8, 9}, {10}, {11, 12}, {10, 13}, {14},
               {10, 13}, {5, 6}, {15}, {5}, {8, 9}, {11, 12}});
  std::vector<int> c(16, kSymbolA);
  for (Letter b : {3, 5, 7, 10}) c[b] = kSymbolB;
  return {std::move(mu), Coding(std::move(c))};
}

/// Word whose a/b letters (indexed from 4) mark the K^3 P-pairs.
inline MorphicWord k3_pposition_word() {
  Morphism mu({{0, 1}, {2}, {3, 4}, {5, 6}, {7}, {8, 9}, {10}, {11, 12}, {13, 12}, {14}, {15, 16},
               {14, 17}, {18}, {14, 17}, {19, 12}, {18, 20}, {21}, {18}, {13, 12}, {19, 12}, {14},
               {15, 16}});
  std::vector<int> c(22, kSymbolA);
  for (Letter b : {4, 6, 8, 10, 13, 15, 17, 19, 20}) c[b] = kSymbolB;
  return {std::move(mu), Coding(std::move(c))};
}

}  // namespace known

/// Coded fixed point prefix of a morphic word.
inline std::vector<int> morphic_prefix(const MorphicWord& w, std::size_t len) {
  return w.coding.apply(fixed_point_prefix(w.mu, w.seed, len));
}

/// Evaluates a morphic word at n through its DFAO. Builds the automaton
/// once; keep it around for repeated queries.
class AutomaticSequence {
 public:
  explicit AutomaticSequence(const MorphicWord& w) : dfao_(promote(w.mu, w.coding)) {}
  explicit AutomaticSequence(Dfao d) : dfao_(std::move(d)) {}

  int operator()(nat n) const { return eval_dfao(dfao_, n); }
  const Dfao& dfao() const { return dfao_; }

 private:
  Dfao dfao_;
};

}  // namespace wythoff
