#pragma once

// Fibonacci (Zeckendorf) numeration with weights 1, 2, 3, 5, 8, ...
// Every Beatty floor in this library is computed through representation
// shifts, never through floating point.

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wythoff {

using nat = std::uint64_t;

namespace detail {

// F_0 = 1, F_1 = 2, F_{i+2} = F_{i+1} + F_i; 90 terms cover all of uint64.
inline constexpr std::size_t kFibCount = 90;

constexpr std::array<nat, kFibCount> make_fib_weights() {
  std::array<nat, kFibCount> f{};
  f[0] = 1;
  f[1] = 2;
  for (std::size_t i = 2; i < kFibCount; ++i) f[i] = f[i - 1] + f[i - 2];
  return f;
}

inline constexpr auto kFibWeights = make_fib_weights();

}  // namespace detail

/// Weight of the i-th digit (counted from the least significant end).
constexpr nat fib_weight(std::size_t i) {
  if (i >= detail::kFibCount) throw std::out_of_range("fib_weight: index too large");
  return detail::kFibWeights[i];
}

/// A 0/1 word in canonical Zeckendorf form, most significant digit first.
/// The empty word represents 0.
class FibWord {
 public:
  FibWord() = default;

  /// Builds from a digit string such as "10101". Throws if the word is not
  /// canonical (leading zero or two adjacent ones) or not binary.
  static FibWord parse(std::string_view text) {
    std::vector<std::uint8_t> d;
    d.reserve(text.size());
    for (char c : text) {
      if (c != '0' && c != '1') throw std::invalid_argument("FibWord: non-binary digit");
      d.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (!is_canonical(d)) throw std::invalid_argument("FibWord: not a canonical representation");
    FibWord w;
    w.digits_ = std::move(d);
    return w;
  }

  static bool is_canonical(std::span<const std::uint8_t> d) {
    if (!d.empty() && d.front() != 1) return false;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i] > 1) return false;
      if (i + 1 < d.size() && d[i] == 1 && d[i + 1] == 1) return false;
    }
    return true;
  }

  std::span<const std::uint8_t> digits() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }

  std::string str() const {
    std::string s;
    s.reserve(digits_.size());
    for (auto d : digits_) s.push_back(static_cast<char>('0' + d));
    return s;
  }

  /// Radix order: shorter words first, then lexicographic.
  friend bool operator<(const FibWord& a, const FibWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.digits_ < b.digits_;
  }
  friend bool operator==(const FibWord&, const FibWord&) = default;

 private:
  friend FibWord rep_f(nat n);
  std::vector<std::uint8_t> digits_;
};

/// Greedy representation: repeatedly take the largest weight not exceeding
/// the remainder.
inline FibWord rep_f(nat n) {
  FibWord w;
  if (n == 0) return w;
  std::size_t top = 0;
  while (top + 1 < detail::kFibCount && fib_weight(top + 1) <= n) ++top;
  w.digits_.assign(top + 1, 0);
  for (std::size_t i = top + 1; i-- > 0;) {
    if (fib_weight(i) <= n) {
      n -= fib_weight(i);
      w.digits_[top - i] = 1;
    }
  }
  return w;
}

/// Value of an arbitrary 0/1 digit sequence (msd first); canonicity is not
/// required.
inline nat val_f(std::span<const std::uint8_t> digits) {
  if (digits.size() > detail::kFibCount) throw std::invalid_argument("val_f: word too long");
  nat v = 0;
  const std::size_t k = digits.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto d = digits[i];
    if (d > 1) throw std::invalid_argument("val_f: non-binary symbol");
    if (d) v += fib_weight(k - 1 - i);
  }
  return v;
}

inline nat val_f(std::string_view word) {
  std::vector<std::uint8_t> d;
  d.reserve(word.size());
  for (char c : word) {
    if (c != '0' && c != '1') throw std::invalid_argument("val_f: non-binary symbol");
    d.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return val_f(std::span<const std::uint8_t>(d));
}

inline nat val_f(const FibWord& w) { return val_f(w.digits()); }

/// Value of rep_f(n) followed by `zeros` zero digits.
inline nat shift(nat n, unsigned zeros = 1) {
  const auto w = rep_f(n);
  const auto d = w.digits();
  nat v = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i]) v += fib_weight(d.size() - 1 - i + zeros);
  return v;
}

/// floor(n * phi).
inline nat floor_phi(nat n) { return n == 0 ? 0 : shift(n - 1) + 1; }

/// floor(n * phi^2).
inline nat floor_phi2(nat n) { return n == 0 ? 0 : shift(shift(n - 1)) + 2; }

/// Hofstadter G-sequence (OEIS A005206), h(n) = floor((n+1)/phi).
inline nat hofstadter_h(nat n) { return floor_phi(n + 1) - n - 1; }

/// Least natural not contained in `values` (any order, duplicates allowed).
inline nat mex(std::span<const nat> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (nat v : values)
    if (v < seen.size()) seen[v] = true;
  nat m = 0;
  while (seen[m]) ++m;
  return m;
}

inline nat mex(std::initializer_list<nat> values) {
  return mex(std::span<const nat>(values.begin(), values.size()));
}

/// Incremental mex over a growing set of naturals. Presence is a boolean
/// array grown on demand; the cursor only moves forward, so a run of
/// insertions followed by queries costs O(1) amortized.
class MexSet {
 public:
  void insert(nat v) {
    if (v >= present_.size()) present_.resize(std::max<std::size_t>(v + 1, present_.size() * 2), false);
    present_[v] = true;
  }

  bool contains(nat v) const { return v < present_.size() && present_[v]; }

  nat mex() {
    while (contains(cursor_)) ++cursor_;
    return cursor_;
  }

 private:
  std::vector<bool> present_;
  nat cursor_ = 0;
};

}  // namespace wythoff
