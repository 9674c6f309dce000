#pragma once

// Wythoff move geometry and exact retrograde solving of K^l (terminal
// positions x + y <= l) and W^k (the previous player blocks up to k-1
// options).
//
// Every move strictly decreases x + y and never leaves [0,B]^2, so a
// bounded table is exact on its whole box: nothing outside the box is
// ever consulted.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wythoff/fib.hpp"

namespace wythoff {

struct Position {
  nat x = 0;
  nat y = 0;
  friend bool operator==(const Position&, const Position&) = default;
  friend auto operator<=>(const Position&, const Position&) = default;
};

inline std::string to_string(const Position& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

enum class Variant : char { kTerminal = 'K', kBlocking = 'W' };

class GameSpec {
 public:
  /// K^l: positions with x + y <= l are terminal.
  static GameSpec terminal(nat ell) { return GameSpec(Variant::kTerminal, ell); }

  /// W^k: the previous player may forbid up to k-1 options.
  static GameSpec blocking(nat k) {
    if (k < 1) throw std::invalid_argument("GameSpec: blocking budget k must be at least 1");
    return GameSpec(Variant::kBlocking, k);
  }

  Variant variant() const { return variant_; }
  bool is_terminal_variant() const { return variant_ == Variant::kTerminal; }
  nat ell() const { return is_terminal_variant() ? param_ : 0; }
  nat k() const { return is_terminal_variant() ? 1 : param_; }
  /// ell for K, k for W.
  nat param() const { return param_; }

  bool is_terminal(nat x, nat y) const { return is_terminal_variant() && x + y <= param_; }

  /// Number of member options at or below which a position is P:
  /// 0 for K (outside the terminal region), k-1 for W^k.
  nat p_option_limit() const { return is_terminal_variant() ? 0 : param_ - 1; }

  std::string name() const {
    return std::string(1, static_cast<char>(variant_)) + "^" + std::to_string(param_);
  }

  friend bool operator==(const GameSpec&, const GameSpec&) = default;

 private:
  GameSpec(Variant v, nat p) : variant_(v), param_(p) {}
  Variant variant_;
  nat param_;
};

/// All horizontal, vertical and diagonal Wythoff options of p.
inline std::vector<Position> options(Position p) {
  std::vector<Position> r;
  r.reserve(p.x + p.y + std::min(p.x, p.y));
  for (nat i = 1; i <= p.x; ++i) r.push_back({p.x - i, p.y});
  for (nat i = 1; i <= p.y; ++i) r.push_back({p.x, p.y - i});
  for (nat i = 1; i <= std::min(p.x, p.y); ++i) r.push_back({p.x - i, p.y - i});
  return r;
}

/// The move predicate: (c,d) is an option of (a,b).
inline bool is_option(Position from, Position to) {
  if (to.x == from.x && to.y < from.y) return true;
  if (to.x < from.x && to.y == from.y) return true;
  return to.x < from.x && from.x + to.y == to.x + from.y;
}

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr nat kMaxSolveBound = 20000;

/// Exact P/N classification of [0,B]^2. Stored as one bit per position of
/// the half-board x <= y; the other half follows by symmetry.
class PNTable {
 public:
  PNTable(GameSpec spec, nat bound) : spec_(spec), bound_(bound), bits_((cells(bound) + 63) / 64, 0) {}

  const GameSpec& spec() const { return spec_; }
  nat bound() const { return bound_; }

  bool in_box(nat x, nat y) const { return x <= bound_ && y <= bound_; }

  bool is_p(nat x, nat y) const {
    if (!in_box(x, y)) throw std::out_of_range("PNTable: position outside the solved box");
    const auto i = index(x, y);
    return (bits_[i / 64] >> (i % 64)) & 1U;
  }
  bool is_p(Position p) const { return is_p(p.x, p.y); }

  void set_p(nat x, nat y) {
    const auto i = index(x, y);
    bits_[i / 64] |= std::uint64_t{1} << (i % 64);
  }

  const std::vector<std::uint64_t>& raw_bits() const { return bits_; }
  std::vector<std::uint64_t>& raw_bits() { return bits_; }

  /// Number of half-board cells for a bound.
  static std::size_t cells(nat bound) { return static_cast<std::size_t>((bound + 1) * (bound + 2) / 2); }

  friend bool operator==(const PNTable&, const PNTable&) = default;

 private:
  static std::size_t index(nat x, nat y) {
    if (x > y) std::swap(x, y);
    return static_cast<std::size_t>(y * (y + 1) / 2 + x);
  }

  GameSpec spec_;
  nat bound_;
  std::vector<std::uint64_t> bits_;
};

namespace detail {

/// Visits [0,B]^2 row by row, passing each position together with the number
/// of `is_member` positions among its options. The predicate is queried for
/// a position right after its count is known, so it may depend on the count.
template <class IsMember, class Visit>
void sweep_option_counts(nat bound, IsMember&& is_member, Visit&& visit) {
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  std::vector<std::uint32_t> column(n, 0);
  std::vector<std::uint32_t> diagonal(2 * n - 1, 0);
  for (nat y = 0; y <= bound; ++y) {
    std::uint32_t row = 0;
    for (nat x = 0; x <= bound; ++x) {
      auto& diag = diagonal[static_cast<std::size_t>(x + bound - y)];
      const std::uint32_t count = row + column[x] + diag;
      const bool member = is_member(x, y, count);
      visit(x, y, count, member);
      if (member) {
        ++row;
        ++column[x];
        ++diag;
      }
    }
  }
}

}  // namespace detail

/// Retrograde solve in row-major order. K^l: P iff terminal or no P option.
/// W^k: P iff at most k-1 P options (counted exactly).
inline PNTable solve(const GameSpec& spec, nat bound) {
  if (bound > kMaxSolveBound)
    throw ResourceLimitError("solve: bound " + std::to_string(bound) + " exceeds the limit " +
                             std::to_string(kMaxSolveBound));
  PNTable table(spec, bound);
  const nat limit = spec.p_option_limit();
  detail::sweep_option_counts(
      bound,
      [&](nat x, nat y, std::uint32_t count) { return spec.is_terminal(x, y) || count <= limit; },
      [&](nat x, nat y, std::uint32_t, bool member) {
        if (member && x <= y) table.set_p(x, y);
      });
  return table;
}

struct PPair {
  nat a = 0;
  nat b = 0;
  friend bool operator==(const PPair&, const PPair&) = default;
  friend auto operator<=>(const PPair&, const PPair&) = default;
};

/// Non-terminal P-pairs (a <= b), sorted, indexed from 0. `ell` is the
/// terminal threshold for K^l games and 0 otherwise.
struct PposSequence {
  nat ell = 0;
  std::vector<PPair> pairs;

  std::size_t size() const { return pairs.size(); }
  const PPair& operator[](std::size_t n) const { return pairs[n]; }
  friend bool operator==(const PposSequence&, const PposSequence&) = default;
};

/// All non-terminal P-pairs with b <= B. For K^l the b-values grow with a,
/// so the result is an exact prefix of the infinite sequence.
inline PposSequence ppos_list(const PNTable& t) {
  PposSequence s;
  s.ell = t.spec().ell();
  for (nat a = 0; a <= t.bound(); ++a)
    for (nat b = a; b <= t.bound(); ++b)
      if (t.is_p(a, b) && !t.spec().is_terminal(a, b)) s.pairs.push_back({a, b});
  return s;
}

}  // namespace wythoff
