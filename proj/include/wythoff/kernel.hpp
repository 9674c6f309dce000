#pragma once

// Bounded kernel checks for candidate P-sets, and the search for positions
// proving that a move is not redundant.
//
// Stability for K^l: no move connects two members unless the source is
// terminal. For W^k: every member has at most k-1 member options.
// Absorption for K^l: every non-member has a member option (a terminal
// non-member has no moves and fails). For W^k: every non-member has at
// least k member options.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wythoff/game.hpp"

namespace wythoff {

using Membership = std::function<bool(nat, nat)>;

struct Counterexample {
  Position at;
  /// A member option of `at`, when one exists.
  std::optional<Position> target;
  std::uint32_t member_options = 0;
  std::string detail;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;

  explicit operator bool() const { return holds; }
};

namespace detail {

inline std::vector<std::uint8_t> materialize(const Membership& member, nat bound) {
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  std::vector<std::uint8_t> box(n * n);
  for (nat y = 0; y <= bound; ++y)
    for (nat x = 0; x <= bound; ++x) box[y * n + x] = member(x, y) ? 1 : 0;
  return box;
}

inline std::optional<Position> first_member_option(const std::vector<std::uint8_t>& box, nat bound, Position p) {
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  for (const auto& o : options(p))
    if (box[o.y * n + o.x]) return o;
  return std::nullopt;
}

enum class KernelProperty { kStable, kAbsorbing };

inline Verdict check_kernel_property(const Membership& candidate, const GameSpec& spec, nat bound,
                                     KernelProperty property) {
  const auto box = materialize(candidate, bound);
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  const nat limit = spec.p_option_limit();
  Verdict v;
  sweep_option_counts(
      bound, [&](nat x, nat y, std::uint32_t) { return box[y * n + x] != 0; },
      [&](nat x, nat y, std::uint32_t count, bool member) {
        if (!v.holds) return;
        const bool terminal = spec.is_terminal(x, y);
        std::string why;
        if (property == KernelProperty::kStable) {
          if (!member || terminal || count <= limit) return;
          why = "member with " + std::to_string(count) + " member options (allowed " + std::to_string(limit) + ")";
        } else {
          if (member) return;
          if (terminal) {
            why = "terminal position outside the candidate";
          } else if (count >= limit + 1) {
            return;
          } else {
            why = "non-member with " + std::to_string(count) + " member options (needs " +
                  std::to_string(limit + 1) + ")";
          }
        }
        v.holds = false;
        v.counterexample = Counterexample{{x, y}, first_member_option(box, bound, {x, y}), count, why};
      });
  return v;
}

}  // namespace detail

inline Verdict check_stable(const Membership& candidate, const GameSpec& spec, nat bound) {
  return detail::check_kernel_property(candidate, spec, bound, detail::KernelProperty::kStable);
}

/// Options only decrease coordinates, so the box is closed under moves and
/// `safety_margin` is never needed; it is accepted for symmetry with
/// checks over unbounded candidates.
inline Verdict check_absorbing(const Membership& candidate, const GameSpec& spec, nat bound,
                               nat safety_margin = 0) {
  (void)safety_margin;
  return detail::check_kernel_property(candidate, spec, bound, detail::KernelProperty::kAbsorbing);
}

inline Membership membership_of(const PNTable& t) {
  return [&t](nat x, nat y) { return t.is_p(x, y); };
}

/// A single Wythoff move: (i,0), (0,i) or (i,i) with i > 0.
struct Move {
  nat dx = 0;
  nat dy = 0;

  static Move horizontal(nat i) { return checked({i, 0}); }
  static Move vertical(nat i) { return checked({0, i}); }
  static Move diagonal(nat i) { return checked({i, i}); }

  static Move checked(Move m) {
    const bool ok = (m.dx > 0 && m.dy == 0) || (m.dx == 0 && m.dy > 0) || (m.dx > 0 && m.dx == m.dy);
    if (!ok)
      throw std::invalid_argument("Move: (" + std::to_string(m.dx) + "," + std::to_string(m.dy) +
                                  ") is not a Wythoff move");
    return m;
  }

  friend bool operator==(const Move&, const Move&) = default;
};

/// Counts of P-options for every position of a solved table, used to find
/// positions where a given move is indispensable.
class RedundancyProbe {
 public:
  explicit RedundancyProbe(const PNTable& table)
      : table_(table), n_(static_cast<std::size_t>(table.bound()) + 1), counts_(n_ * n_) {
    detail::sweep_option_counts(
        table.bound(), [&](nat x, nat y, std::uint32_t) { return table.is_p(x, y); },
        [&](nat x, nat y, std::uint32_t count, bool) { counts_[y * n_ + x] = count; });
  }

  std::uint32_t p_options(nat x, nat y) const { return counts_[y * n_ + x]; }

  /// An N-position whose P-options number exactly k (1 for K^l), one of them
  /// reached by `move`. Removing the move would leave the blocker able to
  /// forbid every remaining winning option. nullopt means no witness inside
  /// the box, which proves nothing about redundancy.
  std::optional<Position> witness(Move move) const {
    Move::checked(move);
    const auto& spec = table_.spec();
    const nat needed = spec.p_option_limit() + 1;
    for (nat q = move.dy; q < n_; ++q) {
      for (nat p = move.dx; p < n_; ++p) {
        if (spec.is_terminal(p, q) || table_.is_p(p, q)) continue;
        if (p_options(p, q) != needed) continue;
        if (table_.is_p(p - move.dx, q - move.dy)) return Position{p, q};
      }
    }
    return std::nullopt;
  }

 private:
  const PNTable& table_;
  std::size_t n_;
  std::vector<std::uint32_t> counts_;
};

inline std::optional<Position> non_redundant_witness(const GameSpec& spec, Move move, nat bound) {
  Move::checked(move);
  const auto table = solve(spec, bound);
  return RedundancyProbe(table).witness(move);
}

}  // namespace wythoff
