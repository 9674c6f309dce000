#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wythoff/fib.hpp"

namespace wythoff {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// Output symbols used for a/b codings. Walnut word automata carry integer
/// outputs, and the a/b codings are exchanged as 1/2.
inline constexpr int kSymbolA = 1;
inline constexpr int kSymbolB = 2;

/// Letter-to-word map over the alphabet {0, ..., size-1}.
class Morphism {
 public:
  Morphism() = default;

  explicit Morphism(std::vector<Word> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("Morphism: empty alphabet");
    for (std::size_t c = 0; c < images_.size(); ++c) {
      if (images_[c].empty()) throw std::invalid_argument("Morphism: empty image for letter " + std::to_string(c));
      for (Letter d : images_[c])
        if (d >= images_.size())
          throw std::invalid_argument("Morphism: image of " + std::to_string(c) + " leaves the alphabet");
    }
  }

  std::size_t alphabet_size() const { return images_.size(); }
  const Word& operator()(Letter c) const { return images_.at(c); }
  const std::vector<Word>& images() const { return images_; }

  /// All image lengths are 1 or 2.
  bool is_phi_candidate() const {
    for (const auto& im : images_)
      if (im.size() != 1 && im.size() != 2) return false;
    return true;
  }

  Word apply(const Word& w) const {
    Word out;
    for (Letter c : w) {
      const auto& im = images_.at(c);
      out.insert(out.end(), im.begin(), im.end());
    }
    return out;
  }

  Word power(Letter c, unsigned k) const {
    Word w{c};
    for (unsigned i = 0; i < k; ++i) w = apply(w);
    return w;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::vector<Word> images_;
};

/// Letter-to-symbol output map; total on its alphabet.
class Coding {
 public:
  Coding() = default;
  explicit Coding(std::vector<int> out) : out_(std::move(out)) {}

  std::size_t alphabet_size() const { return out_.size(); }
  int operator()(Letter c) const { return out_.at(c); }
  const std::vector<int>& outputs() const { return out_; }

  std::vector<int> apply(const Word& w) const {
    std::vector<int> r;
    r.reserve(w.size());
    for (Letter c : w) r.push_back(out_.at(c));
    return r;
  }

  static Coding identity(std::size_t n) {
    std::vector<int> o(n);
    for (std::size_t i = 0; i < n; ++i) o[i] = static_cast<int>(i);
    return Coding(std::move(o));
  }

  friend bool operator==(const Coding&, const Coding&) = default;

 private:
  std::vector<int> out_;
};

/// First `len` letters of the fixed point of `m` starting with `seed`.
inline Word fixed_point_prefix(const Morphism& m, Letter seed, std::size_t len) {
  if (len == 0) throw std::invalid_argument("fixed_point_prefix: len must be positive");
  if (seed >= m.alphabet_size()) throw std::invalid_argument("fixed_point_prefix: seed outside the alphabet");
  const Word& first = m(seed);
  if (first.front() != seed) throw std::invalid_argument("fixed_point_prefix: seed is not prolongable");
  Word w{seed};
  if (len == 1) return w;
  if (first.size() < 2) throw std::invalid_argument("fixed_point_prefix: seed image has length 1, no growth");
  w.assign(first.begin(), first.end());
  for (std::size_t i = 1; w.size() < len; ++i) {
    const Word& im = m(w[i]);
    w.insert(w.end(), im.begin(), im.end());
  }
  w.resize(len);
  return w;
}

/// Deterministic finite automaton with output over the digits {0, 1}.
/// State 0 is initial; a missing transition is encoded as std::nullopt.
struct Dfao {
  std::vector<std::array<std::optional<Letter>, 2>> transitions;
  std::vector<int> outputs;

  std::size_t size() const { return outputs.size(); }

  friend bool operator==(const Dfao&, const Dfao&) = default;
};

/// Cobham's construction: states are letters, mu(c) = de gives c -0-> d
/// and c -1-> e, mu(c) = d gives only c -0-> d. Outputs come from the coding.
inline Dfao promote(const Morphism& m, const Coding& c) {
  if (c.alphabet_size() != m.alphabet_size()) throw std::invalid_argument("promote: coding/morphism alphabet mismatch");
  Dfao d;
  d.transitions.resize(m.alphabet_size());
  d.outputs = c.outputs();
  for (Letter s = 0; s < m.alphabet_size(); ++s) {
    const auto& im = m(s);
    if (im.size() > 2) throw std::invalid_argument("promote: image length outside {1,2} for letter " + std::to_string(s));
    d.transitions[s][0] = im[0];
    if (im.size() == 2) d.transitions[s][1] = im[1];
  }
  return d;
}

/// Final state after reading `digits` from the initial state, or nullopt if
/// the run hits a missing transition.
inline std::optional<Letter> run_dfao(const Dfao& d, std::span<const std::uint8_t> digits) {
  if (d.size() == 0) throw std::invalid_argument("run_dfao: empty automaton");
  Letter s = 0;
  for (auto digit : digits) {
    if (digit > 1) throw std::invalid_argument("run_dfao: non-binary digit");
    const auto& next = d.transitions[s][digit];
    if (!next) return std::nullopt;
    s = *next;
  }
  return s;
}

/// Output of `d` on rep_f(n), fed most significant digit first.
inline int eval_dfao(const Dfao& d, nat n) {
  const auto rep = rep_f(n);
  const auto s = run_dfao(d, rep.digits());
  if (!s) throw std::domain_error("eval_dfao: undefined transition on rep_F(" + std::to_string(n) + ")");
  return d.outputs[*s];
}

/// Moore minimization over canonical inputs. A missing transition is never
/// taken on a canonical word, so it is first filled with a self-loop; the
/// result agrees with `d` on every rep_F(n). Classes are numbered by their
/// smallest original state, so an already minimal automaton is unchanged.
inline Dfao minimize(const Dfao& d) {
  const std::size_t n = d.size();
  if (n == 0) return d;
  auto next = [&](std::size_t s, int digit) -> std::size_t {
    const auto& t = d.transitions[s][digit];
    return t ? *t : s;
  };
  std::vector<std::size_t> cls(n);
  {
    std::vector<int> outs;
    for (std::size_t s = 0; s < n; ++s) {
      auto it = std::find(outs.begin(), outs.end(), d.outputs[s]);
      if (it == outs.end()) {
        outs.push_back(d.outputs[s]);
        it = outs.end() - 1;
      }
      cls[s] = static_cast<std::size_t>(it - outs.begin());
    }
  }
  for (;;) {
    std::vector<std::array<std::size_t, 3>> sig(n);
    for (std::size_t s = 0; s < n; ++s) sig[s] = {cls[s], cls[next(s, 0)], cls[next(s, 1)]};
    std::vector<std::array<std::size_t, 3>> seen;
    std::vector<std::size_t> refined(n);
    for (std::size_t s = 0; s < n; ++s) {
      auto it = std::find(seen.begin(), seen.end(), sig[s]);
      if (it == seen.end()) {
        seen.push_back(sig[s]);
        it = seen.end() - 1;
      }
      refined[s] = static_cast<std::size_t>(it - seen.begin());
    }
    const bool stable = seen.size() == static_cast<std::size_t>(*std::max_element(cls.begin(), cls.end()) + 1);
    cls = std::move(refined);
    if (stable) break;
  }
  const std::size_t m = *std::max_element(cls.begin(), cls.end()) + 1;
  Dfao r;
  r.transitions.resize(m);
  r.outputs.resize(m);
  std::vector<bool> filled(m, false);
  for (std::size_t s = 0; s < n; ++s) {
    const auto c = cls[s];
    if (filled[c]) continue;
    filled[c] = true;
    r.outputs[c] = d.outputs[s];
    for (int digit = 0; digit < 2; ++digit)
      if (d.transitions[s][digit]) r.transitions[c][digit] = static_cast<Letter>(cls[*d.transitions[s][digit]]);
  }
  return r;
}

/// Letters are printed as 0-9 then a-z when the alphabet fits, otherwise
/// as parenthesised decimals.
inline std::string letter_name(Letter c, std::size_t alphabet) {
  if (alphabet <= 36) {
    if (c < 10) return std::string(1, static_cast<char>('0' + c));
    return std::string(1, static_cast<char>('a' + (c - 10)));
  }
  return c < 10 ? std::to_string(c) : "(" + std::to_string(c) + ")";
}

inline std::string to_string(const Morphism& m) {
  std::ostringstream os;
  for (Letter c = 0; c < m.alphabet_size(); ++c) {
    if (c) os << ", ";
    os << letter_name(c, m.alphabet_size()) << " -> ";
    for (Letter d : m(c)) os << letter_name(d, m.alphabet_size());
  }
  return os.str();
}

/// Groups letters by output, e.g. "0,2,3,5 -> 1; 1,4 -> 0".
inline std::string to_string(const Coding& c) {
  std::vector<int> seen;
  for (int o : c.outputs())
    if (std::find(seen.begin(), seen.end(), o) == seen.end()) seen.push_back(o);
  std::ostringstream os;
  for (std::size_t k = 0; k < seen.size(); ++k) {
    if (k) os << "; ";
    bool first = true;
    for (Letter l = 0; l < c.alphabet_size(); ++l) {
      if (c(l) != seen[k]) continue;
      if (!first) os << ",";
      os << letter_name(l, c.alphabet_size());
      first = false;
    }
    os << " -> " << seen[k];
  }
  return os.str();
}

}  // namespace wythoff
