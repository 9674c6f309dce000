#pragma once

// Inference of a phi-morphism and coding from a finite prefix of a
// Fibonacci-automatic sequence.
//
// Position n is described by its t-type: the letter w_n followed by the
// factors of w sitting at block_span(1, n), ..., block_span(t, n). Distinct
// t-types become letters, numbered by first appearance. The image of the
// letter at n is the word of types found at block_span(1, n).

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "wythoff/fib.hpp"
#include "wythoff/morphism.hpp"

namespace wythoff {

struct BlockSpan {
  nat alpha;
  nat beta;
  friend bool operator==(const BlockSpan&, const BlockSpan&) = default;
};

/// Positions covered by mu^i(w_n) in the fixed point of any phi-morphism:
/// from val(rep(n) 0^i) to val(rep(n+1) 0^i) - 1.
inline BlockSpan block_span(unsigned i, nat n) {
  if (i == 0) throw std::invalid_argument("block_span: i must be at least 1");
  return {shift(n, i), shift(n + 1, i) - 1};
}

using Symbols = std::vector<int>;

struct TypeTable {
  unsigned t = 0;
  /// Distinct (t+1)-tuples in order of first appearance.
  std::vector<std::vector<Symbols>> types;
  /// Type index of positions 0 .. typed_count()-1.
  std::vector<Letter> type_of;

  std::size_t typed_count() const { return type_of.size(); }
};

/// Types of every position whose deepest block fits inside the prefix.
/// block_span is increasing in n, so typed positions form a prefix.
inline TypeTable collect_types(const Symbols& prefix, unsigned t) {
  TypeTable table;
  table.t = t;
  std::map<std::vector<Symbols>, Letter> index;
  for (nat n = 0; n < prefix.size(); ++n) {
    if (t > 0 && block_span(t, n).beta >= prefix.size()) break;
    std::vector<Symbols> tuple;
    tuple.reserve(t + 1);
    tuple.push_back({prefix[n]});
    for (unsigned i = 1; i <= t; ++i) {
      const auto s = block_span(i, n);
      tuple.emplace_back(prefix.begin() + static_cast<std::ptrdiff_t>(s.alpha),
                         prefix.begin() + static_cast<std::ptrdiff_t>(s.beta) + 1);
    }
    auto [it, fresh] = index.try_emplace(tuple, static_cast<Letter>(table.types.size()));
    if (fresh) table.types.push_back(std::move(tuple));
    table.type_of.push_back(it->second);
  }
  return table;
}

struct InferredMorphism {
  unsigned t = 0;
  Morphism mu;
  /// Maps each type to the first element of its tuple.
  Coding rho;
  /// Maps each letter to kSymbolA (image of length 2) or kSymbolB.
  Coding structural;
  TypeTable types;
};

struct InferenceFailure {
  enum class Kind { kInconsistent, kPrefixTooShort, kNotPhiMorphism };
  Kind kind;
  unsigned t;
  std::string message;
};

using InferenceResult = std::variant<InferredMorphism, InferenceFailure>;

/// f(mu(i)) = sigma(f(i)) for every letter, with sigma: a -> ab, b -> a.
inline bool satisfies_fibonacci_structure(const Morphism& mu, const Coding& f) {
  for (Letter c = 0; c < mu.alphabet_size(); ++c) {
    const auto image = f.apply(mu(c));
    const std::vector<int> expected =
        f(c) == kSymbolA ? std::vector<int>{kSymbolA, kSymbolB} : std::vector<int>{kSymbolA};
    if (image != expected) return false;
  }
  return true;
}

namespace detail {

inline InferenceFailure inference_failure(InferenceFailure::Kind kind, unsigned t, const std::string& what) {
  std::string advice = kind == InferenceFailure::Kind::kPrefixTooShort ? "provide a longer prefix"
                                                                       : "try a larger t or a longer prefix";
  return {kind, t, what + " (t=" + std::to_string(t) + "; " + advice + ")"};
}

}  // namespace detail

inline InferenceResult infer_morphism(const Symbols& prefix, unsigned t) {
  using Kind = InferenceFailure::Kind;
  if (prefix.empty()) return detail::inference_failure(Kind::kPrefixTooShort, t, "empty prefix");
  auto table = collect_types(prefix, t);
  if (table.typed_count() < 2)
    return detail::inference_failure(Kind::kPrefixTooShort, t, "fewer than two positions can be typed");

  const std::size_t letters = table.types.size();
  std::vector<std::optional<Word>> images(letters);
  for (nat n = 0; n < table.typed_count(); ++n) {
    const auto s = block_span(1, n);
    if (s.beta >= table.typed_count()) break;
    Word image(table.type_of.begin() + static_cast<std::ptrdiff_t>(s.alpha),
               table.type_of.begin() + static_cast<std::ptrdiff_t>(s.beta) + 1);
    auto& slot = images[table.type_of[n]];
    if (!slot) {
      slot = std::move(image);
    } else if (*slot != image) {
      std::ostringstream os;
      os << "type " << table.type_of[n] << " has two different images (position " << n << ")";
      return detail::inference_failure(Kind::kInconsistent, t, os.str());
    }
  }

  std::vector<Word> final_images;
  final_images.reserve(letters);
  for (Letter c = 0; c < letters; ++c) {
    if (!images[c])
      return detail::inference_failure(Kind::kPrefixTooShort, t,
                                       "image of type " + std::to_string(c) + " is not determined");
    final_images.push_back(*images[c]);
  }

  InferredMorphism r;
  r.t = t;
  r.mu = Morphism(std::move(final_images));
  std::vector<int> rho(letters);
  std::vector<int> structural(letters);
  for (Letter c = 0; c < letters; ++c) {
    rho[c] = table.types[c].front().front();
    structural[c] = r.mu(c).size() == 2 ? kSymbolA : kSymbolB;
  }
  r.rho = Coding(std::move(rho));
  r.structural = Coding(std::move(structural));
  r.types = std::move(table);

  if (!r.mu.is_phi_candidate())
    return detail::inference_failure(Kind::kNotPhiMorphism, t, "an image length lies outside {1,2}");
  if (!satisfies_fibonacci_structure(r.mu, r.structural))
    return detail::inference_failure(Kind::kNotPhiMorphism, t, "structural coding does not commute with sigma");

  // The morphism must regenerate the whole prefix, not only the typed part.
  const auto regenerated = r.rho.apply(fixed_point_prefix(r.mu, 0, prefix.size()));
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (regenerated[i] != prefix[i])
      return detail::inference_failure(Kind::kInconsistent, t,
                                       "coded fixed point disagrees with the prefix at position " + std::to_string(i));
  }
  return r;
}

inline constexpr unsigned kAutoTypeStart = 2;
inline constexpr unsigned kAutoTypeLimit = 6;

/// Tries t = 2, 3, ... 6 and returns the first consistent inference, or the
/// failure reported at the largest t.
inline InferenceResult infer_morphism_auto(const Symbols& prefix) {
  InferenceResult last = InferenceFailure{InferenceFailure::Kind::kPrefixTooShort, 0, "no attempt"};
  for (unsigned t = kAutoTypeStart; t <= kAutoTypeLimit; ++t) {
    last = infer_morphism(prefix, t);
    if (std::holds_alternative<InferredMorphism>(last)) return last;
  }
  return last;
}

}  // namespace wythoff
