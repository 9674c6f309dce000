#include <gtest/gtest.h>

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "wythoff/infer.hpp"
#include "wythoff/morphism.hpp"
#include "wythoff/sequences.hpp"
#include "wythoff/walnut.hpp"

using namespace wythoff;

namespace {

const std::vector<int> kFirstG = {1, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1};

std::string letters(const Word& w) {
  std::string s;
  for (auto c : w) s += letter_name(c, 36);
  return s;
}

std::string symbols(const std::vector<int>& w, char a, char b) {
  std::string s;
  for (int c : w) s += c == kSymbolA ? a : c == kSymbolB ? b : '?';
  return s;
}

InferredMorphism expect_success(const InferenceResult& r) {
  if (const auto* f = std::get_if<InferenceFailure>(&r)) ADD_FAILURE() << f->message;
  return std::get<InferredMorphism>(r);
}

}  // namespace

TEST(Morphism, RejectsBadInput) {
  EXPECT_THROW(Morphism(std::vector<Word>{}), std::invalid_argument);
  EXPECT_THROW(Morphism({{0, 2}, {0}}), std::invalid_argument);
  EXPECT_THROW(Morphism({{}, {0}}), std::invalid_argument);
}

TEST(Morphism, FixedPointPrefixes) {
  EXPECT_EQ(letters(fixed_point_prefix(known::g_sequence().mu, 0, 20)), "01231452354314543545");
  EXPECT_EQ(symbols(morphic_prefix(known::fibonacci_word(), 9), 'a', 'b'), "abaababaa");
  EXPECT_EQ(fixed_point_prefix(known::g_sequence().mu, 0, 1), Word{0});
  EXPECT_THROW(fixed_point_prefix(known::g_sequence().mu, 1, 5), std::invalid_argument);
}

TEST(Morphism, PrintsInArrowNotation) {
  EXPECT_EQ(to_string(known::g_sequence().mu), "0 -> 01, 1 -> 2, 2 -> 31, 3 -> 45, 4 -> 35, 5 -> 4");
  EXPECT_EQ(to_string(known::g_sequence().coding), "0,2,3,5 -> 1; 1,4 -> 0");
}

TEST(Sequences, FirstValuesOfG) {
  EXPECT_EQ(g_by_definition(21), kFirstG);
  const auto& p = morphic_prefix(known::g_sequence(), 21);
  EXPECT_EQ(p, kFirstG);
  const auto dfao = AutomaticSequence(known::g_sequence());
  for (nat n = 0; n < kFirstG.size(); ++n) EXPECT_EQ(dfao(n), kFirstG[n]) << n;
}

TEST(Sequences, DefinitionAgreesWithMorphismAndRecurrence) {
  const std::size_t n = 20000;
  const auto def = g_by_definition(n);
  EXPECT_EQ(morphic_prefix(known::g_sequence(), n), def);
  const auto rec = g_by_hofstadter(n);
  EXPECT_EQ(rec, def);
}

TEST(Sequences, HofstadterByRecurrence) {
  const auto h = hofstadter_by_recurrence(3000);
  for (nat n = 0; n < h.size(); ++n) ASSERT_EQ(h[n], hofstadter_h(n));
}

TEST(Sequences, G3Prefix) {
  const std::vector<int> expected = {1, 2, 2, 1, 0, 1, 1, 2, 2, 1};
  EXPECT_EQ(morphic_prefix(known::g3_sequence(), 10), expected);
  const AutomaticSequence g3(known::g3_sequence());
  for (nat n = 0; n < 9; ++n) EXPECT_EQ(g3(n), expected[n]);
}

TEST(Dfao, AgreesWithIterationOnEveryKnownWord) {
  for (const auto& w : {known::fibonacci_word(), known::g_sequence(), known::g3_sequence(), known::g4_sequence(),
                        known::k1_pposition_word(), known::k2_pposition_word(), known::k3_pposition_word()}) {
    const auto word = morphic_prefix(w, 20000);
    const AutomaticSequence s(w);
    for (nat n = 0; n < word.size(); ++n) ASSERT_EQ(s(n), word[n]) << n;
  }
}

TEST(Dfao, InitialStateOutputAtZero) {
  const auto d = promote(known::g4_sequence().mu, known::g4_sequence().coding);
  EXPECT_EQ(eval_dfao(d, 0), d.outputs[0]);
}

TEST(Dfao, MissingTransitionThrows) {
  Dfao d;
  d.transitions = {{0, std::nullopt}};
  d.outputs = {7};
  EXPECT_EQ(eval_dfao(d, 0), 7);
  EXPECT_THROW(eval_dfao(d, 1), std::domain_error);
}

TEST(Dfao, PromoteRejectsLongImages) {
  EXPECT_THROW(promote(Morphism({{0, 1, 1}, {0}}), Coding({1, 1})), std::invalid_argument);
  EXPECT_THROW(promote(Morphism({{0, 1}, {0}}), Coding({1, 1, 1})), std::invalid_argument);
}

TEST(Dfao, MinimizeKeepsValues) {
  for (const auto& w : {known::g_sequence(), known::g3_sequence(), known::k1_pposition_word()}) {
    const auto d = promote(w.mu, w.coding);
    const auto m = minimize(d);
    EXPECT_LE(m.size(), d.size());
    for (nat n = 0; n < 20000; ++n) ASSERT_EQ(eval_dfao(m, n), eval_dfao(d, n));
  }
  const auto g3 = promote(known::g3_sequence().mu, known::g3_sequence().coding);
  EXPECT_EQ(minimize(g3), g3);
}

TEST(Infer, BlockSpans) {
  EXPECT_EQ(block_span(1, 4), (BlockSpan{7, 7}));
  EXPECT_EQ(block_span(2, 4), (BlockSpan{11, 12}));
  EXPECT_EQ(block_span(3, 4), (BlockSpan{18, 20}));
  EXPECT_THROW(block_span(0, 4), std::invalid_argument);
}

TEST(Infer, GHasSixThreeTypes) {
  const auto types = collect_types(morphic_prefix(known::g_sequence(), 400), 3);
  EXPECT_EQ(types.types.size(), 6u);
  // Position 4: g_4 = 0, then g_7 = 1, g_11 g_12 = 10, g_18 g_19 g_20 = 011.
  const auto& row = types.types[types.type_of[4]];
  EXPECT_EQ(row, (std::vector<Symbols>{{0}, {1}, {1, 0}, {0, 1, 1}}));
}

TEST(Infer, RecoversGMorphismVerbatim) {
  const auto m = expect_success(infer_morphism(morphic_prefix(known::g_sequence(), 200), 3));
  EXPECT_EQ(m.mu, known::g_sequence().mu);
  EXPECT_EQ(m.rho, known::g_sequence().coding);
  EXPECT_EQ(m.structural, known::g_structural());
  EXPECT_EQ(to_string(m.rho), "0,2,3,5 -> 1; 1,4 -> 0");
}

TEST(Infer, RecoversG3AndG4Verbatim) {
  for (unsigned t : {3u, 5u}) {
    const auto m3 = expect_success(infer_morphism(morphic_prefix(known::g3_sequence(), 2000), t));
    EXPECT_EQ(m3.mu, known::g3_sequence().mu);
    EXPECT_EQ(m3.rho, known::g3_sequence().coding);
  }
  EXPECT_EQ(to_string(known::g3_sequence().coding), "0,3,5,6,8,a,b -> 1; 1,2,7,9 -> 2; 4 -> 0");
  const auto m4 = expect_success(infer_morphism(morphic_prefix(known::g4_sequence(), 600), 4));
  EXPECT_EQ(m4.mu, known::g4_sequence().mu);
  EXPECT_EQ(m4.rho, known::g4_sequence().coding);
}

TEST(Infer, ThreeTypesAreTooCoarseForG4) {
  const auto r = infer_morphism(morphic_prefix(known::g4_sequence(), 2000), 3);
  ASSERT_TRUE(std::holds_alternative<InferenceFailure>(r));
  EXPECT_EQ(std::get<InferenceFailure>(r).kind, InferenceFailure::Kind::kInconsistent);
  EXPECT_NE(std::get<InferenceFailure>(r).message.find("larger t"), std::string::npos);
}

TEST(Infer, AutoPicksSmallestWorkingDepth) {
  const auto m = expect_success(infer_morphism_auto(morphic_prefix(known::g4_sequence(), 2000)));
  EXPECT_EQ(m.t, 4u);
  EXPECT_EQ(m.mu, known::g4_sequence().mu);
}

TEST(Infer, ShortPrefixAsksForMore) {
  const auto r = infer_morphism(morphic_prefix(known::g_sequence(), 12), 3);
  ASSERT_TRUE(std::holds_alternative<InferenceFailure>(r));
  EXPECT_EQ(std::get<InferenceFailure>(r).kind, InferenceFailure::Kind::kPrefixTooShort);
}

TEST(Infer, NonAutomaticPrefixIsRejected) {
  // Squares indicator: not Fibonacci-automatic, so some depth disagrees.
  Symbols s(2000, 0);
  for (std::size_t i = 0; i * i < s.size(); ++i) s[i * i] = 1;
  for (unsigned t = 2; t <= 4; ++t) EXPECT_TRUE(std::holds_alternative<InferenceFailure>(infer_morphism(s, t)));
}

TEST(Infer, ConstantSequence) {
  const auto m = expect_success(infer_morphism_auto(Symbols(300, 1)));
  EXPECT_EQ(m.mu.alphabet_size(), 2u);
  const auto d = minimize(promote(m.mu, m.rho));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.transitions[0][0], Letter{0});
  EXPECT_EQ(d.transitions[0][1], Letter{0});
  EXPECT_EQ(d.outputs[0], 1);
}

TEST(Walnut, RoundTripIsExact) {
  for (const auto& w : {known::g_sequence(), known::g4_sequence(), known::k3_pposition_word()}) {
    const auto d = promote(w.mu, w.coding);
    const auto text = to_walnut(d);
    EXPECT_EQ(from_walnut(text), d);
    EXPECT_EQ(to_walnut(from_walnut(text)), text);
  }
}

TEST(Walnut, CanonicalLayout) {
  const auto d = promote(known::fibonacci_word().mu, known::fibonacci_word().coding);
  EXPECT_EQ(to_walnut(d), "msd_fib\n\n0 1\n0 -> 0\n1 -> 1\n\n1 2\n0 -> 0\n");
}

TEST(Walnut, ToleratesCommentsAndBlankLines) {
  const std::string text = "# g\nmsd_fib\n0 1   # start\n0 -> 0\n\n\n1 -> 1\n1 0\n0 -> 0\n";
  const auto d = from_walnut(text);
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(eval_dfao(d, 1), 0);
}

TEST(Walnut, RejectsMalformedInput) {
  EXPECT_THROW(from_walnut("lsd_2\n0 1\n"), WalnutFormatError);
  EXPECT_THROW(from_walnut("msd_fib\n1 1\n"), WalnutFormatError);
  EXPECT_THROW(from_walnut("msd_fib\n0 1\n2 -> 0\n"), WalnutFormatError);
  EXPECT_THROW(from_walnut("msd_fib\n0 1\n0 -> 0\n0 -> 0\n"), WalnutFormatError);
  EXPECT_THROW(from_walnut("msd_fib\n0 1\n0 -> 5\n"), WalnutFormatError);
  EXPECT_THROW(from_walnut("msd_fib\n0 1\n0 -> 0 junk\n"), WalnutFormatError);
}

TEST(Walnut, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "wythoff_walnut_test.txt").string();
  const auto d = promote(known::g3_sequence().mu, known::g3_sequence().coding);
  save_walnut(d, path);
  EXPECT_EQ(load_walnut(path), d);
  std::filesystem::remove(path);
  EXPECT_THROW(load_walnut(path), std::ios_base::failure);
}
