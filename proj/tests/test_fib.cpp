#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "wythoff/fib.hpp"
#include "wythoff/golden.hpp"

using namespace wythoff;

namespace {

// m = floor(n phi) iff 2m - n <= n sqrt5 < 2m + 2 - n; both sides are
// non-negative here, so squaring is safe.
bool is_floor_n_phi(nat n, nat m) {
  const auto lhs = static_cast<long long>(2 * m) - static_cast<long long>(n);
  if (lhs < 0) return false;
  const long long five_n2 = 5LL * static_cast<long long>(n * n);
  const long long rhs = lhs + 2;
  return lhs * lhs <= five_n2 && five_n2 < rhs * rhs;
}

// Brute-force Zeckendorf: enumerate all canonical words by length.
std::vector<std::string> canonical_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  std::vector<std::string> layer{"1"};
  for (std::size_t len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<std::string> next;
    for (const auto& w : layer) {
      next.push_back(w + "0");
      if (w.back() == '0') next.push_back(w + "1");
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST(Fib, Weights) {
  EXPECT_EQ(fib_weight(0), 1u);
  EXPECT_EQ(fib_weight(1), 2u);
  EXPECT_EQ(fib_weight(2), 3u);
  EXPECT_EQ(fib_weight(3), 5u);
  EXPECT_EQ(fib_weight(10), 144u);
}

TEST(Fib, RepSmallValues) {
  EXPECT_EQ(rep_f(0).str(), "");
  EXPECT_EQ(rep_f(1).str(), "1");
  EXPECT_EQ(rep_f(2).str(), "10");
  EXPECT_EQ(rep_f(4).str(), "101");
  EXPECT_EQ(rep_f(7).str(), "1010");
  EXPECT_EQ(rep_f(12).str(), "10101");
  EXPECT_EQ(rep_f(20).str(), "101010");
}

TEST(Fib, RadixOrderMatchesValueOrder) {
  // Canonical words listed in radix order have values 0, 1, 2, ...
  auto words = canonical_words(16);
  std::vector<FibWord> parsed;
  for (const auto& w : words) parsed.push_back(FibWord::parse(w));
  std::sort(parsed.begin(), parsed.end());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    ASSERT_EQ(val_f(parsed[i]), i);
    ASSERT_EQ(rep_f(i), parsed[i]);
  }
}

TEST(Fib, RoundTripLargeValues) {
  for (nat n : {nat{1000003}, nat{123456789012}, nat{1} << 62})
    EXPECT_EQ(val_f(rep_f(n)), n);
}

TEST(Fib, ParseRejectsNonCanonical) {
  EXPECT_THROW(FibWord::parse("011"), std::invalid_argument);
  EXPECT_THROW(FibWord::parse("110"), std::invalid_argument);
  EXPECT_THROW(FibWord::parse("102"), std::invalid_argument);
  EXPECT_NO_THROW(FibWord::parse("10010"));
}

TEST(Fib, ValAcceptsNonCanonicalButRejectsNonBinary) {
  EXPECT_EQ(val_f(std::string_view("11")), 3u);
  EXPECT_EQ(val_f(std::string_view("011")), 3u);
  EXPECT_EQ(val_f(std::string_view("0101")), 4u);
  EXPECT_THROW(val_f(std::string_view("12")), std::invalid_argument);
}

TEST(Fib, FloorPhiAgainstSquaredInequality) {
  for (nat n = 0; n <= 200000; ++n) ASSERT_TRUE(is_floor_n_phi(n, floor_phi(n))) << n;
}

TEST(Fib, FloorPhi2IsFloorPhiPlusN) {
  for (nat n = 0; n <= 100000; ++n) ASSERT_EQ(floor_phi2(n), floor_phi(n) + n) << n;
}

TEST(Fib, FloorPhiAgainstLongDouble) {
  const long double phi = (1.0L + std::sqrt(5.0L)) / 2.0L;
  for (nat n = 0; n <= 10000; ++n) ASSERT_EQ(floor_phi(n), static_cast<nat>(std::floor(n * phi))) << n;
}

TEST(Fib, ShiftAppendsZeros) {
  EXPECT_EQ(shift(4), 7u);
  EXPECT_EQ(shift(4, 2), 11u);
  EXPECT_EQ(shift(4, 3), 18u);
  EXPECT_EQ(shift(0, 5), 0u);
}

TEST(Fib, HofstadterRecurrence) {
  std::vector<nat> h(5000);
  for (std::size_t n = 1; n < h.size(); ++n) h[n] = n - h[h[n - 1]];
  for (nat n = 0; n < h.size(); ++n) ASSERT_EQ(hofstadter_h(n), h[n]) << n;
  const std::vector<nat> table = {0, 1, 1, 2, 3, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 9, 10, 11, 11, 12, 12};
  for (nat n = 0; n < table.size(); ++n) EXPECT_EQ(hofstadter_h(n), table[n]);
}

TEST(Fib, Mex) {
  EXPECT_EQ(mex({}), 0u);
  EXPECT_EQ(mex({0, 1, 3}), 2u);
  EXPECT_EQ(mex({1, 2}), 0u);
  EXPECT_EQ(mex({2, 0, 1, 1}), 3u);
  MexSet s;
  EXPECT_EQ(s.mex(), 0u);
  s.insert(0);
  s.insert(2);
  EXPECT_EQ(s.mex(), 1u);
  s.insert(1);
  EXPECT_EQ(s.mex(), 3u);
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(7));
}

TEST(Golden, ExactComparisons) {
  // sqrt5 = 2.236...
  EXPECT_TRUE(golden::lt(2, 1));
  EXPECT_TRUE(golden::gt(3, 1));
  EXPECT_TRUE(golden::lt(-3, -1));
  EXPECT_TRUE(golden::gt(-2, -1));
  EXPECT_TRUE(golden::le(0, 0));
  EXPECT_TRUE(golden::ge(0, 0));
  EXPECT_TRUE(golden::lt(0, 1));
  EXPECT_TRUE(golden::gt(0, -1));
  // phi = 1.618...: 161/100 < phi < 162/100
  EXPECT_FALSE(golden::le_phi_multiple(162, 100));
  EXPECT_TRUE(golden::le_phi_multiple(161, 100));
  EXPECT_TRUE(golden::ge_phi_multiple(162, 100));
}
