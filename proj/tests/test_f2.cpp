#include <gtest/gtest.h>

#include <random>
#include <set>

#include "circhad/circulant.hpp"
#include "circhad/errors.hpp"
#include "circhad/f2.hpp"

using namespace circhad;

namespace {

using BitMatrix = std::vector<std::vector<int>>;

BitMatrix dense(std::uint64_t bits, std::size_t k) {
  BitMatrix m(k, std::vector<int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = (bits >> ((j + k - i) % k)) & 1U;
  }
  return m;
}

// Count of symmetric orthogonal circulants of order k, straight from dense
// matrices over F2.
std::size_t dense_survey(std::size_t k) {
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << k); ++bits) {
    const BitMatrix m = dense(bits, k);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (m[i][j] != m[j][i]) ok = false;
        int s = 0;
        for (std::size_t l = 0; l < k; ++l) s ^= m[i][l] & m[j][l];
        if (s != (i == j ? 1 : 0)) ok = false;
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST(F2, Construction) {
  const F2Circulant a = F2Circulant::parse("0110");
  EXPECT_EQ(a.bits(), 0b0110U);
  EXPECT_EQ(a.to_bitstring(), "0110");
  EXPECT_EQ(F2Circulant::identity(4).to_bitstring(), "1000");
  EXPECT_EQ(F2Circulant::shift(4).to_bitstring(), "0100");
  EXPECT_THROW(F2Circulant(0, 0), std::invalid_argument);
  EXPECT_THROW(F2Circulant(0, 65), std::invalid_argument);
  EXPECT_THROW(F2Circulant(0b10000, 4), std::invalid_argument);
  EXPECT_THROW(F2Circulant::parse("01a"), std::invalid_argument);
  EXPECT_NO_THROW(F2Circulant(~std::uint64_t{0}, 64));
}

TEST(F2, SymmetryExamples) {
  EXPECT_TRUE(is_symmetric(F2Circulant::identity(5)));
  EXPECT_TRUE(is_symmetric(F2Circulant::parse("0101")));
  EXPECT_FALSE(is_symmetric(F2Circulant::parse("0110")));
  EXPECT_EQ(f2_transpose(F2Circulant::parse("0110")).to_bitstring(), "0011");
  EXPECT_TRUE(is_orthogonal(F2Circulant::shift(5)));
  EXPECT_FALSE(is_orthogonal(F2Circulant::parse("1100")));
}

TEST(F2, ShiftPowers) {
  const F2Circulant pi = F2Circulant::shift(6);
  F2Circulant p = F2Circulant::identity(6);
  for (int i = 0; i < 6; ++i) p = f2_multiply(p, pi);
  EXPECT_EQ(p, F2Circulant::identity(6));
  EXPECT_THROW(f2_multiply(pi, F2Circulant::shift(5)), std::invalid_argument);
}

TEST(F2, ProductMatchesIntegerProductModTwo) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t k = 1 + trial % 10;
    const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    const std::uint64_t x = rng() & mask;
    const std::uint64_t y = rng() & mask;
    std::vector<Rational> xr, yr;
    for (std::size_t j = 0; j < k; ++j) {
      xr.emplace_back(static_cast<long>((x >> j) & 1U));
      yr.emplace_back(static_cast<long>((y >> j) & 1U));
    }
    const F2Circulant expect = reduce_mod2(multiply(circm(xr), circm(yr)));
    ASSERT_EQ(f2_multiply(F2Circulant(x, k), F2Circulant(y, k)), expect);
  }
}

TEST(F2, ReduceModTwo) {
  EXPECT_EQ(reduce_mod2(circm({-1, 0, 1, 2})).to_bitstring(), "1010");
  EXPECT_EQ(reduce_mod2(circm({0, -1})).to_bitstring(), "01");
  EXPECT_THROW(reduce_mod2(circm(std::vector<Rational>{Rational(1) / 2, 1})),
               std::invalid_argument);
}

TEST(F2, UnitsFormAGroup) {
  // Circulants of order 7 that are orthogonal are closed under product.
  std::vector<F2Circulant> units;
  for (std::uint64_t b = 0; b < 128; ++b) {
    const F2Circulant c(b, 7);
    if (is_orthogonal(c)) units.push_back(c);
  }
  std::set<std::uint64_t> bits;
  for (const auto& u : units) bits.insert(u.bits());
  for (const auto& a : units) {
    for (const auto& b : units) EXPECT_TRUE(bits.count(f2_multiply(a, b).bits()));
  }
}

TEST(MacWilliams, SurveyMatchesDenseOracle) {
  for (std::size_t k = 1; k <= 12; ++k) {
    const auto s = macwilliams_survey(k);
    EXPECT_EQ(s.count, dense_survey(k)) << "order " << k;
    EXPECT_EQ(s.witnesses.size(), s.count);
  }
}

TEST(MacWilliams, KnownCounts) {
  EXPECT_EQ(macwilliams_survey(2).count, 2U);
  EXPECT_EQ(macwilliams_survey(3).count, 1U);
  EXPECT_EQ(macwilliams_survey(3).witnesses.front(), F2Circulant::identity(3));
  // Even orders admit pi^(n/2) besides the identity.
  const auto four = macwilliams_survey(4);
  EXPECT_EQ(four.count, 4U);
  std::set<std::string> w;
  for (const auto& c : four.witnesses) w.insert(c.to_bitstring());
  EXPECT_EQ(w, (std::set<std::string>{"1000", "0010", "1101", "0111"}));
  for (std::size_t k = 3; k <= 19; k += 2) EXPECT_EQ(macwilliams_survey(k).count, 1U);
}

TEST(MacWilliams, Caps) {
  EXPECT_THROW(macwilliams_survey(0), ResourceLimit);
  EXPECT_THROW(macwilliams_survey(25), ResourceLimit);
}
