#include "rotnum/closed_forms.hpp"
#include "rotnum/errors.hpp"
#include "rotnum/rotation.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rotnum;

namespace {

Word random_positive_word(std::mt19937_64& rng, std::size_t max_len) {
  for (;;) {
    std::size_t len = 2 + rng() % (max_len - 1);
    std::vector<Letter> letters;
    for (std::size_t i = 0; i < len; ++i) letters.push_back(rng() % 2 ? Letter::a : Letter::b);
    Word w(letters);
    if (w.contains(Letter::a) && w.contains(Letter::b)) return w;
  }
}

Fraction random_fraction(std::mt19937_64& rng, long long max_den) {
  long long q = 1 + static_cast<long long>(rng() % max_den);
  return Fraction(static_cast<long long>(rng() % q), q);
}

}  // namespace

TEST(Evaluate, WorkedExample) {
  auto e = evaluate_max(parse_word("ab"), Fraction(2, 3), Fraction(1, 2));
  EXPECT_EQ(e.value, Fraction(3, 2));
  ASSERT_TRUE(e.witness);
  EXPECT_EQ(e.witness->str(), "XXYXY");
  EXPECT_EQ(e.necklaces, 2u);
  EXPECT_EQ(r_min_positive(parse_word("ab"), Fraction(2, 3), Fraction(1, 2)), Fraction(1));
  auto x = x_interval(parse_word("ab"), Fraction(2, 3), Fraction(1, 2));
  EXPECT_EQ(x.first, Fraction(1));
  EXPECT_EQ(x.second, Fraction(3, 2));
}

TEST(Evaluate, SmallValues) {
  EXPECT_EQ(R_positive(parse_word("ab"), Fraction(0), Fraction(0)), Fraction(1));
  EXPECT_EQ(R_positive(parse_word("ab"), Fraction(1, 2), Fraction(1, 2)), Fraction(3, 2));
  EXPECT_EQ(R_positive(parse_word("aaa"), Fraction(2, 5), Fraction(1, 7)), Fraction(6, 5));
}

TEST(Evaluate, Preconditions) {
  EXPECT_THROW(R_positive(parse_word("aB"), Fraction(1, 2), Fraction(1, 2)), DomainError);
  EXPECT_THROW(R_positive(parse_word("ab"), Fraction(1, 13), Fraction(1, 13)), CapExceeded);
}

TEST(Evaluate, AgreesWithBruteForceOverAllArrangements) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    Word w = random_positive_word(rng, 6);
    Fraction r = random_fraction(rng, 5), s = random_fraction(rng, 5);
    ASSERT_EQ(R_positive(w, r, s), oracle::brute_R(w, r, s)) << w.str() << " " << r << " " << s;
    ASSERT_EQ(r_min_positive(w, r, s), oracle::brute_R(w, r, s, false)) << w.str() << " " << r << " " << s;
  }
}

TEST(Evaluate, AbMatchesFormulaOracle) {
  for (auto [r, s] : oracle::reduced_pairs(6)) {
    ASSERT_EQ(R_positive(parse_word("ab"), r, s), oracle::ab_formula(r, s)) << r << " " << s;
    ASSERT_EQ(R_ab_formula(r, s), oracle::ab_formula(r, s));
  }
}

// Elementary identities, exact, on random words.
class Properties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};
};

TEST_F(Properties, Periodicity) {
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_positive_word(rng, 6);
    Fraction r = random_fraction(rng, 4), s = random_fraction(rng, 4);
    HCounts h = h_counts(w);
    long long i = static_cast<long long>(rng() % 5) - 2, j = static_cast<long long>(rng() % 5) - 2;
    EXPECT_EQ(R_positive(w, r + Fraction(i), s + Fraction(j)),
              R_positive(w, r, s) + Fraction(i * h.a + j * h.b));
  }
}

TEST_F(Properties, ReversalSymmetry) {
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_positive_word(rng, 7);
    Fraction r = random_fraction(rng, 4), s = random_fraction(rng, 4);
    EXPECT_EQ(R_positive(w, r, s), R_positive(reverse(w), r, s)) << w.str();
    EXPECT_EQ(R_positive(w, r, s), R_positive(swap_generators(w), s, r)) << w.str();
  }
}

TEST_F(Properties, MonotoneInEachArgument) {
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_positive_word(rng, 6);
    Fraction r1 = random_fraction(rng, 4), r2 = random_fraction(rng, 4), s = random_fraction(rng, 4);
    if (r2 < r1) std::swap(r1, r2);
    EXPECT_LE(R_positive(w, r1, s), R_positive(w, r2, s));
    EXPECT_LE(R_positive(w, s, r1), R_positive(w, s, r2));
  }
}

TEST_F(Properties, CountingAndLinearBounds) {
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_positive_word(rng, 7);
    Fraction r = random_fraction(rng, 5), s = random_fraction(rng, 5);
    auto report = counting_bound(w, r, s);
    EXPECT_TRUE(report.satisfied) << report.witness;
    HCounts h = h_counts(w);
    EXPECT_GE(report.value, Fraction(h.a) * r + Fraction(h.b) * s);
  }
}

TEST_F(Properties, StabilityBump) {
  for (int trial = 0; trial < 40; ++trial) {
    Word w = random_positive_word(rng, 6);
    Fraction r = random_fraction(rng, 3), s = random_fraction(rng, 3);
    for (Letter side : {Letter::a, Letter::b}) {
      auto report = stability_bump_check(w, r, s, side);
      EXPECT_TRUE(report.satisfied) << w.str() << " " << r << " " << s << " " << report.witness;
    }
  }
}

TEST_F(Properties, DenominatorBound) {
  for (int trial = 0; trial < 60; ++trial) {
    Word w = random_positive_word(rng, 6);
    Fraction r = random_fraction(rng, 6), s = random_fraction(rng, 6);
    EXPECT_LE(R_positive(w, r, s).den64(), std::min(r.den64(), s.den64()));
  }
}

TEST_F(Properties, ConjugationInvariance) {
  for (int trial = 0; trial < 30; ++trial) {
    Word w = random_positive_word(rng, 7);
    Fraction r = random_fraction(rng, 4), s = random_fraction(rng, 4);
    std::vector<Letter> letters = w.letters();
    std::rotate(letters.begin(), letters.begin() + 1, letters.end());
    EXPECT_EQ(R_positive(w, r, s), R_positive(Word(letters), r, s));
  }
}
