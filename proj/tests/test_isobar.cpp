#include "rotnum/closed_forms.hpp"
#include "rotnum/errors.hpp"
#include "rotnum/farey.hpp"
#include "rotnum/isobar.hpp"
#include "rotnum/stairstep.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace rotnum;

TEST(FeasibleRotation, WholeCycleMinusAPoint) {
  auto i = feasible_rotation_interval({2, {{0, 1}}});
  ASSERT_FALSE(i.empty);
  EXPECT_EQ(i.lo, Fraction(0));
  EXPECT_EQ(i.hi, Fraction(1));
  EXPECT_FALSE(i.lo_closed);
  EXPECT_FALSE(i.hi_closed);
  EXPECT_TRUE(i.contains(Fraction(1, 3)));
  EXPECT_FALSE(i.contains(Fraction(1)));
}

TEST(FeasibleRotation, NestedIsEmpty) {
  EXPECT_TRUE(feasible_rotation_interval({4, {{0, 3}, {1, 2}}}).empty);
  EXPECT_TRUE(feasible_rotation_interval({1, {{0, 0}}}).empty);
}

TEST(FeasibleRotation, TwoHalvesForceOneHalf) {
  auto i = feasible_rotation_interval({2, {{0, 1}, {1, 0}}});
  ASSERT_FALSE(i.empty);
  EXPECT_EQ(i.lo, Fraction(1, 2));
  EXPECT_EQ(i.hi, Fraction(1, 2));
  EXPECT_TRUE(i.lo_closed && i.hi_closed);
}

TEST(FeasibleRotation, AdjacentIntervals) {
  auto i = feasible_rotation_interval({3, {{0, 1}, {1, 2}}});
  EXPECT_EQ(i.lo, Fraction(0));
  EXPECT_EQ(i.hi, Fraction(1, 2));
  EXPECT_FALSE(i.lo_closed);
  EXPECT_FALSE(i.hi_closed);
  EXPECT_THROW(feasible_rotation_interval({3, {{0, 5}}}), DomainError);
}

TEST(FeasibleRotation, DependsOnlyOnTheCyclicArrangement) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    ArcConfig c;
    c.points = 2 + static_cast<int>(rng() % 5);
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < count; ++k)
      c.intervals.emplace_back(static_cast<int>(rng() % c.points), static_cast<int>(rng() % c.points));
    auto base = feasible_rotation_interval(c);
    // Relabel points by a rotation and list the intervals in another order.
    ArcConfig d = c;
    const int shift = 1 + static_cast<int>(rng() % c.points);
    for (auto& [from, to] : d.intervals) {
      from = (from + shift) % c.points;
      to = (to + shift) % c.points;
    }
    std::reverse(d.intervals.begin(), d.intervals.end());
    auto moved = feasible_rotation_interval(d);
    ASSERT_EQ(base.empty, moved.empty);
    if (base.empty) continue;
    EXPECT_EQ(base.lo, moved.lo);
    EXPECT_EQ(base.hi, moved.hi);
    EXPECT_EQ(base.lo_closed, moved.lo_closed);
    EXPECT_EQ(base.hi_closed, moved.hi_closed);
  }
}

TEST(Ziggurat, AbGridMatchesFormula) {
  GridOptions opts;
  opts.threads = 3;
  ZigguratGrid g = ziggurat_grid(parse_word("ab"), 5, opts);
  ASSERT_EQ(g.axis.size(), 11u);
  for (std::size_t i = 0; i < g.axis.size(); ++i)
    for (std::size_t j = 0; j < g.axis.size(); ++j) {
      const Fraction &r = g.axis[i], &s = g.axis[j];
      const Fraction shift = Fraction(r.floor()) + Fraction(s.floor());
      EXPECT_EQ(g.at(i, j), oracle::ab_formula(r.frac(), s.frac()) + shift) << r << " " << s;
    }
}

TEST(Ziggurat, KnownCellsAndMonotonicity) {
  ZigguratGrid ab = ziggurat_grid(parse_word("ab"), 3);
  ZigguratGrid w = ziggurat_grid(parse_word("abaab"), 3);
  auto index = [&](const Fraction& x) {
    return static_cast<std::size_t>(std::find(ab.axis.begin(), ab.axis.end(), x) - ab.axis.begin());
  };
  EXPECT_EQ(ab.at(index(Fraction(2, 3)), index(Fraction(1, 2))), Fraction(3, 2));
  EXPECT_EQ(w.at(index(Fraction(2, 3)), index(Fraction(1, 2))), Fraction(4));
  for (std::size_t i = 0; i < w.axis.size(); ++i)
    for (std::size_t j = 0; j + 1 < w.axis.size(); ++j) {
      EXPECT_LE(w.at(i, j), w.at(i, j + 1));
      EXPECT_LE(w.at(j, i), w.at(j + 1, i));
    }
}

TEST(Ziggurat, RowsMatchStaircases) {
  Word w = parse_word("aabab");
  ZigguratGrid g = ziggurat_grid(w, 4);
  for (std::size_t i = 0; i + 1 < g.axis.size(); ++i) {
    Staircase sc = staircase(w, g.axis[i]);
    for (std::size_t j = 0; j + 1 < g.axis.size(); ++j) EXPECT_EQ(g.at(i, j), sc.value_at(g.axis[j]));
  }
}

TEST(Ziggurat, ThreadCountDoesNotChangeTheGrid) {
  GridOptions one, many;
  many.threads = 4;
  EXPECT_EQ(ziggurat_grid(parse_word("abaab"), 4, one).values, ziggurat_grid(parse_word("abaab"), 4, many).values);
}

TEST(Isobar, AbLevelOneFillsTheSquare) {
  auto f = isobar_frontier(parse_word("ab"), Fraction(1), 4);
  ASSERT_EQ(f.corners.size(), 1u);
  EXPECT_EQ(f.corners[0].r, Fraction(0));
  EXPECT_EQ(f.corners[0].s, Fraction(0));
}

TEST(Isobar, AbThreeHalves) {
  for (long long D : {2, 4, 6}) {
    auto f = isobar_frontier(parse_word("ab"), Fraction(3, 2), D);
    ASSERT_FALSE(f.empty());
    EXPECT_EQ(f.corners.front().r, Fraction(1, 2));
    EXPECT_EQ(f.corners.front().s, Fraction(1, 2));
  }
}

TEST(Isobar, CornersPassTheTwoSidedCheckAndFormAStaircase) {
  for (auto [text, level] : {std::pair{"ab", Fraction(4, 3)}, {"abaab", Fraction(5, 2)}, {"abaab", Fraction(3)},
                             {"aabab", Fraction(7, 2)}}) {
    auto f = isobar_frontier(parse_word(text), level, 6);
    ASSERT_FALSE(f.empty()) << text;
    for (std::size_t i = 0; i < f.corners.size(); ++i) {
      EXPECT_TRUE(f.corners[i].at_corner_ok && f.corners[i].below_ok) << text << " " << f.corners[i].r;
      if (i > 0) {
        EXPECT_LT(f.corners[i - 1].r, f.corners[i].r);
        EXPECT_GT(f.corners[i - 1].s, f.corners[i].s);
      }
    }
    for (const auto& row : f.rows)
      if (row.s_min && row.s_min->sign() > 0) {
        for (const auto& t : farey_half_open(6))
          if (t < *row.s_min) {
            EXPECT_LT(R_positive(parse_word(text), row.r, t), level);
          }
      }
  }
}

TEST(Isobar, UnreachableLevelIsEmpty) {
  EXPECT_TRUE(isobar_frontier(parse_word("ab"), Fraction(2), 5).empty());
}

TEST(Slippery, AbaabWithinBound) {
  auto scan = slippery_scan(parse_word("abaab"), 8);
  EXPECT_TRUE(scan.violations.empty());
  EXPECT_EQ(scan.m, 2);
  for (const auto& p : scan.points) {
    if (p.value == Fraction(3) * p.r + Fraction(2) * p.s) {
      EXPECT_EQ(p.deviation.sign(), 0);
    }
  }
  for (auto [q, dev] : scan.max_deviation_by_q()) EXPECT_LE(dev, Fraction(2, q));
}

TEST(Slippery, AbWithinBound) {
  auto scan = slippery_scan(parse_word("ab"), 8);
  EXPECT_TRUE(scan.violations.empty());
  for (const auto& p : scan.points) EXPECT_EQ(p.value, oracle::ab_formula(p.r, p.s));
}

TEST(Slippery, AbaabUpToThirteen) {
  GridOptions opts;
  opts.eval.max_necklace_size = 26;
  auto scan = slippery_scan(parse_word("abaab"), 13, opts);
  EXPECT_TRUE(scan.violations.empty());
}

TEST(Slippery, Probes) {
  auto half = slippery_probe(parse_word("abaab"), Fraction(1, 2), Fraction(1, 2), 8);
  EXPECT_EQ(half.target, Fraction(5, 2));
  EXPECT_TRUE(half.slippery_consistent);

  auto ab = slippery_probe(parse_word("ab"), Fraction(1, 2), Fraction(1, 2), 6);
  EXPECT_FALSE(ab.slippery_consistent);
  ASSERT_TRUE(ab.witness);
  EXPECT_GE(ab.witness->first, Fraction(1, 3));
  EXPECT_LT(ab.witness->first, Fraction(1, 2));
  EXPECT_GE(ab.witness->second, Fraction(1, 3));
  EXPECT_LT(ab.witness->second, Fraction(1, 2));

  for (const char* text : {"ab", "abaab", "aabab"})
    for (const auto& t : {Fraction(1, 3), Fraction(1, 2)}) {
      EXPECT_TRUE(slippery_probe(parse_word(text), Fraction(1), t, 6).slippery_consistent) << text << " " << t;
      EXPECT_TRUE(slippery_probe(parse_word(text), t, Fraction(1), 6).slippery_consistent) << text << " " << t;
    }
}
