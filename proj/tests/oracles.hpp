#pragma once

// Slow, independent reference implementations used only by the tests.

#include "rotnum/farey.hpp"
#include "rotnum/fraction.hpp"
#include "rotnum/word.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using rotnum::Fraction;
using rotnum::Letter;
using rotnum::Word;

/// Position of the (p+1)-th letter `c` at or after `i`, walking the cyclic
/// string one cell at a time.
inline long long walk(const std::vector<int>& cells, long long i, long long p, int c) {
  const auto n = static_cast<long long>(cells.size());
  long long seen = 0;
  for (long long j = i;; ++j) {
    if (cells[static_cast<std::size_t>(((j % n) + n) % n)] == c && seen++ == p) return j;
  }
}

inline Fraction rotation_on(const std::vector<int>& cells, const Word& w, long long p1, long long p2) {
  const auto n = static_cast<long long>(cells.size());
  std::map<long long, std::pair<long long, long long>> seen;  // residue -> (step, index)
  long long x = 0;
  for (long long step = 0;; ++step) {
    const long long res = ((x % n) + n) % n;
    auto it = seen.find(res);
    if (it != seen.end()) return Fraction(x - it->second.second, n * (step - it->second.first));
    seen.emplace(res, std::make_pair(step, x));
    for (auto l = w.letters().rbegin(); l != w.letters().rend(); ++l)
      x = *l == Letter::a ? walk(cells, x, p1, 0) : walk(cells, x, p2, 1);
  }
}

/// R(w, r, s) for positive w by brute force over every arrangement (not just
/// necklaces) of the two periodic orbits, after reducing r, s into [0, 1).
inline Fraction brute_R(const Word& w, const Fraction& r, const Fraction& s, bool maximum = true) {
  const rotnum::HCounts h = rotnum::h_counts(w);
  const Fraction r0 = r.frac(), s0 = s.frac();
  const Fraction shift = Fraction(r.floor()) * Fraction(h.a) + Fraction(s.floor()) * Fraction(h.b);
  const long long q1 = r0.den64(), q2 = s0.den64(), p1 = r0.num64(), p2 = s0.num64();
  std::vector<int> cells(static_cast<std::size_t>(q1), 0);
  cells.resize(static_cast<std::size_t>(q1 + q2), 1);
  std::optional<Fraction> best;
  do {
    Fraction v = rotation_on(cells, w, p1, p2);
    if (!best || (maximum ? v > *best : v < *best)) best = v;
  } while (std::next_permutation(cells.begin(), cells.end()));
  return *best + shift;
}

/// The ab closed form evaluated directly: max over q of (floor(rq)+floor(sq)+1)/q.
inline Fraction ab_formula(const Fraction& r, const Fraction& s) {
  const long long bound = (r.den64() * s.den64());
  Fraction best(0);
  for (long long q = 1; q <= bound; ++q) {
    Fraction v = (Fraction((r * Fraction(q)).floor()) + Fraction((s * Fraction(q)).floor()) + Fraction(1)) / Fraction(q);
    best = std::max(best, v);
  }
  return best;
}

inline std::vector<std::pair<Fraction, Fraction>> reduced_pairs(long long max_den) {
  std::vector<std::pair<Fraction, Fraction>> out;
  for (const auto& r : rotnum::farey_half_open(max_den))
    for (const auto& s : rotnum::farey_half_open(max_den)) out.emplace_back(r, s);
  return out;
}

}  // namespace oracle
