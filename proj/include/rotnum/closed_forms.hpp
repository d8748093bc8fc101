#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/word.hpp"

#include <string>

namespace rotnum {

/// Outcome of comparing a computed value against a closed-form bound.
struct BoundReport {
  Fraction value;
  Fraction bound;
  bool satisfied = false;
  std::string witness;
};

/// max over 1 <= q <= lcm(den r, den s) of (floor(rq) + floor(sq) + 1) / q,
/// for r, s in [0, 1). Optionally reports the maximizing q (the least one).
Fraction R_ab_formula(const Fraction& r, const Fraction& s, long long* maximizer = nullptr);

/// r(ab, p1/q1, p2/q2) = 2 - R(ab, (q1-p1-1)/q1, (q2-p2-1)/q2).
Fraction r_ab_via_duality(const Fraction& r, const Fraction& s);
/// Same, from numerator/denominator pairs; throws DomainError unless reduced
/// and in [0, 1).
Fraction r_ab_via_duality(long long p1, long long q1, long long p2, long long q2);

/// R(w, r, s) <= m(w) + r h_a(w) + s h_b(w).
BoundReport counting_bound(const Word& w, const Fraction& r, const Fraction& s,
                           const EvalOptions& opts = {});

/// With p/q = R(w, r, s) and m the longest cyclic a-run (b-run for
/// Letter::b), checks R(w, r + 1/(mq), s) >= p/q + 1/q^2 (resp. in s).
BoundReport stability_bump_check(const Word& w, const Fraction& r, const Fraction& s,
                                 Letter side = Letter::a, const EvalOptions& opts = {});

/// With R(w, p/q, t) = c/q of full denominator q, checks
/// |c/q - h_a p/q - h_b t| <= 2m/q. Throws RegimeError when den R != q.
BoundReport lock_inequality_check(const Word& w, const Fraction& r, const Fraction& t,
                                  const EvalOptions& opts = {});

}  // namespace rotnum
