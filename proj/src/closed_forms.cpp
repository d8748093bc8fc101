#include "rotnum/closed_forms.hpp"

#include "rotnum/errors.hpp"

#include <numeric>

namespace rotnum {

namespace {

void require_unit(const Fraction& x, const char* what) {
  if (x.sign() < 0 || x >= Fraction(1))
    throw DomainError(std::string(what) + ": argument " + x.str() + " outside [0, 1)");
}

void require_positive_both(const Word& w, const char* what) {
  auto h = h_counts(w);
  if (w.empty() || !w.is_positive() || h.a == 0 || h.b == 0)
    throw DomainError(std::string(what) + ": needs a positive word containing a and b, got " +
                      w.str());
}

}  // namespace

Fraction R_ab_formula(const Fraction& r, const Fraction& s, long long* maximizer) {
  require_unit(r, "R_ab_formula");
  require_unit(s, "R_ab_formula");
  const std::int64_t d1 = r.den64();
  const std::int64_t d2 = s.den64();
  const std::int64_t limit = std::lcm(d1, d2);
  const std::int64_t p1 = r.num64();
  const std::int64_t p2 = s.num64();
  std::int64_t best_num = 0;
  std::int64_t best_q = 0;
  for (std::int64_t q = 1; q <= limit; ++q) {
    std::int64_t num = (p1 * q) / d1 + (p2 * q) / d2 + 1;
    if (best_q == 0 || static_cast<__int128>(num) * best_q > static_cast<__int128>(best_num) * q) {
      best_num = num;
      best_q = q;
    }
  }
  if (maximizer) *maximizer = best_q;
  return Fraction(best_num, best_q);
}

Fraction r_ab_via_duality(const Fraction& r, const Fraction& s) {
  require_unit(r, "r_ab_via_duality");
  require_unit(s, "r_ab_via_duality");
  return r_ab_via_duality(r.num64(), r.den64(), s.num64(), s.den64());
}

Fraction r_ab_via_duality(long long p1, long long q1, long long p2, long long q2) {
  auto check = [](long long p, long long q) {
    if (q < 1 || p < 0 || p >= q || std::gcd(p, q) != 1)
      throw DomainError("r_ab_via_duality: " + std::to_string(p) + "/" + std::to_string(q) +
                        " is not a reduced fraction in [0, 1)");
  };
  check(p1, q1);
  check(p2, q2);
  return Fraction(2) - R_ab_formula(Fraction(q1 - p1 - 1, q1), Fraction(q2 - p2 - 1, q2));
}

BoundReport counting_bound(const Word& w, const Fraction& r, const Fraction& s,
                           const EvalOptions& opts) {
  require_positive_both(w, "counting_bound");
  auto h = h_counts(w);
  BoundReport out;
  out.value = R_positive(w, r, s, opts);
  out.bound = Fraction(block_form(w).m()) + r * Fraction(h.a) + s * Fraction(h.b);
  out.satisfied = out.value <= out.bound;
  return out;
}

BoundReport stability_bump_check(const Word& w, const Fraction& r, const Fraction& s,
                                 Letter side, const EvalOptions& opts) {
  require_positive_both(w, "stability_bump_check");
  if (side != Letter::a && side != Letter::b)
    throw DomainError("stability_bump_check: side must be a or b");
  const Fraction base = R_positive(w, r, s, opts);
  const Fraction q(base.denominator());
  const long long m = longest_cyclic_run(w, side);
  const Fraction step = Fraction(1) / (Fraction(m) * q);
  BoundReport out;
  out.value = side == Letter::a ? R_positive(w, r + step, s, opts)
                                : R_positive(w, r, s + step, opts);
  out.bound = base + Fraction(1) / (q * q);
  out.satisfied = out.value >= out.bound;
  out.witness = "R=" + base.str() + " run=" + std::to_string(m) + " shifted " +
                std::string(1, to_char(side)) + " by " + step.str();
  return out;
}

BoundReport lock_inequality_check(const Word& w, const Fraction& r, const Fraction& t,
                                  const EvalOptions& opts) {
  require_positive_both(w, "lock_inequality_check");
  const Fraction value = R_positive(w, r, t, opts);
  if (value.denominator() != r.denominator())
    throw RegimeError("lock_inequality_check: R = " + value.str() + " does not have denominator " +
                      r.denominator().str());
  auto h = h_counts(w);
  BoundReport out;
  out.value = abs(value - r * Fraction(h.a) - t * Fraction(h.b));
  out.bound = Fraction(2 * block_form(w).m()) / Fraction(r.denominator());
  out.satisfied = out.value <= out.bound;
  out.witness = "R=" + value.str();
  return out;
}

}  // namespace rotnum
