#include "rotnum/limits.hpp"

#include "rotnum/errors.hpp"
#include "rotnum/stairstep.hpp"

#include <set>

namespace rotnum {

const char* to_string(LimitStatus status) {
  switch (status) {
    case LimitStatus::exact: return "exact";
    case LimitStatus::stabilized: return "stabilized";
    case LimitStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

LimitResult R_left_limit_second(const Word& w, const Fraction& r, const Fraction& s0) {
  if (w.empty() || !w.is_positive())
    throw DomainError("R_left_limit_second: word must be positive, got " + w.str());
  const auto h = h_counts(w);
  LimitResult out;
  if (h.b == 0) {
    out.value = Fraction(h.a) * r;
    return out;
  }
  if (h.a == 0) {
    out.value = Fraction(h.b) * s0;
    return out;
  }
  // Shift so that the limit point lies in (0, 1].
  const BigInt turns = s0.ceil() - 1;
  const Fraction s = s0 - Fraction(turns);
  const auto norm = normalize_args(w, r, Fraction(0));
  const Fraction offset = Fraction(norm.offset) + Fraction(turns * h.b);
  const Fraction& r0 = norm.r0;
  if (s == Fraction(1)) {
    out.value = Fraction(h.a) * r0 + Fraction(h.b) + offset;
    return out;
  }
  // The limit is the largest value whose threshold lies below s; search
  // downward from R(w, r0, s), stopping at the first value reached earlier.
  const Fraction base = R_positive(w, r0, Fraction(0));
  const Fraction upper = R_positive(w, r0, s);
  const long long q = r0.den64();
  std::set<Fraction> candidates;
  for (long long d = 1; d <= q; ++d) {
    BigInt c = (base * Fraction(d)).floor() + 1;
    for (Fraction v(c, BigInt(d)); v <= upper; v += Fraction(1, d)) candidates.insert(v);
  }
  out.value = base;
  for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
    ThresholdOptions opts;
    opts.incumbent = s;
    if (threshold_search(w, r0, *it, opts).threshold) {
      out.value = *it;
      break;
    }
  }
  out.value += offset;
  return out;
}

LimitResult R_left_limit_first(const Word& w, const Fraction& r0, const Fraction& s) {
  return R_left_limit_second(swap_generators(w), s, r0);
}

LimitResult R_rigid(const Word& w, const Fraction& r, const Fraction& s, const RigidOptions& opts) {
  auto in_range = [](const Fraction& x) { return x.sign() > 0 && x <= Fraction(1); };
  if (!in_range(r) || !in_range(s))
    throw DomainError("R_rigid: arguments must lie in (0, 1], got " + r.str() + ", " + s.str());
  if (opts.k_max < 2) throw DomainError("R_rigid: k_max must be at least 2");
  const long long p1 = r.num64(), q1 = r.den64();
  const long long p2 = s.num64(), q2 = s.den64();
  const auto pos = positivize(w, q1, q2, p1, p2);
  LimitResult out;
  out.status = LimitStatus::inconclusive;
  for (long long k = 2; k <= opts.k_max; ++k) {
    const Fraction rk(k * p1 - 1, k * q1);
    const Fraction sk(k * p2 - 1, k * q2);
    Fraction value;
    try {
      value = pos.word.empty() ? Fraction(0) : R_positive(pos.word, rk, sk, opts.eval);
    } catch (const CapExceeded&) {
      break;
    }
    value -= Fraction(pos.shift);
    out.trace.emplace_back(k, value);
    out.k = k;
    out.value = value;
    const std::size_t n = out.trace.size();
    if (n >= 3 && out.trace[n - 1].second == out.trace[n - 2].second &&
        out.trace[n - 2].second == out.trace[n - 3].second) {
      out.status = LimitStatus::stabilized;
      break;
    }
  }
  if (out.trace.empty())
    throw CapExceeded("R_rigid: first approximant exceeds the necklace cap");
  const auto h = h_counts(w);
  const Fraction linear = Fraction(h.a) * r + Fraction(h.b) * s;
  if (linear != out.value) out.linear_value = linear;
  return out;
}

std::optional<Fraction> rigid_special_values(const Word& w, const Fraction& r, const Fraction& s) {
  if (r != Fraction(1, 2) || s != Fraction(1, 2)) return std::nullopt;
  const auto h = h_counts(w);
  return Fraction(h.a + h.b, 2);
}

}  // namespace rotnum
