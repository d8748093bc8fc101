#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/word.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rotnum {

enum class LimitStatus { exact, stabilized, inconclusive };

const char* to_string(LimitStatus status);

struct LimitResult {
  Fraction value;
  LimitStatus status = LimitStatus::exact;
  /// Last k used (stabilized / inconclusive); 0 for exact results.
  long long k = 0;
  /// (k, approximant) in increasing k.
  std::vector<std::pair<long long, Fraction>> trace;
  /// h_a r + h_b s, reported when it differs from `value`.
  std::optional<Fraction> linear_value;
};

/// lim_{t -> s0-} R(w, r, t) for positive w; exact, from threshold searches.
LimitResult R_left_limit_second(const Word& w, const Fraction& r, const Fraction& s0);

/// lim_{t -> r0-} R(w, t, s), via the generator swap.
LimitResult R_left_limit_first(const Word& w, const Fraction& r0, const Fraction& s);

struct RigidOptions {
  long long k_max = 6;
  EvalOptions eval;
};

/// R(w, r-, s-) for any reduced word with r, s in (0, 1]: positivizes w and
/// evaluates R(w_pos, (k p1 - 1)/(k q1), (k p2 - 1)/(k q2)) - N for
/// k = 2, 3, ...; stabilized once three consecutive approximants agree.
LimitResult R_rigid(const Word& w, const Fraction& r, const Fraction& s,
                    const RigidOptions& opts = {});

/// Known closed values of R(w, r-, s-): (h_a + h_b)/2 at (1/2, 1/2).
std::optional<Fraction> rigid_special_values(const Word& w, const Fraction& r, const Fraction& s);

}  // namespace rotnum
