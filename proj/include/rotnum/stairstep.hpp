#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/word.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace rotnum {

/// Cyclic constraint t_start + ... + t_{start+length-1} <= weight * u on q
/// positions (indices mod q; lengths may exceed q and wrap repeatedly).
struct IntervalConstraint {
  long long start = 0;
  long long length = 0;
  long long weight = 1;
  friend auto operator<=>(const IntervalConstraint&, const IntervalConstraint&) = default;
};

struct IntervalSystem {
  long long q = 1;
  std::vector<IntervalConstraint> constraints;
};

/// Least u such that some t >= 0 with sum t = 1 meets every constraint.
Fraction min_u_for_system(const IntervalSystem& sys);

/// Least sum r_i * weight_i over r >= 0 covering every position at least
/// once (with multiplicity). Empty when the intervals do not cover the cycle.
std::optional<Fraction> dual_efficiency(const IntervalSystem& sys);

/// min_u_for_system by a combinatorial route: 1 / (least ratio weight /
/// winding over cycles of the prefix-sum constraint graph).
Fraction min_u_by_cycles(const IntervalSystem& sys);

struct Partition {
  std::vector<long long> parts;
  long long total() const;
};

/// Blocks of w in application order (right to left), starting with an
/// a-block, as used by the threshold search.
std::vector<Block> application_blocks(const Word& w);

/// The interval system of a partition for R(w, p/q, t) >= c/d; `blocks` is
/// application_blocks(w) repeated d times, one part per block.
IntervalSystem build_interval_system(const std::vector<Block>& blocks, long long p, long long q,
                                     const Partition& partition);

struct ThresholdOptions {
  bool prune = true;
  /// For values of full denominator q, search only partitions repeating with
  /// the block period. Exact for attained values; may overshoot skipped ones.
  bool lock_periodic = true;
  /// Only thresholds strictly below this are reported.
  std::optional<Fraction> incumbent;
  std::size_t max_nodes = 20'000'000;
};

struct ThresholdSearch {
  /// Least t in [0, incumbent) found; empty when there is none.
  std::optional<Fraction> threshold;
  std::optional<Partition> witness;
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
};

/// Branch-and-bound over partitions for inf{t : R(w, r, t) >= value}.
ThresholdSearch threshold_search(const Word& w, const Fraction& r, const Fraction& value,
                                 const ThresholdOptions& opts = {});

/// inf{t in [0, 1) : R(w, r, t) >= value} for positive w and r in [0, 1).
/// Throws DomainError when no such t exists.
Fraction stairstep_threshold(const Word& w, const Fraction& r, const Fraction& value);

/// Least x among the j / beta_i with sum floor(beta_i x) >= target.
Fraction least_floor_sum_solution(const std::vector<Block>& blocks, long long target);

/// Closed form for a value c/q with gcd(c, q) = 1; throws RegimeError
/// otherwise.
Fraction lock_threshold(const Word& w, const Fraction& r, const Fraction& value);

/// Threshold of the value h_a p/q + h_b in the second argument (Letter::b),
/// or of h_a + h_b p/q in the first argument (Letter::a).
Fraction fringe_threshold(const Word& w, long long q, Letter side = Letter::b);

struct Step {
  Fraction threshold;
  Fraction value;
  friend bool operator==(const Step&, const Step&) = default;
};

/// t -> R(w, r, t) on [0, 1): value holds on [threshold, next threshold).
struct Staircase {
  Word word;
  Fraction r;
  std::vector<Step> steps;

  Fraction value_at(const Fraction& t) const;
  /// Limit from below at t in (0, 1]; at t = 1 the value h_a r + h_b.
  Fraction left_limit(const Fraction& t) const;
};

Staircase staircase(const Word& w, const Fraction& r, const ThresholdOptions& opts = {});

struct StaircaseCheck {
  bool consistent = true;
  std::size_t samples = 0;
  std::optional<Fraction> mismatch;
};

/// Compares the staircase with R at every reduced t in [0, 1) with
/// denominator <= max_den. `reference` replaces necklace evaluation when set.
StaircaseCheck verify_staircase(const Staircase& sc, long long max_den,
                                const std::function<Fraction(const Fraction&)>& reference = {});

}  // namespace rotnum
