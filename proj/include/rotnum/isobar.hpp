#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/limits.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/word.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rotnum {

/// Closed intervals on a cycle with `points` marked points 0..points-1 in
/// cyclic order. Interval (from, to) runs in the positive direction from
/// point `from` to point `to`; from == to means the whole cycle.
struct ArcConfig {
  int points = 0;
  std::vector<std::pair<int, int>> intervals;
};

/// A rational interval with open/closed endpoints; `empty` overrides the rest.
struct RationalInterval {
  bool empty = true;
  Fraction lo, hi;
  bool lo_closed = false;
  bool hi_closed = false;

  bool contains(const Fraction& x) const;
};

/// The set of s for which the gaps between consecutive points can be chosen
/// in (0, 1), summing to 1, with every interval of total length s.
RationalInterval feasible_rotation_interval(const ArcConfig& config);

struct GridOptions {
  unsigned threads = 1;
  EvalOptions eval;
};

/// R(w, r, s) on the reduced-fraction grid [0, 1]^2, denominators <= D.
struct ZigguratGrid {
  Word word;
  long long D = 0;
  std::vector<Fraction> axis;
  /// Row-major: values[i * axis.size() + j] = R(w, axis[i], axis[j]).
  std::vector<Fraction> values;

  const Fraction& at(std::size_t i, std::size_t j) const { return values[i * axis.size() + j]; }
};

ZigguratGrid ziggurat_grid(const Word& w, long long D, const GridOptions& opts = {});

struct FrontierRow {
  Fraction r;
  /// Least s in [0, 1) with R(w, r, s) >= level; empty if none.
  std::optional<Fraction> s_min;
};

struct FrontierCorner {
  Fraction r, s;
  /// R(w, r, s) >= level.
  bool at_corner_ok = false;
  /// R < level at the nearest grid point down-left (vacuous on the border).
  bool below_ok = false;
};

/// {(r, s) : R(w, r, s) >= level} on [0, 1)^2, exact per row r with
/// denominator <= D. Corners are listed with r increasing and s decreasing.
struct IsobarFrontier {
  Word word;
  Fraction level;
  long long D = 0;
  std::vector<FrontierRow> rows;
  std::vector<FrontierCorner> corners;

  bool empty() const { return corners.empty(); }
};

IsobarFrontier isobar_frontier(const Word& w, const Fraction& level, long long D,
                               const GridOptions& opts = {});

struct ScanPoint {
  Fraction r, s, value;
  long long q = 1;
  Fraction deviation;
  Fraction bound;
};

/// |R - h_a r - h_b s| against m/q on [0, 1)^2, q the denominator of R.
struct SlipperyScan {
  Word word;
  long long D = 0;
  long long m = 0;
  std::vector<ScanPoint> points;
  std::vector<ScanPoint> violations;

  /// Largest deviation per value denominator q, ascending in q.
  std::vector<std::pair<long long, Fraction>> max_deviation_by_q() const;
};

SlipperyScan slippery_scan(const Word& w, long long D, const GridOptions& opts = {});

struct SlipperyProbe {
  /// R(w, r-, s-): a known closed value, else the last rigid approximant.
  Fraction target;
  /// exact for closed values; inconclusive when the approximants still rise,
  /// in which case no grid point is compared.
  LimitStatus target_status = LimitStatus::exact;
  bool slippery_consistent = true;
  /// Grid point r' < r, s' < s with R(w, r', s') = target.
  std::optional<std::pair<Fraction, Fraction>> witness;
};

/// Looks for r' < r, s' < s with denominators <= D already at the lower-left
/// limit. R is monotone, so the nearest grid point decides. On r = 1 or
/// s = 1 the target is the linear value.
SlipperyProbe slippery_probe(const Word& w, const Fraction& r, const Fraction& s, long long D,
                             const EvalOptions& eval = {});

}  // namespace rotnum
