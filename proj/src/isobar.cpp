#include "rotnum/isobar.hpp"

#include "rotnum/errors.hpp"
#include "rotnum/farey.hpp"
#include "rotnum/limits.hpp"
#include "rotnum/parallel.hpp"
#include "rotnum/simplex.hpp"
#include "rotnum/stairstep.hpp"

#include <algorithm>
#include <map>

namespace rotnum {

bool RationalInterval::contains(const Fraction& x) const {
  if (empty) return false;
  if (x < lo || x > hi) return false;
  if (x == lo && !lo_closed) return false;
  if (x == hi && !hi_closed) return false;
  return true;
}

namespace {

// Variables: t_0 .. t_{n-1}, s, eps.
class ArcLp {
 public:
  explicit ArcLp(const ArcConfig& c) : n_(static_cast<std::size_t>(c.points)), lp_(n_ + 2) {
    std::vector<Fraction> total(n_ + 2, Fraction(0));
    for (std::size_t i = 0; i < n_; ++i) total[i] = Fraction(1);
    lp_.add_eq(total, Fraction(1));
    for (auto [from, to] : c.intervals) {
      std::vector<Fraction> row(n_ + 2, Fraction(0));
      std::size_t i = static_cast<std::size_t>(from);
      do {
        row[i] = Fraction(1);
        i = (i + 1) % n_;
      } while (i != static_cast<std::size_t>(to));
      row[n_] = Fraction(-1);
      lp_.add_eq(row, Fraction(0));
    }
  }

  std::optional<Fraction> extreme_s(bool maximize) const {
    std::vector<Fraction> cost(n_ + 2, Fraction(0));
    cost[n_] = Fraction(maximize ? -1 : 1);
    auto res = lp_.minimize(cost);
    if (res.status != Simplex<Fraction>::Status::optimal) return std::nullopt;
    return res.x[n_];
  }

  /// Largest common lower bound on the gaps (capped at 1), optionally with s fixed.
  Fraction max_slack(const std::optional<Fraction>& fixed_s) const {
    Simplex<Fraction> lp = lp_;
    for (std::size_t i = 0; i < n_; ++i) {
      std::vector<Fraction> row(n_ + 2, Fraction(0));
      row[i] = Fraction(1);
      row[n_ + 1] = Fraction(-1);
      lp.add_ge(row, Fraction(0));
    }
    std::vector<Fraction> cap(n_ + 2, Fraction(0));
    cap[n_ + 1] = Fraction(1);
    lp.add_le(cap, Fraction(1));
    if (fixed_s) {
      std::vector<Fraction> row(n_ + 2, Fraction(0));
      row[n_] = Fraction(1);
      lp.add_eq(row, *fixed_s);
    }
    std::vector<Fraction> cost(n_ + 2, Fraction(0));
    cost[n_ + 1] = Fraction(-1);
    auto res = lp.minimize(cost);
    if (res.status != Simplex<Fraction>::Status::optimal) return Fraction(0);
    return res.x[n_ + 1];
  }

 private:
  std::size_t n_;
  Simplex<Fraction> lp_;
};

Fraction linear_part(const Word& w, const Fraction& r, const Fraction& s) {
  HCounts h = h_counts(w);
  return Fraction(h.a) * r + Fraction(h.b) * s;
}

void require_positive(const Word& w, const char* where) {
  if (w.empty() || !w.is_positive()) throw DomainError(std::string(where) + ": word must be positive");
}

std::optional<Fraction> grid_predecessor(const std::vector<Fraction>& axis, const Fraction& x) {
  auto it = std::lower_bound(axis.begin(), axis.end(), x);
  if (it == axis.begin()) return std::nullopt;
  return *std::prev(it);
}

}  // namespace

RationalInterval feasible_rotation_interval(const ArcConfig& config) {
  if (config.intervals.empty()) throw DomainError("feasible_rotation_interval: no intervals");
  for (auto [from, to] : config.intervals)
    if (from < 0 || to < 0 || from >= config.points || to >= config.points)
      throw DomainError("feasible_rotation_interval: endpoint out of range");
  RationalInterval out;
  // Every gap lies in (0, 1) and the gaps sum to 1, so at least two are needed.
  if (config.points < 2) return out;
  ArcLp lp(config);
  if (lp.max_slack(std::nullopt).sign() <= 0) return out;
  // The strict region is nonempty, so its closure is the whole t >= 0 polytope.
  out.empty = false;
  out.lo = *lp.extreme_s(false);
  out.hi = *lp.extreme_s(true);
  out.lo_closed = lp.max_slack(out.lo).sign() > 0;
  out.hi_closed = lp.max_slack(out.hi).sign() > 0;
  return out;
}

ZigguratGrid ziggurat_grid(const Word& w, long long D, const GridOptions& opts) {
  require_positive(w, "ziggurat_grid");
  ZigguratGrid grid;
  grid.word = w;
  grid.D = D;
  grid.axis = farey_sequence(D);
  const std::size_t n = grid.axis.size();
  grid.values.assign(n * n, Fraction(0));
  parallel_for(n * n, opts.threads, [&](std::size_t k) {
    grid.values[k] = R_positive(w, grid.axis[k / n], grid.axis[k % n], opts.eval);
  });
  return grid;
}

IsobarFrontier isobar_frontier(const Word& w, const Fraction& level, long long D,
                               const GridOptions& opts) {
  require_positive(w, "isobar_frontier");
  IsobarFrontier out;
  out.word = w;
  out.level = level;
  out.D = D;
  const auto axis = farey_half_open(D);
  const HCounts h = h_counts(w);
  out.rows.resize(axis.size());
  parallel_for(axis.size(), opts.threads, [&](std::size_t i) {
    const Fraction& r = axis[i];
    out.rows[i].r = r;
    if (level <= R_positive(w, r, Fraction(0), opts.eval))
      out.rows[i].s_min = Fraction(0);
    else if (level <= Fraction(h.a) * r + Fraction(h.b))
      out.rows[i].s_min = stairstep_threshold(w, r, level);
  });

  std::optional<Fraction> previous;
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    const auto& row = out.rows[i];
    if (!row.s_min || (previous && *row.s_min >= *previous)) continue;
    previous = row.s_min;
    FrontierCorner c{row.r, *row.s_min};
    c.at_corner_ok = R_positive(w, c.r, c.s, opts.eval) >= level;
    std::optional<Fraction> r_below = i > 0 ? std::optional<Fraction>(axis[i - 1]) : std::nullopt;
    std::optional<Fraction> s_below = grid_predecessor(axis, c.s);
    if (!r_below && !s_below)
      c.below_ok = true;
    else
      c.below_ok = R_positive(w, r_below.value_or(c.r), s_below.value_or(c.s), opts.eval) < level;
    out.corners.push_back(c);
  }
  return out;
}

std::vector<std::pair<long long, Fraction>> SlipperyScan::max_deviation_by_q() const {
  std::map<long long, Fraction> best;
  for (const auto& p : points) {
    auto [it, inserted] = best.emplace(p.q, p.deviation);
    if (!inserted && it->second < p.deviation) it->second = p.deviation;
  }
  return {best.begin(), best.end()};
}

SlipperyScan slippery_scan(const Word& w, long long D, const GridOptions& opts) {
  require_positive(w, "slippery_scan");
  SlipperyScan out;
  out.word = w;
  out.D = D;
  out.m = block_form(w).m();
  const auto axis = farey_half_open(D);
  const std::size_t n = axis.size();
  out.points.resize(n * n);
  parallel_for(n * n, opts.threads, [&](std::size_t k) {
    ScanPoint& p = out.points[k];
    p.r = axis[k / n];
    p.s = axis[k % n];
    p.value = R_positive(w, p.r, p.s, opts.eval);
    p.q = p.value.den64();
    p.deviation = abs(p.value - linear_part(w, p.r, p.s));
    p.bound = Fraction(out.m, p.q);
  });
  for (const auto& p : out.points)
    if (p.deviation > p.bound) out.violations.push_back(p);
  return out;
}

SlipperyProbe slippery_probe(const Word& w, const Fraction& r, const Fraction& s, long long D,
                             const EvalOptions& eval) {
  require_positive(w, "slippery_probe");
  RigidOptions ro;
  ro.eval = eval;
  SlipperyProbe out;
  const auto h = h_counts(w);
  if (auto known = rigid_special_values(w, r, s)) {
    out.target = *known;
  } else if (r == Fraction(1) || s == Fraction(1)) {
    // Slippery for every positive word, so the left limit is linear there.
    out.target = Fraction(h.a) * r + Fraction(h.b) * s;
  } else {
    auto limit = R_rigid(w, r, s, ro);
    out.target = limit.value;
    out.target_status = limit.status;
    if (limit.status == LimitStatus::inconclusive) return out;
  }
  const auto axis = farey_sequence(D);
  auto r_below = grid_predecessor(axis, r);
  auto s_below = grid_predecessor(axis, s);
  if (!r_below || !s_below) return out;
  if (R_positive(w, *r_below, *s_below, eval) == out.target) {
    out.slippery_consistent = false;
    out.witness = std::make_pair(*r_below, *s_below);
  }
  return out;
}

}  // namespace rotnum
