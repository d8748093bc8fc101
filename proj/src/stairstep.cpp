#include "rotnum/stairstep.hpp"

#include "rotnum/errors.hpp"
#include "rotnum/farey.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/simplex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace rotnum {

namespace {

long long mod(long long a, long long q) {
  long long r = a % q;
  return r < 0 ? r + q : r;
}

std::vector<Fraction> coverage_row(const IntervalConstraint& c, long long q) {
  std::vector<Fraction> row(static_cast<std::size_t>(q), Fraction(0));
  const long long full = c.length / q;
  const long long rest = c.length % q;
  for (long long j = 0; j < q; ++j) row[static_cast<std::size_t>(j)] = Fraction(full);
  for (long long j = 0; j < rest; ++j) row[static_cast<std::size_t>(mod(c.start + j, q))] += 1;
  return row;
}

void require_stair_args(const Word& w, const Fraction& r, const char* what) {
  auto h = h_counts(w);
  if (w.empty() || !w.is_positive() || h.a == 0 || h.b == 0)
    throw DomainError(std::string(what) + ": needs a positive word containing a and b, got " +
                      w.str());
  if (r.sign() < 0 || r >= Fraction(1))
    throw DomainError(std::string(what) + ": first argument " + r.str() + " outside [0, 1)");
}

// Normalized key of an interval system for memoizing LP solutions.
std::vector<IntervalConstraint> canonical(std::vector<IntervalConstraint> cs, long long q) {
  std::erase_if(cs, [](const IntervalConstraint& c) { return c.length == 0; });
  for (auto& c : cs) c.start = mod(c.start, q);
  std::sort(cs.begin(), cs.end());
  // Equal intervals: only the smallest weight matters.
  std::vector<IntervalConstraint> out;
  for (const auto& c : cs)
    if (out.empty() || out.back().start != c.start || out.back().length != c.length)
      out.push_back(c);
  return out;
}

class ThresholdSolver {
 public:
  ThresholdSolver(std::vector<Block> blocks, long long p, long long q, long long c, long long d,
                  bool periodic, const ThresholdOptions& opts)
      : base_(std::move(blocks)), p_(p), q_(q), c_(c), d_(d), periodic_(periodic), opts_(opts) {
    for (long long rep = 0; rep < d_; ++rep) blocks_.insert(blocks_.end(), base_.begin(), base_.end());
  }

  ThresholdSearch run() {
    ThresholdSearch out;
    const Fraction limit = opts_.incumbent.value_or(Fraction(1));
    best_ = limit;
    long long budget = c_ * q_;
    for (const auto& b : blocks_) budget -= b.alpha * p_ + 1;
    if (budget < 0) {
      if (limit.sign() > 0) {
        out.threshold = Fraction(0);
        out.witness = Partition{};
      }
      return out;
    }
    const long long free_parts = periodic_ ? static_cast<long long>(base_.size())
                                           : static_cast<long long>(blocks_.size());
    long long free_budget = budget;
    if (periodic_) {
      if (budget % d_ != 0) return out;
      free_budget = budget / d_;
    }
    caps_.clear();
    for (long long i = 0; i < free_parts; ++i)
      caps_.push_back(q_ * blocks_[static_cast<std::size_t>(i)].beta);
    suffix_caps_.assign(static_cast<std::size_t>(free_parts) + 1, 0);
    for (long long i = free_parts - 1; i >= 0; --i)
      suffix_caps_[static_cast<std::size_t>(i)] =
          suffix_caps_[static_cast<std::size_t>(i) + 1] + caps_[static_cast<std::size_t>(i)];
    if (free_budget > suffix_caps_[0]) return out;
    parts_.assign(static_cast<std::size_t>(free_parts), 0);
    shift_ = periodic_ ? (c_ * q_) / d_ : 0;
    update_caps();
    seed(free_budget);
    if (free_budget <= suffix_caps_[0]) dfs(0, free_budget, 0, {});
    out.nodes = nodes_;
    out.lp_solves = lp_solves_;
    if (best_ < limit) {
      out.threshold = best_;
      out.witness = expand(best_parts_);
    }
    return out;
  }

 private:
  // Constraints contributed by free part i with start (0-based) `start`.
  void push_constraints(std::vector<IntervalConstraint>& cs, std::size_t i, long long start,
                        long long length) const {
    if (length == 0) return;
    const long long weight = blocks_[i].beta;
    if (!periodic_) {
      cs.push_back({mod(start, q_), length, weight});
      return;
    }
    for (long long rep = 0; rep < d_; ++rep) cs.push_back({mod(start + rep * shift_, q_), length, weight});
  }

  Fraction solve(const std::vector<IntervalConstraint>& cs) {
    auto key = canonical(cs, q_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ++lp_solves_;
    Fraction u = min_u_by_cycles(IntervalSystem{q_, key});
    memo_.emplace(std::move(key), u);
    return u;
  }

  Partition expand(const std::vector<long long>& free) const {
    Partition out;
    if (!periodic_) {
      out.parts = free;
      return out;
    }
    for (long long rep = 0; rep < d_; ++rep) out.parts.insert(out.parts.end(), free.begin(), free.end());
    return out;
  }

  std::vector<IntervalConstraint> system_of(const std::vector<long long>& free) const {
    std::vector<IntervalConstraint> cs;
    long long s = 0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      s += blocks_[i].alpha * p_ + 1;
      push_constraints(cs, i, s - 1, free[i]);
      s += free[i];
    }
    return cs;
  }

  // Near-uniform partition, evaluated first to give the pruning an incumbent.
  void seed(long long budget) {
    std::vector<long long> free(parts_.size(), 0);
    long long left = budget;
    while (left > 0) {
      bool placed = false;
      for (std::size_t i = 0; i < free.size() && left > 0; ++i) {
        if (free[i] < caps_[i]) {
          ++free[i];
          --left;
          placed = true;
        }
      }
      if (!placed) return;
    }
    Fraction u = solve(system_of(free));
    if (u < best_) {
      best_ = u;
      best_parts_ = free;
      update_caps();
    }
  }

  // Parts of length n q or more sum to at least n, so u < best bounds them.
  void update_caps() {
    for (std::size_t i = 0; i < caps_.size(); ++i) {
      const long long beta = blocks_[i].beta;
      const BigInt wraps = (best_ * Fraction(beta)).ceil();
      const long long bound = wraps <= 0 ? -1 : static_cast<long long>(wraps) * q_ - 1;
      caps_[i] = std::min(q_ * beta, bound);
    }
    for (std::size_t i = caps_.size(); i-- > 0;)
      suffix_caps_[i] = suffix_caps_[i + 1] + std::max<long long>(caps_[i], 0);
  }

  // Rotating the partition by whole periods of w rotates the system, so only
  // partitions whose first period is lexicographically largest are visited.
  bool exceeds_first_period(std::size_t i, long long x) const {
    if (periodic_ || i < base_.size()) return false;
    const std::size_t m = base_.size();
    const std::size_t period_start = i - i % m;
    for (std::size_t t = period_start; t < i; ++t)
      if (parts_[t] != parts_[t - period_start]) return false;
    return x > parts_[i % m];
  }

  void dfs(std::size_t i, long long left, long long position,
           const std::vector<IntervalConstraint>& cs) {
    if (++nodes_ > opts_.max_nodes)
      throw CapExceeded("threshold search exceeded " + std::to_string(opts_.max_nodes) + " nodes");
    const long long start = position + blocks_[i].alpha * p_ + 1;
    const bool last = i + 1 == parts_.size();
    for (long long x = last ? left : 0;; ++x) {
      if (x > std::min(left, caps_[i])) break;
      if (x < left - suffix_caps_[i + 1]) continue;
      if (exceeds_first_period(i, x)) break;
      parts_[i] = x;
      auto next = cs;
      push_constraints(next, i, start - 1, x);
      if (last || (opts_.prune && x > 0)) {
        Fraction u = solve(next);
        if (u >= best_) continue;
        if (last) {
          best_ = u;
          best_parts_ = parts_;
          update_caps();
          continue;
        }
      }
      dfs(i + 1, left - x, start + x, next);
    }
  }

  std::vector<Block> base_;
  std::vector<Block> blocks_;
  long long p_, q_, c_, d_;
  bool periodic_;
  const ThresholdOptions& opts_;
  long long shift_ = 0;
  std::vector<long long> caps_;
  std::vector<long long> suffix_caps_;
  std::vector<long long> parts_;
  std::vector<long long> best_parts_;
  Fraction best_;
  std::size_t nodes_ = 0;
  std::size_t lp_solves_ = 0;
  std::map<std::vector<IntervalConstraint>, Fraction> memo_;
};

}  // namespace

Fraction min_u_for_system(const IntervalSystem& sys) {
  if (sys.q < 1) throw DomainError("min_u_for_system: q must be positive");
  const auto q = static_cast<std::size_t>(sys.q);
  Simplex<Fraction> lp(q + 1);
  std::vector<Fraction> total(q + 1, Fraction(1));
  total[q] = Fraction(0);
  lp.add_eq(total, Fraction(1));
  for (const auto& c : sys.constraints) {
    if (c.length < 0 || c.weight < 0) throw DomainError("min_u_for_system: negative length or weight");
    if (c.length == 0) continue;
    auto row = coverage_row(c, sys.q);
    row.push_back(Fraction(-c.weight));
    lp.add_le(std::move(row), Fraction(0));
  }
  std::vector<Fraction> cost(q + 1, Fraction(0));
  cost[q] = Fraction(1);
  auto res = lp.minimize(cost);
  if (res.status != Simplex<Fraction>::Status::optimal)
    throw DomainError("min_u_for_system: system infeasible for every u");
  return res.value;
}

std::optional<Fraction> dual_efficiency(const IntervalSystem& sys) {
  if (sys.q < 1) throw DomainError("dual_efficiency: q must be positive");
  std::vector<const IntervalConstraint*> used;
  for (const auto& c : sys.constraints)
    if (c.length > 0) used.push_back(&c);
  const auto q = static_cast<std::size_t>(sys.q);
  std::vector<std::vector<Fraction>> cover(q, std::vector<Fraction>(used.size(), Fraction(0)));
  for (std::size_t i = 0; i < used.size(); ++i) {
    auto row = coverage_row(*used[i], sys.q);
    for (std::size_t j = 0; j < q; ++j) cover[j][i] = row[j];
  }
  for (const auto& row : cover)
    if (std::all_of(row.begin(), row.end(), [](const Fraction& f) { return f.sign() == 0; }))
      return std::nullopt;
  Simplex<Fraction> lp(used.size());
  for (auto& row : cover) lp.add_ge(std::move(row), Fraction(1));
  std::vector<Fraction> cost;
  for (const auto* c : used) cost.emplace_back(c->weight);
  auto res = lp.minimize(cost);
  if (res.status != Simplex<Fraction>::Status::optimal) return std::nullopt;
  return res.value;
}

Fraction min_u_by_cycles(const IntervalSystem& sys) {
  if (sys.q < 1) throw DomainError("min_u_by_cycles: q must be positive");
  // Prefix sums P_j of t, extended by P_{j+q} = P_j + T, turn the system
  // into difference constraints; edge weights are beta - wraps * T.
  struct Edge {
    long long from, to, beta, wraps;
  };
  const long long q = sys.q;
  std::vector<Edge> edges;
  long long beta_total = 0;
  for (const auto& c : sys.constraints) {
    if (c.length < 0 || c.weight < 0) throw DomainError("min_u_by_cycles: negative length or weight");
    if (c.length == 0) continue;
    const long long s = mod(c.start, q);
    edges.push_back({s, (s + c.length) % q, c.weight, (s + c.length) / q});
    beta_total += c.weight;
  }
  if (edges.empty()) return Fraction(0);
  for (long long j = 0; j + 1 < q; ++j) edges.push_back({j + 1, j, 0, 0});
  edges.push_back({0, q - 1, 0, -1});

  // Dinkelbach iteration on the minimum ratio beta/wraps over cycles,
  // starting above every simple cycle's ratio.
  long long lam_num = beta_total + 1;
  long long lam_den = 1;
  const auto n = static_cast<std::size_t>(q);
  std::vector<__int128> dist(n);
  std::vector<long long> pred(n);
  for (bool improved = true; improved;) {
    improved = false;
    std::fill(dist.begin(), dist.end(), 0);
    std::fill(pred.begin(), pred.end(), -1);
    long long touched = -1;
    for (std::size_t round = 0; round < n; ++round) {
      touched = -1;
      for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto& ed = edges[e];
        __int128 w = static_cast<__int128>(ed.beta) * lam_den -
                     static_cast<__int128>(ed.wraps) * lam_num;
        auto from = static_cast<std::size_t>(ed.from);
        auto to = static_cast<std::size_t>(ed.to);
        if (dist[from] + w < dist[to]) {
          dist[to] = dist[from] + w;
          pred[to] = static_cast<long long>(e);
          touched = ed.to;
        }
      }
      if (touched < 0) break;
    }
    if (touched < 0) break;
    long long v = touched;
    for (std::size_t i = 0; i < n; ++i) v = edges[static_cast<std::size_t>(pred[static_cast<std::size_t>(v)])].from;
    long long cycle_beta = 0;
    long long cycle_wraps = 0;
    long long x = v;
    do {
      const auto& ed = edges[static_cast<std::size_t>(pred[static_cast<std::size_t>(x)])];
      cycle_beta += ed.beta;
      cycle_wraps += ed.wraps;
      x = ed.from;
    } while (x != v);
    if (cycle_wraps <= 0) throw std::logic_error("min_u_by_cycles: non-winding negative cycle");
    Fraction ratio(cycle_beta, cycle_wraps);
    lam_num = ratio.num64();
    lam_den = ratio.den64();
    improved = true;
  }
  if (lam_num == beta_total + 1 && lam_den == 1) return Fraction(0);
  return Fraction(lam_den, lam_num);
}

long long Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0LL); }

std::vector<Block> application_blocks(const Word& w) { return block_form(reverse(w)).blocks; }

IntervalSystem build_interval_system(const std::vector<Block>& blocks, long long p, long long q,
                                     const Partition& partition) {
  if (partition.parts.size() != blocks.size())
    throw DomainError("build_interval_system: one part per block required");
  IntervalSystem sys{q, {}};
  long long s = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    s += blocks[i].alpha * p + 1;
    sys.constraints.push_back({mod(s - 1, q), partition.parts[i], blocks[i].beta});
    s += partition.parts[i];
  }
  return sys;
}

ThresholdSearch threshold_search(const Word& w, const Fraction& r, const Fraction& value,
                                 const ThresholdOptions& opts) {
  require_stair_args(w, r, "threshold_search");
  const long long p = r.num64();
  const long long q = r.den64();
  const long long c = value.num64();
  const long long d = value.den64();
  if (d > q)
    throw DomainError("threshold_search: value " + value.str() + " has denominator above " +
                      std::to_string(q));
  const bool periodic = opts.lock_periodic && d == q && q > 1;
  ThresholdSolver solver(application_blocks(w), p, q, c, d, periodic, opts);
  return solver.run();
}

namespace {

// Candidate values c/d with d <= q in (low, high], increasing.
std::vector<Fraction> candidate_values(const Fraction& low, const Fraction& high, long long q) {
  std::set<Fraction> vals;
  for (long long d = 1; d <= q; ++d) {
    BigInt c = (low * Fraction(d)).floor() + 1;
    for (Fraction v(c, BigInt(d)); v <= high; v += Fraction(1, d))
      if (v.denominator() == d) vals.insert(v);
  }
  return {vals.begin(), vals.end()};
}

Fraction top_value(const Word& w, const Fraction& r) {
  auto h = h_counts(w);
  return Fraction(h.a) * r + Fraction(h.b);
}

}  // namespace

Fraction stairstep_threshold(const Word& w, const Fraction& r, const Fraction& value) {
  require_stair_args(w, r, "stairstep_threshold");
  const Fraction top = top_value(w, r);
  if (value > top)
    throw DomainError("stairstep_threshold: value " + value.str() + " exceeds the supremum " +
                      top.str() + " on [0, 1)");
  if (value <= R_positive(w, r, Fraction(0))) return Fraction(0);
  // inf{t : R >= value} is the least threshold over values >= `value`; the
  // lock restriction can only overshoot values that are never attained.
  std::optional<Fraction> best;
  const long long q = r.den64();
  for (const auto& v : candidate_values(value - Fraction(1, q * q + 1), top, q)) {
    if (v < value) continue;
    ThresholdOptions opts;
    opts.incumbent = best;
    auto res = threshold_search(w, r, v, opts);
    if (res.threshold) best = res.threshold;
  }
  if (!best) throw DomainError("stairstep_threshold: value " + value.str() + " not attained");
  return *best;
}

Fraction least_floor_sum_solution(const std::vector<Block>& blocks, long long target) {
  if (target <= 0) return Fraction(0);
  std::set<Fraction> candidates;
  for (const auto& b : blocks)
    for (long long j = 1; j <= target * b.beta; ++j) candidates.insert(Fraction(j, b.beta));
  for (const auto& x : candidates) {
    BigInt sum = 0;
    for (const auto& b : blocks) sum += (x * Fraction(b.beta)).floor();
    if (sum >= target) return x;
  }
  throw DomainError("least_floor_sum_solution: no solution");
}

Fraction lock_threshold(const Word& w, const Fraction& r, const Fraction& value) {
  require_stair_args(w, r, "lock_threshold");
  const long long q = r.den64();
  if (value.den64() != q || std::gcd(value.num64(), q) != 1)
    throw RegimeError("lock_threshold: value " + value.str() + " is not c/" + std::to_string(q) +
                      " with c coprime to " + std::to_string(q));
  const auto blocks = application_blocks(w);
  const long long target = value.num64() - static_cast<long long>(blocks.size()) -
                           h_counts(w).a * r.num64();
  return least_floor_sum_solution(blocks, target) / Fraction(q);
}

Fraction fringe_threshold(const Word& w, long long q, Letter side) {
  if (q < 1) throw DomainError("fringe_threshold: q must be positive");
  if (side == Letter::a) return fringe_threshold(swap_generators(w), q, Letter::b);
  if (side != Letter::b) throw DomainError("fringe_threshold: side must be a or b");
  require_stair_args(w, Fraction(0), "fringe_threshold");
  const auto blocks = application_blocks(w);
  const long long target = h_counts(w).b * q - static_cast<long long>(blocks.size());
  return least_floor_sum_solution(blocks, target) / Fraction(q);
}

Fraction Staircase::value_at(const Fraction& t) const {
  if (steps.empty()) throw DomainError("Staircase::value_at: empty staircase");
  if (t.sign() < 0 || t >= Fraction(1))
    throw DomainError("Staircase::value_at: t = " + t.str() + " outside [0, 1)");
  auto it = std::upper_bound(steps.begin(), steps.end(), t,
                             [](const Fraction& x, const Step& s) { return x < s.threshold; });
  return std::prev(it)->value;
}

Fraction Staircase::left_limit(const Fraction& t) const {
  if (steps.empty()) throw DomainError("Staircase::left_limit: empty staircase");
  if (t.sign() <= 0 || t > Fraction(1))
    throw DomainError("Staircase::left_limit: t = " + t.str() + " outside (0, 1]");
  auto it = std::lower_bound(steps.begin(), steps.end(), t,
                             [](const Step& s, const Fraction& x) { return s.threshold < x; });
  return std::prev(it)->value;
}

Staircase staircase(const Word& w, const Fraction& r, const ThresholdOptions& opts) {
  require_stair_args(w, r, "staircase");
  Staircase sc{w, r, {}};
  const Fraction base = R_positive(w, r, Fraction(0));
  const Fraction top = top_value(w, r);
  const auto values = candidate_values(base, top, r.den64());
  // Top-down: each threshold bounds the ones below it, which tightens pruning
  // and turns skipped values into ties that are dropped below.
  std::vector<Fraction> thresholds(values.size());
  Fraction incumbent(1);
  for (std::size_t i = values.size(); i-- > 0;) {
    ThresholdOptions o = opts;
    o.incumbent = incumbent;
    auto res = threshold_search(w, r, values[i], o);
    if (res.threshold) incumbent = *res.threshold;
    thresholds[i] = incumbent;
  }
  sc.steps.push_back({Fraction(0), base});
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i + 1 < values.size() && thresholds[i + 1] == thresholds[i]) continue;
    if (thresholds[i].sign() == 0 || thresholds[i] >= Fraction(1))
      throw std::logic_error("staircase: inconsistent threshold " + thresholds[i].str() +
                             " for value " + values[i].str());
    sc.steps.push_back({thresholds[i], values[i]});
  }
  return sc;
}

StaircaseCheck verify_staircase(const Staircase& sc, long long max_den,
                                const std::function<Fraction(const Fraction&)>& reference) {
  StaircaseCheck out;
  for (const auto& t : farey_sequence(max_den)) {
    if (t >= Fraction(1)) continue;
    ++out.samples;
    const Fraction expected = reference ? reference(t) : R_positive(sc.word, sc.r, t);
    if (expected != sc.value_at(t)) {
      out.consistent = false;
      out.mismatch = t;
      return out;
    }
  }
  return out;
}

}  // namespace rotnum
