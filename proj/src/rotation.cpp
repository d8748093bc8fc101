#include "rotnum/rotation.hpp"

#include "rotnum/errors.hpp"

#include <string>
#include <vector>

namespace rotnum {

namespace {

struct Run {
  bool is_a;
  long long times;
};

// Letter runs of w in application order (right to left).
std::vector<Run> application_runs(const Word& w) {
  std::vector<Run> runs;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    bool is_a = *it == Letter::a;
    if (!runs.empty() && runs.back().is_a == is_a) ++runs.back().times;
    else runs.push_back({is_a, 1});
  }
  return runs;
}

struct Ratio {
  long long num;
  long long den;
};

bool less(const Ratio& x, const Ratio& y) {
  return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
}

Ratio orbit_rotation(const HopDynamics& dyn, const std::vector<Run>& runs,
                     std::vector<long long>& first_step, std::vector<long long>& first_index,
                     long long& period) {
  const int length = dyn.size();
  first_step.assign(static_cast<std::size_t>(length), -1);
  first_index.resize(static_cast<std::size_t>(length));
  LiftedPosition pos{0};
  for (long long step = 0;; ++step) {
    auto residue = static_cast<std::size_t>(pos.index % length);
    if (first_step[residue] >= 0) {
      period = step - first_step[residue];
      return {pos.index - first_index[residue], static_cast<long long>(length) * period};
    }
    first_step[residue] = step;
    first_index[residue] = pos.index;
    for (const auto& run : runs) pos = run.is_a ? dyn.hop_a(pos, run.times) : dyn.hop_b(pos, run.times);
  }
}

Evaluation evaluate(const Word& w, const Fraction& r, const Fraction& s, const EvalOptions& opts,
                    bool maximize) {
  if (w.empty() || !w.is_positive())
    throw DomainError("evaluate: word must be positive, got " + w.str());
  auto [ha, hb] = h_counts(w);
  Evaluation out;
  if (hb == 0) {
    out.value = Fraction(ha) * r;
    return out;
  }
  if (ha == 0) {
    out.value = Fraction(hb) * s;
    return out;
  }
  auto norm = normalize_args(w, r, s);
  const std::int64_t q1 = norm.r0.den64();
  const std::int64_t q2 = norm.s0.den64();
  if (q1 + q2 > opts.max_necklace_size)
    throw CapExceeded("necklace size " + std::to_string(q1 + q2) + " exceeds cap " +
                      std::to_string(opts.max_necklace_size));
  const long long p1 = norm.r0.num64();
  const long long p2 = norm.s0.num64();
  const auto runs = application_runs(w);
  std::vector<long long> first_step;
  std::vector<long long> first_index;
  bool have = false;
  Ratio best{0, 1};
  std::vector<std::uint8_t> best_pattern;
  long long best_period = 0;
  out.necklaces = for_each_necklace(
      static_cast<int>(q1), static_cast<int>(q2), [&](std::span<const std::uint8_t> pattern) {
        HopDynamics dyn(pattern, p1, p2);
        long long period = 0;
        Ratio value = orbit_rotation(dyn, runs, first_step, first_index, period);
        if (!have || (maximize ? less(best, value) : less(value, best))) {
          have = true;
          best = value;
          best_pattern.assign(pattern.begin(), pattern.end());
          best_period = period;
        }
      });
  out.value = Fraction(best.num, best.den) + Fraction(norm.offset);
  out.witness = Necklace(std::move(best_pattern));
  out.witness_period = best_period;
  return out;
}

}  // namespace

Evaluation evaluate_max(const Word& w, const Fraction& r, const Fraction& s,
                        const EvalOptions& opts) {
  return evaluate(w, r, s, opts, true);
}

Evaluation evaluate_min(const Word& w, const Fraction& r, const Fraction& s,
                        const EvalOptions& opts) {
  return evaluate(w, r, s, opts, false);
}

std::pair<Fraction, Fraction> x_interval(const Word& w, const Fraction& r, const Fraction& s,
                                         const EvalOptions& opts) {
  return {-R_positive(w, -r, -s, opts), R_positive(w, r, s, opts)};
}

}  // namespace rotnum
