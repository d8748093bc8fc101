// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "rotnum/closed_forms.hpp"
#include "rotnum/farey.hpp"
#include "rotnum/game.hpp"
#include "rotnum/isobar.hpp"
#include "rotnum/limits.hpp"
#include "rotnum/necklace.hpp"
#include "rotnum/rotation.hpp"
#include "rotnum/stairstep.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace rotnum;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && seconds > limit_seconds)
    out.require(false, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");
  std::printf("[%s] %2d %s (%.2f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, seconds,
              out.detail.empty() ? "" : ": ", out.detail.c_str());
  std::fflush(stdout);
  failures += out.ok ? 0 : 1;
}

std::string str(const Fraction& f) { return f.str_full(); }

std::vector<std::pair<Fraction, Fraction>> pairs(long long max_den) {
  std::vector<std::pair<Fraction, Fraction>> out;
  for (const auto& r : farey_half_open(max_den))
    for (const auto& s : farey_half_open(max_den)) out.emplace_back(r, s);
  return out;
}

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  for (;;) {
    std::vector<Letter> letters(1 + rng() % max_len);
    for (auto& l : letters) l = rng() % 2 ? Letter::a : Letter::b;
    Word w(letters);
    if (w.contains(Letter::a) && w.contains(Letter::b)) return w;
  }
}

Fraction random_fraction(std::mt19937_64& rng, long long max_den) {
  long long q = 1 + static_cast<long long>(rng() % max_den);
  return Fraction(static_cast<long long>(rng() % q), q);
}

std::string run_cli(const std::string& args) {
  const std::string command = std::string(ROTNUM_CLI) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + command);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  if (pclose(pipe) != 0) throw std::runtime_error("nonzero exit from " + command);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main() {
  criterion(1, "worked example R(ab,2/3,1/2) = 3/2, witness XXYXY, necklace values {1,3/2}", 1.0, [] {
    Outcome o;
    Word ab = parse_word("ab");
    auto e = evaluate_max(ab, Fraction(2, 3), Fraction(1, 2));
    o.require(e.value == Fraction(3, 2), "value " + str(e.value));
    o.require(e.witness && e.witness->str() == "XXYXY", "witness");
    std::set<Fraction> values;
    for (const auto& n : enumerate_necklaces(3, 2))
      values.insert(word_rotation_number(ab, Fraction(2, 3), Fraction(1, 2), n).value);
    o.require(values == std::set<Fraction>{Fraction(1), Fraction(3, 2)}, "per-necklace values");
    return o;
  });

  criterion(2, "ab: necklace enumeration equals the closed formula, denominators <= 8", 120.0, [] {
    Outcome o;
    Word ab = parse_word("ab");
    std::size_t n = 0;
    for (auto [r, s] : pairs(8)) {
      o.require(R_positive(ab, r, s) == R_ab_formula(r, s), "mismatch at " + str(r) + ", " + str(s));
      ++n;
    }
    o.detail = o.ok ? std::to_string(n) + " pairs" : o.detail;
    return o;
  });

  criterion(3, "duality r(ab) + R_ab(complement) = 2, denominators <= 6", 0, [] {
    Outcome o;
    Word ab = parse_word("ab");
    for (auto [r, s] : pairs(6)) {
      const long long q1 = r.den64(), q2 = s.den64();
      const Fraction sum = r_min_positive(ab, r, s) +
                           R_ab_formula(Fraction(q1 - r.num64() - 1, q1), Fraction(q2 - s.num64() - 1, q2));
      o.require(sum == Fraction(2), "at " + str(r) + ", " + str(s));
    }
    return o;
  });

  criterion(4, "denominator bound den R <= min(q1,q2) for ab, abaab, aabab, denominators <= 7", 0, [] {
    Outcome o;
    for (const char* text : {"ab", "abaab", "aabab"}) {
      Word w = parse_word(text);
      for (auto [r, s] : pairs(7))
        o.require(R_positive(w, r, s).den64() <= std::min(r.den64(), s.den64()),
                  std::string(text) + " at " + str(r) + ", " + str(s));
    }
    return o;
  });

  criterion(5, "property suite on random positive words (length <= 8, denominators <= 5)", 0, [] {
    Outcome o;
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 200 && o.ok; ++trial) {
      Word w = random_word(rng, 8);
      Fraction r = random_fraction(rng, 5), s = random_fraction(rng, 5), r2 = random_fraction(rng, 5);
      const std::string at = w.str() + " " + str(r) + " " + str(s);
      const HCounts h = h_counts(w);
      const Fraction v = R_positive(w, r, s);
      o.require(R_positive(w, r + Fraction(1), s - Fraction(2)) == v + Fraction(h.a - 2 * h.b), "periodicity " + at);
      o.require(R_positive(reverse(w), r, s) == v, "reversal " + at);
      const Fraction lo = std::min(r, r2), hi = std::max(r, r2);
      o.require(R_positive(w, lo, s) <= R_positive(w, hi, s), "monotonicity " + at);
      o.require(counting_bound(w, r, s).satisfied, "counting bound " + at);
      o.require(v >= Fraction(h.a) * r + Fraction(h.b) * s, "linear lower bound " + at);
      if (trial % 4 == 0) {
        o.require(stability_bump_check(w, r, s, Letter::a).satisfied, "bump a " + at);
        o.require(stability_bump_check(w, r, s, Letter::b).satisfied, "bump b " + at);
      }
    }
    return o;
  });

  criterion(6, "stairstep: examples, fringe (q-1)/q, lock form = LP path (abaab, q <= 7), achievement", 0, [] {
    Outcome o;
    Word ab = parse_word("ab"), w = parse_word("abaab");
    const Fraction t = stairstep_threshold(ab, Fraction(1, 2), Fraction(3, 2));
    o.require(t == Fraction(1, 2), "threshold(ab,1/2,3/2) = " + str(t));
    o.require(R_positive(ab, Fraction(1, 2), t) == Fraction(3, 2), "achievement for ab");
    for (long long q = 1; q <= 9; ++q) {
      o.require(fringe_threshold(ab, q) == Fraction(q - 1, q), "ab fringe q=" + std::to_string(q));
      if (std::gcd(3LL, q) == 1)
        o.require(fringe_threshold(w, q) == Fraction(q - 1, q), "abaab fringe q=" + std::to_string(q));
    }
    ThresholdOptions unrestricted;
    unrestricted.lock_periodic = false;
    std::size_t locks = 0;
    for (long long q = 2; q <= 7; ++q)
      for (long long p = 1; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const Fraction r(p, q);
        Staircase sc = staircase(w, r);
        for (const auto& step : sc.steps) {
          const std::string at = str(r) + " value " + str(step.value);
          o.require(R_positive(w, r, step.threshold) == step.value, "achievement " + at);
          const long long c = step.value.num64();
          if (step.value.den64() != q || std::gcd(c, q) != 1) continue;
          ++locks;
          auto lp = threshold_search(w, r, step.value, q <= 3 ? unrestricted : ThresholdOptions{});
          o.require(lp.threshold && lp.witness, "LP path found nothing " + at);
          if (!lp.threshold) continue;
          o.require(lock_threshold(w, r, step.value) == *lp.threshold, "lock vs LP " + at);
          // The witness partition's own LP, solved by the exact simplex.
          const auto blocks_once = application_blocks(w);
          std::vector<Block> blocks;
          for (long long k = 0; k < q; ++k) blocks.insert(blocks.end(), blocks_once.begin(), blocks_once.end());
          const Fraction u = min_u_for_system(build_interval_system(blocks, p, q, *lp.witness));
          o.require(u == *lp.threshold, "simplex on witness " + at + " gives " + str(u));
        }
      }
    o.require(locks >= 10, "only " + std::to_string(locks) + " lock instances");
    if (o.ok) o.detail = std::to_string(locks) + " lock instances";
    return o;
  });

  criterion(7, "staircase(ab,p/q) agrees with R at every sample of denominator <= q^2, q <= 6", 0, [] {
    Outcome o;
    EvalOptions big;
    big.max_necklace_size = 48;
    Word ab = parse_word("ab");
    std::size_t samples = 0;
    for (long long q = 1; q <= 6; ++q)
      for (long long p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const Fraction r(p, q);
        Staircase sc = staircase(ab, r);
        auto check = verify_staircase(sc, q * q, [&](const Fraction& t) { return R_positive(ab, r, t, big); });
        o.require(check.consistent, "r = " + str(r) + " at t = " + (check.mismatch ? str(*check.mismatch) : "?"));
        samples += check.samples;
      }
    if (o.ok) o.detail = std::to_string(samples) + " samples";
    return o;
  });

  criterion(8, "slippery scan abaab, denominators <= 8: |R - 3r - 2s| <= 2/q, no violations", 600.0, [] {
    Outcome o;
    auto scan = slippery_scan(parse_word("abaab"), 8);
    o.require(scan.violations.empty(), std::to_string(scan.violations.size()) + " violations");
    for (auto [q, dev] : scan.max_deviation_by_q())
      o.require(dev <= Fraction(2, q), "q=" + std::to_string(q) + " max deviation " + str(dev));
    if (o.ok) o.detail = std::to_string(scan.points.size()) + " cells";
    return o;
  });

  criterion(9, "rigid limits: ab(1/3,1/2) -> 1, abAB(1/2,1/3) -> 0, abaab special value 5/2", 0, [] {
    Outcome o;
    auto cusp = R_rigid(parse_word("ab"), Fraction(1, 3), Fraction(1, 2));
    o.require(cusp.status == LimitStatus::stabilized && cusp.value == Fraction(1) && cusp.k <= 6,
              "ab: " + str(cusp.value) + " " + to_string(cusp.status));
    auto comm = R_rigid(parse_word("abAB"), Fraction(1, 2), Fraction(1, 3));
    o.require(comm.status == LimitStatus::stabilized && comm.value == Fraction(0),
              "abAB: " + str(comm.value) + " " + to_string(comm.status));
    Word w = parse_word("abaab");
    auto special = rigid_special_values(w, Fraction(1, 2), Fraction(1, 2));
    o.require(special && *special == Fraction(5, 2), "special value");
    auto half = R_rigid(w, Fraction(1, 2), Fraction(1, 2));
    for (std::size_t i = 1; i < half.trace.size(); ++i)
      o.require(half.trace[i - 1].second <= half.trace[i].second, "trace not monotone");
    o.require(special && half.value <= *special, "approximant above the special value");
    o.require(special && half.linear_value.value_or(half.value) == *special, "linear value differs from special value");
    if (o.ok)
      o.detail = "abaab approximants reach " + str(half.value) + " (" + to_string(half.status) + "), limit 5/2";
    return o;
  });

  criterion(10, "R(abaab, 1/2-, t) matches the published case split at five t", 0, [] {
    Outcome o;
    auto formula = [](const Fraction& two_t) -> std::optional<Fraction> {
      for (long long p = 1; p <= 100; ++p) {
        if (p > 1 && two_t >= Fraction(p + 1, 2 * p + 1) && two_t < Fraction(p, 2 * p - 1))
          return Fraction(2) + Fraction(1, 2 * p + 1);
        if (two_t >= Fraction(2 * p, 2 * p + 1) && two_t < Fraction(2 * p + 2, 2 * p + 3))
          return Fraction(2) + Fraction(p, 2 * p + 1);
      }
      return std::nullopt;
    };
    Word w = parse_word("abaab");
    std::string seen;
    for (const auto& t : {Fraction(1, 3), Fraction(2, 5), Fraction(2, 7), Fraction(3, 8), Fraction(3, 7)}) {
      auto expected = formula(Fraction(2) * t);
      const Fraction got = R_left_limit_first(w, Fraction(1, 2), t).value;
      o.require(expected && *expected == got, "t = " + str(t) + " got " + str(got));
      seen += (seen.empty() ? "" : ", ") + str(t) + " -> " + str(got);
    }
    o.require(R_left_limit_first(w, Fraction(1, 2), Fraction(2, 5)).value == Fraction(12, 5), "12/5 step");
    if (o.ok) o.detail = seen;
    return o;
  });

  criterion(11, "interval game: recursion = simulator on the grid <= 10, (7/10,1/2) via (2,1), 1000 IFS samples", 300.0, [] {
    Outcome o;
    GameSolver solver(12, 1);
    std::size_t agree = 0;
    for (const auto& t : farey_sequence(10))
      for (const auto& u : farey_sequence(10)) {
        if (t.sign() == 0 || u.sign() == 0 || t == Fraction(1) || u == Fraction(1)) continue;
        GamePoint p(t, u);
        const bool in_u = solver.solve(p)->status == GameStatus::in_u;
        o.require(in_u == simulate_game(p, 200).has_value(), "disagree at " + str(t) + ", " + str(u));
        ++agree;
      }
    auto v = solver.solve(GamePoint(Fraction(7, 10), Fraction(1, 2)));
    o.require(v->status == GameStatus::in_u && v->m == 1 && v->triangle && *v->triangle == Triangle{2, 1},
              "(7/10,1/2) not certified by triangle (2,1)");
    std::size_t certified = 0;
    for (const auto& p : ifs_complement_sample(1000, 6))
      certified += solver.solve(p)->status == GameStatus::in_u;
    o.require(certified == 0, std::to_string(certified) + " IFS samples certified");
    if (o.ok) o.detail = std::to_string(agree) + " grid points, m_max 12, depth 1";
    return o;
  });

  criterion(12, "isobar ab level 3/2, D = 4: extreme corner (1/2,1/2), two-sided corner checks", 0, [] {
    Outcome o;
    auto f = isobar_frontier(parse_word("ab"), Fraction(3, 2), 4);
    o.require(!f.empty() && f.corners.front().r == Fraction(1, 2) && f.corners.front().s == Fraction(1, 2),
              "extreme corner");
    for (const auto& c : f.corners)
      o.require(c.at_corner_ok && c.below_ok, "corner " + str(c.r) + ", " + str(c.s));
    return o;
  });

  criterion(13, "CLI golden files: grid ab 5 csv, staircase abaab 1/2, game 7/10 1/2, threads 1/2/4", 0, [] {
    Outcome o;
    const std::string golden = GOLDEN_DIR;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"grid --word ab --max-den 5 --format csv", "grid_ab_5.csv"},
        {"staircase --word abaab --r 1/2", "staircase_abaab_1_2.json"},
        {"game --t 7/10 --u 1/2", "game_7_10_1_2.json"},
    };
    for (const auto& [args, file] : cases) {
      const std::string expected = read_file(golden + "/" + file);
      for (int threads : {1, 2, 4})
        for (int rep = 0; rep < 2; ++rep)
          o.require(run_cli(args + " --threads " + std::to_string(threads)) == expected,
                    file + " differs at threads " + std::to_string(threads));
    }
    return o;
  });

  std::printf("%d of 13 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
