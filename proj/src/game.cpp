#include "rotnum/game.hpp"

#include "rotnum/errors.hpp"
#include "rotnum/parallel.hpp"

#include <algorithm>
#include <random>

namespace rotnum {

GamePoint::GamePoint(Fraction t_, Fraction u_) : t(std::move(t_)), u(std::move(u_)) {
  if (t.sign() <= 0 || t >= Fraction(1) || u.sign() <= 0 || u >= Fraction(1))
    throw DomainError("GamePoint: coordinates must lie in (0, 1)");
}

const char* to_string(GameStatus status) {
  switch (status) {
    case GameStatus::in_u: return "InU";
    case GameStatus::not_in_u: return "NotInU";
    case GameStatus::unknown: return "Unknown";
  }
  return "?";
}

std::optional<Triangle> in_U1(const GamePoint& p) {
  // Triangle (n, i) is 1/n < t < 1/(n-1), 1 - (n-i) t < u < i t; for fixed n
  // only the least i with i t > u can qualify.
  const long long first = static_cast<long long>((Fraction(1) / p.t).ceil());
  for (long long n = std::max<long long>(first, 2); n <= first + 1; ++n) {
    if (p.t <= Fraction(1, n) || (n > 2 && p.t >= Fraction(1, n - 1))) continue;
    const long long i = static_cast<long long>((p.u / p.t).floor()) + 1;
    if (i < 1 || i > n - 1) continue;
    if (Fraction(n - i) * p.t > Fraction(1) - p.u) return Triangle{n, i};
  }
  return std::nullopt;
}

std::shared_ptr<const GameVerdict> GameSolver::solve(const GamePoint& p, int depth) {
  const auto key = std::make_pair(p, depth);
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  auto v = std::make_shared<GameVerdict>();
  v->point = p;
  if (auto tri = in_U1(p)) {
    v->status = GameStatus::in_u;
    v->m = 1;
    v->triangle = tri;
  } else if (depth > 0) {
    for (long long m = 2; m <= m_max_ && v->status != GameStatus::in_u; ++m) {
      std::vector<std::shared_ptr<const GameVerdict>> children;
      for (long long i = 0; i < m; ++i) {
        auto child = solve(GamePoint(p.t / Fraction(m), (p.u + Fraction(i)) / Fraction(m)), depth - 1);
        if (child->status != GameStatus::in_u) break;
        children.push_back(std::move(child));
      }
      if (static_cast<long long>(children.size()) == m) {
        v->status = GameStatus::in_u;
        v->m = m;
        v->children = std::move(children);
      }
    }
  }
  if (v->status != GameStatus::in_u) v->depth = depth;
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(key, std::move(v)).first->second;
}

GameVerdict in_U(const GamePoint& p, long long m_max, int depth_max) {
  GameSolver solver(m_max, depth_max);
  return *solver.solve(p);
}

std::optional<GameWin> simulate_game(const GamePoint& p, long long n_max) {
  // Rotations commute with translation, so I = [0, L]. psi^n(L) = L + n t lands
  // inside I iff 1 - frac(n t) < L. phi(I) misses I iff L < u < 1 - L, and
  // phi(I^-) stays out of psi^j(I) iff L < frac(u - j t).
  Fraction room = std::min(p.u, Fraction(1) - p.u);
  for (long long n = 1; n <= n_max; ++n) {
    room = std::min(room, (p.u - Fraction(n) * p.t).frac());
    const Fraction shift = (Fraction(n) * p.t).frac();
    if (shift.sign() == 0) continue;
    const Fraction gap = Fraction(1) - shift;
    if (gap < room) return GameWin{n, Fraction(0), (gap + room) / Fraction(2)};
  }
  return std::nullopt;
}

GamePoint ifs_map(const GamePoint& p, long long n, bool upper) {
  const Fraction denom = p.t + Fraction(n + 1);
  const Fraction x = (p.t + Fraction(n)) / denom;
  const Fraction y = upper ? (p.t + p.u + Fraction(n)) / denom : p.u / denom;
  GamePoint out;
  out.t = x;
  out.u = y;
  return out;
}

std::vector<GamePoint> ifs_complement_sample(std::size_t n_points, int word_length,
                                             const IfsOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long long> pick_n(0, opts.n_cap);
  std::bernoulli_distribution pick_upper(0.5);
  std::vector<GamePoint> out;
  out.reserve(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    GamePoint p = opts.start;
    for (int step = 0; step < word_length; ++step) {
      const long long n = pick_n(rng);
      p = ifs_map(p, n, pick_upper(rng));
    }
    out.push_back(p);
  }
  return out;
}

Raster render_U(int resolution, long long m_max, int depth_max, unsigned threads,
                std::size_t ifs_points, int ifs_length) {
  if (resolution < 1) throw DomainError("render_U: resolution must be positive");
  Raster img;
  img.width = img.height = resolution;
  img.pixels.assign(static_cast<std::size_t>(resolution) * resolution, kUnknown);
  GameSolver solver(m_max, depth_max);
  const long long two_r = 2LL * resolution;
  parallel_for(img.pixels.size(), threads, [&](std::size_t k) {
    const long long row = static_cast<long long>(k) / resolution;
    const long long col = static_cast<long long>(k) % resolution;
    GamePoint p(Fraction(2 * col + 1, two_r), Fraction(2 * (resolution - 1 - row) + 1, two_r));
    if (solver.solve(p)->status == GameStatus::in_u) img.pixels[k] = kInU;
  });
  for (const auto& p : ifs_complement_sample(ifs_points, ifs_length)) {
    const auto col = static_cast<long long>((p.t * Fraction(resolution)).floor());
    const auto up = static_cast<long long>((p.u * Fraction(resolution)).floor());
    const std::size_t k = static_cast<std::size_t>((resolution - 1 - up) * resolution + col);
    if (img.pixels[k] == kUnknown) img.pixels[k] = kAttractor;
  }
  return img;
}

}  // namespace rotnum
