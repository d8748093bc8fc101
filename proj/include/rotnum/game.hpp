#pragma once

#include "rotnum/fraction.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace rotnum {

/// Rigid rotations: psi through t, the enemy phi through u. Both in (0, 1).
struct GamePoint {
  Fraction t, u;

  GamePoint() = default;
  GamePoint(Fraction t_, Fraction u_);
  friend auto operator<=>(const GamePoint&, const GamePoint&) = default;
};

/// Open triangle with vertices (1/n, i/n), (1/(n-1), (i-1)/(n-1)), (1/(n-1), i/(n-1)).
struct Triangle {
  long long n = 0;
  long long i = 0;
  friend bool operator==(const Triangle&, const Triangle&) = default;
};

std::optional<Triangle> in_U1(const GamePoint& p);

enum class GameStatus { in_u, not_in_u, unknown };

const char* to_string(GameStatus status);

struct GameVerdict {
  GameStatus status = GameStatus::unknown;
  GamePoint point;
  /// 1 for a triangle hit, else the scaling factor whose m copies are all in U.
  long long m = 0;
  std::optional<Triangle> triangle;
  /// Verdicts for (t/m, (u+i)/m), i = 0..m-1.
  std::vector<std::shared_ptr<const GameVerdict>> children;
  /// Recursion depth left when the search gave up (unknown only).
  int depth = 0;
  /// Reserved: the complement has no decision procedure here.
  bool certified = false;
};

/// Recursive membership in the winning region, memoized on exact keys.
/// Safe to share between threads.
class GameSolver {
 public:
  GameSolver(long long m_max, int depth_max) : m_max_(m_max), depth_max_(depth_max) {}

  std::shared_ptr<const GameVerdict> solve(const GamePoint& p) { return solve(p, depth_max_); }

 private:
  std::shared_ptr<const GameVerdict> solve(const GamePoint& p, int depth);

  long long m_max_;
  int depth_max_;
  std::mutex mutex_;
  std::map<std::pair<GamePoint, int>, std::shared_ptr<const GameVerdict>> memo_;
};

GameVerdict in_U(const GamePoint& p, long long m_max, int depth_max);

struct GameWin {
  long long n = 0;
  /// I = [lo, hi]: phi(I) misses I, phi(lo) avoids psi^i(I) for i <= n, and
  /// psi^n(hi) lies in the interior of I.
  Fraction lo, hi;
};

/// Searches n = 1..n_max for a winning interval of the rotation pair.
std::optional<GameWin> simulate_game(const GamePoint& p, long long n_max);

struct IfsOptions {
  long long n_cap = 12;
  std::uint64_t seed = 1;
  GamePoint start{Fraction(1, 2), Fraction(1, 2)};
};

/// (x, y) -> ((x+n)/(x+n+1), y/(x+n+1)) or ((x+n)/(x+n+1), (x+y+n)/(x+n+1)).
GamePoint ifs_map(const GamePoint& p, long long n, bool upper);

/// Images of the start point under random compositions of word_length maps.
std::vector<GamePoint> ifs_complement_sample(std::size_t n_points, int word_length,
                                             const IfsOptions& opts = {});

/// 8-bit gray raster, row 0 at the top (u near 1).
struct Raster {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;
};

constexpr std::uint8_t kInU = 255;
constexpr std::uint8_t kUnknown = 128;
constexpr std::uint8_t kAttractor = 0;

/// Verdicts at pixel centers; undecided pixels holding an IFS sample are
/// marked as attractor.
Raster render_U(int resolution, long long m_max, int depth_max, unsigned threads = 1,
                std::size_t ifs_points = 4096, int ifs_length = 8);

}  // namespace rotnum
