#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/word.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rotnum {

/// Cyclic XY word with q1 X's and q2 Y's, stored as its lexicographically
/// least rotation (X < Y). Encodes the cyclic order of the a- and b-orbits.
class Necklace {
 public:
  static constexpr std::uint8_t X = 0;
  static constexpr std::uint8_t Y = 1;

  /// Canonicalizes `pattern`; throws DomainError on letters other than X/Y or
  /// when either letter is missing.
  explicit Necklace(std::vector<std::uint8_t> pattern);
  static Necklace parse(std::string_view text);

  int q1() const { return q1_; }
  int q2() const { return q2_; }
  int size() const { return static_cast<int>(pattern_.size()); }
  std::span<const std::uint8_t> pattern() const { return pattern_; }
  std::string str() const;

  friend bool operator==(const Necklace&, const Necklace&) = default;

 private:
  std::vector<std::uint8_t> pattern_;
  int q1_ = 0;
  int q2_ = 0;
};

using NecklaceVisitor = std::function<void(std::span<const std::uint8_t>)>;

/// Visits every admissible (q1, q2) necklace once, canonical representatives
/// in lexicographic order. Returns the number visited.
std::size_t for_each_necklace(int q1, int q2, const NecklaceVisitor& visit);

std::vector<Necklace> enumerate_necklaces(int q1, int q2);

/// Index on the universal cover of the cyclic word: index mod L is the
/// letter, index div L the winding (L = q1 + q2).
struct LiftedPosition {
  long long index = 0;
  friend auto operator<=>(const LiftedPosition&, const LiftedPosition&) = default;
};

/// Hop maps of a and b on the letters of a cyclic XY word: a moves right
/// until it has read p1 + 1 X's (counting the start), b likewise with Y's.
class HopDynamics {
 public:
  HopDynamics(std::span<const std::uint8_t> pattern, long long p1, long long p2);

  int size() const { return length_; }
  LiftedPosition hop_a(LiftedPosition pos, long long times = 1) const;
  LiftedPosition hop_b(LiftedPosition pos, long long times = 1) const;
  /// Applies a positive word, letters right to left.
  LiftedPosition apply(const Word& w, LiftedPosition pos) const;

 private:
  struct Track {
    std::vector<long long> positions;  // residues of this letter, increasing
    std::vector<long long> before;     // count of this letter in [0, rho)
    long long step = 0;                // p
  };
  LiftedPosition hop(const Track& track, LiftedPosition pos, long long times) const;

  int length_;
  Track x_;
  Track y_;
};

struct NecklaceRotation {
  Fraction value;
  long long period = 0;  ///< length of the periodic orbit of w on the letters
};

/// Rotation number of w on one necklace; r = p1/q1 and s = p2/q2 must be in
/// [0, 1) with denominators matching the necklace.
NecklaceRotation word_rotation_number(const Word& w, const Fraction& r, const Fraction& s,
                                      const Necklace& necklace);

}  // namespace rotnum
