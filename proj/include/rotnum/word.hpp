#pragma once

#include "rotnum/fraction.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rotnum {

enum class Letter : std::uint8_t { a, b, a_inv, b_inv };

constexpr Letter inverse(Letter l) {
  switch (l) {
    case Letter::a: return Letter::a_inv;
    case Letter::b: return Letter::b_inv;
    case Letter::a_inv: return Letter::a;
    case Letter::b_inv: return Letter::b;
  }
  return l;
}

constexpr char to_char(Letter l) {
  switch (l) {
    case Letter::a: return 'a';
    case Letter::b: return 'b';
    case Letter::a_inv: return 'A';
    case Letter::b_inv: return 'B';
  }
  return '?';
}

/// A freely reduced word in the free group on a, b. Inverses print as A, B.
class Word {
 public:
  Word() = default;
  /// Freely reduces `letters`.
  explicit Word(const std::vector<Letter>& letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool is_positive() const;
  bool contains(Letter l) const;
  /// Positive word that is a power of a single generator (a^k or b^k).
  bool is_generator_power() const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Parses text over {a, b, A, B}; uppercase is the inverse. Rejects input that
/// is empty or reduces to the identity.
Word parse_word(std::string_view text);

struct HCounts {
  long long a = 0;
  long long b = 0;
  friend bool operator==(const HCounts&, const HCounts&) = default;
};

/// Algebraic letter counts (inverses count -1).
HCounts h_counts(const Word& w);

struct Block {
  int alpha = 0;
  int beta = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Cyclic decomposition a^{alpha_1} b^{beta_1} ... a^{alpha_m} b^{beta_m}.
struct BlockForm {
  std::vector<Block> blocks;

  int m() const { return static_cast<int>(blocks.size()); }
  Word reassemble() const;
};

/// Rotates a positive word containing both letters to start at its first
/// a-block and splits it into maximal blocks.
BlockForm block_form(const Word& w);

bool cyclically_equal(const Word& u, const Word& v);

/// Longest run of `l` read cyclically.
int longest_cyclic_run(const Word& w, Letter l);

struct NormalizedArgs {
  Fraction r0;
  Fraction s0;
  BigInt offset;
};

/// r0 = frac(r), s0 = frac(s), offset = floor(r) h_a + floor(s) h_b, so that
/// R(w, r, s) = R(w, r0, s0) + offset.
NormalizedArgs normalize_args(const Word& w, const Fraction& r, const Fraction& s);

Word reverse(const Word& w);

/// Exchanges the generators a <-> b, so that R(w, r, s) = R(swap(w), s, r).
Word swap_generators(const Word& w);

struct Positivized {
  Word word;
  long long shift = 0;  ///< N in R(w, r-, s-) = R(word, r-, s-) - N
};

/// Replaces a^-1 by a^{q1-1} and b^-1 by b^{q2-1}.
Positivized positivize(const Word& w, long long q1, long long q2, long long p1, long long p2);

/// The endomorphism a -> a^{p1}, b -> b^{p2} on a positive word.
Word substitute_powers(const Word& w, int p1, int p2);

}  // namespace rotnum
