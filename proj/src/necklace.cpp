#include "rotnum/necklace.hpp"

#include "rotnum/errors.hpp"

#include <algorithm>

namespace rotnum {

namespace {

long long floor_div(long long a, long long b) {
  long long q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}

long long floor_mod(long long a, long long b) { return a - floor_div(a, b) * b; }

std::vector<std::uint8_t> least_rotation(const std::vector<std::uint8_t>& p) {
  std::vector<std::uint8_t> best = p;
  std::vector<std::uint8_t> candidate(p.size());
  for (std::size_t shift = 1; shift < p.size(); ++shift) {
    std::rotate_copy(p.begin(), p.begin() + static_cast<long>(shift), p.end(), candidate.begin());
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace

Necklace::Necklace(std::vector<std::uint8_t> pattern) {
  for (auto c : pattern) {
    if (c == X) ++q1_;
    else if (c == Y) ++q2_;
    else throw DomainError("necklace letters must be X or Y");
  }
  if (q1_ == 0 || q2_ == 0) throw DomainError("necklace needs at least one X and one Y");
  pattern_ = least_rotation(pattern);
}

Necklace Necklace::parse(std::string_view text) {
  std::vector<std::uint8_t> pattern;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'X') pattern.push_back(X);
    else if (text[i] == 'Y') pattern.push_back(Y);
    else throw ParseError(std::string("invalid necklace letter '") + text[i] + "'", i);
  }
  return Necklace(std::move(pattern));
}

std::string Necklace::str() const {
  std::string out;
  for (auto c : pattern_) out.push_back(c == X ? 'X' : 'Y');
  return out;
}

namespace {

// FKM prenecklace generation restricted to fixed content.
class NecklaceGenerator {
 public:
  NecklaceGenerator(int q1, int q2, const NecklaceVisitor& visit)
      : n_(q1 + q2), limit_{q1, q2}, word_(static_cast<std::size_t>(n_) + 1, 0), visit_(visit) {}

  std::size_t run() {
    generate(1, 1);
    return count_;
  }

 private:
  void place(int t, int p, std::uint8_t letter) {
    if (used_[letter] == limit_[letter]) return;
    word_[static_cast<std::size_t>(t)] = letter;
    ++used_[letter];
    generate(t + 1, p);
    --used_[letter];
  }

  void generate(int t, int p) {
    if (t > n_) {
      if (n_ % p == 0) {
        ++count_;
        visit_(std::span<const std::uint8_t>(word_.data() + 1, static_cast<std::size_t>(n_)));
      }
      return;
    }
    std::uint8_t inherited = word_[static_cast<std::size_t>(t - p)];
    place(t, p, inherited);
    if (inherited == Necklace::X) place(t, t, Necklace::Y);
  }

  int n_;
  int limit_[2];
  int used_[2] = {0, 0};
  std::vector<std::uint8_t> word_;
  const NecklaceVisitor& visit_;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t for_each_necklace(int q1, int q2, const NecklaceVisitor& visit) {
  if (q1 < 1 || q2 < 1) throw DomainError("for_each_necklace: q1, q2 must be positive");
  return NecklaceGenerator(q1, q2, visit).run();
}

std::vector<Necklace> enumerate_necklaces(int q1, int q2) {
  std::vector<Necklace> out;
  for_each_necklace(q1, q2, [&](std::span<const std::uint8_t> p) {
    out.emplace_back(std::vector<std::uint8_t>(p.begin(), p.end()));
  });
  return out;
}

HopDynamics::HopDynamics(std::span<const std::uint8_t> pattern, long long p1, long long p2)
    : length_(static_cast<int>(pattern.size())) {
  x_.step = p1;
  y_.step = p2;
  x_.before.resize(pattern.size() + 1);
  y_.before.resize(pattern.size() + 1);
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    x_.before[i] = static_cast<long long>(x_.positions.size());
    y_.before[i] = static_cast<long long>(y_.positions.size());
    (pattern[i] == Necklace::X ? x_ : y_).positions.push_back(static_cast<long long>(i));
  }
  if (x_.positions.empty() || y_.positions.empty())
    throw DomainError("HopDynamics: pattern needs both X and Y");
}

LiftedPosition HopDynamics::hop(const Track& track, LiftedPosition pos, long long times) const {
  if (times <= 0) return pos;
  const long long residue = floor_mod(pos.index, length_);
  const long long winding = floor_div(pos.index, length_);
  const auto count = static_cast<long long>(track.positions.size());
  const long long rank = track.before[static_cast<std::size_t>(residue)] + times * track.step;
  const long long wraps = floor_div(rank, count);
  return {track.positions[static_cast<std::size_t>(rank - wraps * count)] +
          (wraps + winding) * length_};
}

LiftedPosition HopDynamics::hop_a(LiftedPosition pos, long long times) const {
  return hop(x_, pos, times);
}

LiftedPosition HopDynamics::hop_b(LiftedPosition pos, long long times) const {
  return hop(y_, pos, times);
}

LiftedPosition HopDynamics::apply(const Word& w, LiftedPosition pos) const {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (*it == Letter::a) pos = hop_a(pos);
    else if (*it == Letter::b) pos = hop_b(pos);
    else throw DomainError("HopDynamics::apply: word must be positive");
  }
  return pos;
}

NecklaceRotation word_rotation_number(const Word& w, const Fraction& r, const Fraction& s,
                                      const Necklace& necklace) {
  if (!w.is_positive() || w.empty()) throw DomainError("word_rotation_number: word must be positive");
  if (r.sign() < 0 || r >= Fraction(1) || s.sign() < 0 || s >= Fraction(1))
    throw DomainError("word_rotation_number: arguments must lie in [0, 1)");
  if (r.den64() != necklace.q1() || s.den64() != necklace.q2())
    throw DomainError("word_rotation_number: necklace " + necklace.str() +
                      " is not admissible for denominators " + r.denominator().str() + ", " +
                      s.denominator().str());
  HopDynamics dyn(necklace.pattern(), r.num64(), s.num64());
  const int length = dyn.size();
  std::vector<long long> first_step(static_cast<std::size_t>(length), -1);
  std::vector<long long> first_index(static_cast<std::size_t>(length), 0);
  LiftedPosition pos{0};
  for (long long step = 0;; ++step) {
    auto residue = static_cast<std::size_t>(floor_mod(pos.index, length));
    if (first_step[residue] >= 0) {
      long long period = step - first_step[residue];
      return {Fraction(pos.index - first_index[residue], static_cast<long long>(length) * period),
              period};
    }
    first_step[residue] = step;
    first_index[residue] = pos.index;
    pos = dyn.apply(w, pos);
  }
}

}  // namespace rotnum
