#include "rotnum/word.hpp"

#include "rotnum/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rotnum {

Word::Word(const std::vector<Letter>& letters) {
  letters_.reserve(letters.size());
  for (Letter l : letters) {
    if (!letters_.empty() && letters_.back() == inverse(l))
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

bool Word::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](Letter l) { return l == Letter::a || l == Letter::b; });
}

bool Word::contains(Letter l) const {
  return std::find(letters_.begin(), letters_.end(), l) != letters_.end();
}

bool Word::is_generator_power() const {
  return is_positive() && !empty() && !(contains(Letter::a) && contains(Letter::b));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(to_char(l));
  return out;
}

Word parse_word(std::string_view text) {
  if (text.empty()) throw ParseError("empty word", 0);
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'a': letters.push_back(Letter::a); break;
      case 'b': letters.push_back(Letter::b); break;
      case 'A': letters.push_back(Letter::a_inv); break;
      case 'B': letters.push_back(Letter::b_inv); break;
      default: throw ParseError(std::string("invalid letter '") + text[i] + "'", i);
    }
  }
  Word w(letters);
  if (w.empty()) throw ParseError("word reduces to the identity", text.size());
  return w;
}

HCounts h_counts(const Word& w) {
  HCounts h;
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::a: ++h.a; break;
      case Letter::b: ++h.b; break;
      case Letter::a_inv: --h.a; break;
      case Letter::b_inv: --h.b; break;
    }
  }
  return h;
}

Word BlockForm::reassemble() const {
  std::vector<Letter> letters;
  for (const Block& blk : blocks) {
    letters.insert(letters.end(), blk.alpha, Letter::a);
    letters.insert(letters.end(), blk.beta, Letter::b);
  }
  return Word(letters);
}

BlockForm block_form(const Word& w) {
  if (!w.is_positive()) throw DomainError("block_form: word '" + w.str() + "' is not positive");
  if (!w.contains(Letter::a) || !w.contains(Letter::b))
    throw DomainError("block_form: word '" + w.str() + "' is a power of one generator");
  const auto& letters = w.letters();
  const std::size_t n = letters.size();
  std::size_t start = 0;
  while (!(letters[start] == Letter::a && letters[(start + n - 1) % n] == Letter::b)) ++start;

  BlockForm form;
  std::size_t k = 0;
  while (k < n) {
    Block blk;
    while (k < n && letters[(start + k) % n] == Letter::a) { ++blk.alpha; ++k; }
    while (k < n && letters[(start + k) % n] == Letter::b) { ++blk.beta; ++k; }
    form.blocks.push_back(blk);
  }
  return form;
}

bool cyclically_equal(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  std::vector<Letter> doubled = u.letters();
  doubled.insert(doubled.end(), u.letters().begin(), u.letters().end());
  return std::search(doubled.begin(), doubled.end(), v.letters().begin(), v.letters().end()) !=
         doubled.end();
}

int longest_cyclic_run(const Word& w, Letter l) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  if (std::all_of(w.letters().begin(), w.letters().end(), [l](Letter x) { return x == l; }))
    return static_cast<int>(n);
  int best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] != l || w[(i + n - 1) % n] == l) continue;
    int run = 0;
    while (w[(i + run) % n] == l) ++run;
    best = std::max(best, run);
  }
  return best;
}

NormalizedArgs normalize_args(const Word& w, const Fraction& r, const Fraction& s) {
  HCounts h = h_counts(w);
  BigInt fr = r.floor(), fs = s.floor();
  return {r - Fraction(fr), s - Fraction(fs), fr * h.a + fs * h.b};
}

Word reverse(const Word& w) {
  std::vector<Letter> letters(w.letters().rbegin(), w.letters().rend());
  return Word(letters);
}

Word swap_generators(const Word& w) {
  std::vector<Letter> letters;
  letters.reserve(w.size());
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::a: letters.push_back(Letter::b); break;
      case Letter::b: letters.push_back(Letter::a); break;
      case Letter::a_inv: letters.push_back(Letter::b_inv); break;
      case Letter::b_inv: letters.push_back(Letter::a_inv); break;
    }
  }
  return Word(letters);
}

Positivized positivize(const Word& w, long long q1, long long q2, long long p1, long long p2) {
  if (q1 < 1 || q2 < 1) throw DomainError("positivize: denominators must be positive");
  if (std::gcd(p1, q1) != 1 || std::gcd(p2, q2) != 1)
    throw DomainError("positivize: fractions must be reduced");
  std::vector<Letter> letters;
  Positivized out;
  for (Letter l : w.letters()) {
    switch (l) {
      case Letter::a:
      case Letter::b: letters.push_back(l); break;
      case Letter::a_inv:
        letters.insert(letters.end(), static_cast<std::size_t>(q1 - 1), Letter::a);
        out.shift += p1;
        break;
      case Letter::b_inv:
        letters.insert(letters.end(), static_cast<std::size_t>(q2 - 1), Letter::b);
        out.shift += p2;
        break;
    }
  }
  out.word = Word(letters);
  return out;
}

Word substitute_powers(const Word& w, int p1, int p2) {
  if (!w.is_positive()) throw DomainError("substitute_powers: word must be positive");
  if (p1 < 1 || p2 < 1) throw DomainError("substitute_powers: powers must be positive");
  std::vector<Letter> letters;
  for (Letter l : w.letters()) letters.insert(letters.end(), l == Letter::a ? p1 : p2, l);
  return Word(letters);
}

}  // namespace rotnum
