#pragma once

#include "rotnum/fraction.hpp"
#include "rotnum/necklace.hpp"
#include "rotnum/word.hpp"

#include <optional>
#include <utility>

namespace rotnum {

struct EvalOptions {
  /// Largest q1 + q2 for which necklaces are enumerated.
  int max_necklace_size = 24;
};

struct Evaluation {
  Fraction value;
  /// First necklace (enumeration order) attaining the extremum; empty when
  /// the word is a power of one generator.
  std::optional<Necklace> witness;
  long long witness_period = 0;
  std::size_t necklaces = 0;
};

/// R(w, r, s) for positive w and rational r, s, with a witness necklace.
Evaluation evaluate_max(const Word& w, const Fraction& r, const Fraction& s,
                        const EvalOptions& opts = {});
/// r(w, r, s): the minimum over necklaces.
Evaluation evaluate_min(const Word& w, const Fraction& r, const Fraction& s,
                        const EvalOptions& opts = {});

inline Fraction R_positive(const Word& w, const Fraction& r, const Fraction& s,
                           const EvalOptions& opts = {}) {
  return evaluate_max(w, r, s, opts).value;
}

inline Fraction r_min_positive(const Word& w, const Fraction& r, const Fraction& s,
                               const EvalOptions& opts = {}) {
  return evaluate_min(w, r, s, opts).value;
}

/// The interval X(w, r, s) of attainable rotation numbers: [-R(w,-r,-s), R(w,r,s)].
std::pair<Fraction, Fraction> x_interval(const Word& w, const Fraction& r, const Fraction& s,
                                         const EvalOptions& opts = {});

}  // namespace rotnum
