#pragma once

#include "rotnum/fraction.hpp"

#include <vector>

namespace rotnum {

/// Reduced fractions in [0, 1] with denominator <= n, increasing.
std::vector<Fraction> farey_sequence(long long n);

/// Reduced fractions in [0, 1) with denominator <= n, increasing.
std::vector<Fraction> farey_half_open(long long n);

}  // namespace rotnum
