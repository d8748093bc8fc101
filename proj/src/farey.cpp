#include "rotnum/farey.hpp"

#include "rotnum/errors.hpp"

namespace rotnum {

std::vector<Fraction> farey_sequence(long long n) {
  if (n < 1) throw DomainError("farey_sequence: order must be positive");
  std::vector<Fraction> out;
  long long a = 0, b = 1, c = 1, d = n;
  out.emplace_back(a, b);
  while (c <= n) {
    long long k = (n + b) / d;
    long long next_c = k * c - a;
    long long next_d = k * d - b;
    a = c;
    b = d;
    c = next_c;
    d = next_d;
    out.emplace_back(a, b);
  }
  return out;
}

std::vector<Fraction> farey_half_open(long long n) {
  auto out = farey_sequence(n);
  out.pop_back();
  return out;
}

}  // namespace rotnum
