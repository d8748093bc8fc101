#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace rotnum {

using BigInt = boost::multiprecision::cpp_int;

/// Exact reduced rational with arbitrary-precision numerator and denominator.
/// The denominator is always positive and gcd(num, den) == 1.
class Fraction {
 public:
  Fraction() = default;
  Fraction(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Fraction(const BigInt& value) : value_(value) {}
  Fraction(const BigInt& num, const BigInt& den);
  Fraction(long long num, long long den) : Fraction(BigInt(num), BigInt(den)) {}

  /// Accepts "p", "p/q", "-p/q" (q > 0; the result is reduced).
  static Fraction parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  /// Denominator as a machine integer; throws CapExceeded if it does not fit.
  std::int64_t den64() const;
  std::int64_t num64() const;

  BigInt floor() const;
  BigInt ceil() const;
  Fraction frac() const { return *this - Fraction(floor()); }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// "p/q", with "/1" omitted for integers.
  std::string str() const;
  /// Always "p/q".
  std::string str_full() const;

  Fraction& operator+=(const Fraction& o) { value_ += o.value_; return *this; }
  Fraction& operator-=(const Fraction& o) { value_ -= o.value_; return *this; }
  Fraction& operator*=(const Fraction& o) { value_ *= o.value_; return *this; }
  Fraction& operator/=(const Fraction& o);

  friend Fraction operator+(Fraction a, const Fraction& b) { return a += b; }
  friend Fraction operator-(Fraction a, const Fraction& b) { return a -= b; }
  friend Fraction operator*(Fraction a, const Fraction& b) { return a *= b; }
  friend Fraction operator/(Fraction a, const Fraction& b) { return a /= b; }
  Fraction operator-() const { Fraction r; r.value_ = -value_; return r; }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    int c = a.value_.compare(b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.str(); }

 private:
  boost::multiprecision::cpp_rational value_{0};
};

inline Fraction abs(const Fraction& f) { return f.sign() < 0 ? -f : f; }

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace rotnum
