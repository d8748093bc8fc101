#include "rotnum/fraction.hpp"

#include "rotnum/errors.hpp"

#include <cctype>
#include <limits>

namespace rotnum {

Fraction::Fraction(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  value_ = boost::multiprecision::cpp_rational(num, den);
}

Fraction& Fraction::operator/=(const Fraction& o) {
  if (o.value_ == 0) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset, bool allow_sign) {
  if (text.empty()) throw ParseError("empty integer", offset);
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw ParseError("missing digits", offset + i);
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("invalid character '") + text[i] + "'", offset + i);
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::int64_t to_i64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw CapExceeded("integer does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_integer(text, 0, true));
  BigInt num = parse_integer(text.substr(0, slash), 0, true);
  BigInt den = parse_integer(text.substr(slash + 1), slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  return Fraction(num, den);
}

std::int64_t Fraction::den64() const { return to_i64(denominator()); }
std::int64_t Fraction::num64() const { return to_i64(numerator()); }

BigInt Fraction::floor() const {
  BigInt n = numerator(), d = denominator();
  BigInt q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Fraction::ceil() const {
  BigInt f = floor();
  return is_integer() ? f : BigInt(f + 1);
}

std::string Fraction::str() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::string Fraction::str_full() const { return numerator().str() + "/" + denominator().str(); }

BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  BigInt g = boost::multiprecision::gcd(a, b);
  BigInt r = a / g * b;
  return r < 0 ? BigInt(-r) : r;
}

}  // namespace rotnum
