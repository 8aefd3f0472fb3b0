#include "eiscomp/rational.hpp"

#include <limits>
#include <numeric>

namespace eiscomp {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<long long>(v);
}

}  // namespace

Rational Rational::from_checked(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Rational r;
  r.num_ = narrow(num);
  r.den_ = narrow(den);
  return r;
}

Rational::Rational(long long num, long long den) {
  *this = from_checked(num, den);
}

Rational& Rational::operator+=(const Rational& o) {
  *this = from_checked((__int128)num_ * o.den_ + (__int128)o.num_ * den_,
                       (__int128)den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = from_checked((__int128)num_ * o.den_ - (__int128)o.num_ * den_,
                       (__int128)den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = from_checked((__int128)num_ * o.num_, (__int128)den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("rational division by zero");
  *this = from_checked((__int128)num_ * o.den_, (__int128)den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  __int128 lhs = (__int128)a.num_ * b.den_;
  __int128 rhs = (__int128)b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::pow(const Rational& b, long long e) {
  if (b.is_zero() && e < 0) throw std::domain_error("inverse of zero");
  Rational base = e < 0 ? Rational(b.den_, b.num_) : b;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1
                               : static_cast<unsigned long long>(e);
  Rational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace eiscomp
