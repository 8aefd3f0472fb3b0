#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace eiscomp {

// Exact rational number on 64-bit integers, always in lowest terms with a
// positive denominator. Arithmetic goes through 128-bit intermediates and
// throws std::overflow_error if a reduced result leaves the 64-bit range.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(long long num, long long den);

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(-num_, den_); }
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // b^e with e possibly negative (requires b != 0).
  static Rational pow(const Rational& b, long long e);

  std::string str() const;  // "p/q", or "p" when q == 1

 private:
  static Rational from_checked(__int128 num, __int128 den);
  long long num_;
  long long den_;
};

}  // namespace eiscomp
