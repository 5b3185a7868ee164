#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "flowlab/errors.hpp"

namespace flowlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always kept in canonical form: den > 0 and
// gcd(|num|, den) == 1; zero is 0/1. No rounding anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt v) : num_(std::move(v)), den_(1) {}
  Rational(BigInt num, BigInt den);

  static Rational fromString(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool isZero() const { return num_.is_zero(); }
  bool isInteger() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
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

  Rational abs() const { return num_ < 0 ? -*this : *this; }
  Rational inverse() const;

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  void assertCanonical() const;

 private:
  BigInt num_;
  BigInt den_;
  void normalize();
};

Rational rational_pow2(int exponent);  // 2^e for e >= 0

// Largest g such that every value is a positive integer multiple of g,
// i.e. gcd(numerators) / lcm(denominators) over canonical forms.
Rational common_granularity(const std::vector<Rational>& values);

}  // namespace flowlab
