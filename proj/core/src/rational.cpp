#include "flowlab/rational.hpp"

#include "flowlab/capacity.hpp"

namespace flowlab {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(Errc::DivisionByZero, "rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

void Rational::assertCanonical() const {
  assert(den_ > 0);
  assert(num_.is_zero() ? den_ == 1
                        : mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_) == 1);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  // gcd-of-denominators form keeps intermediates small
  BigInt g = mp::gcd(den_, o.den_);
  if (g == 1) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  } else {
    BigInt t = num_ * (o.den_ / g) + o.num_ * (den_ / g);
    BigInt d = den_ / g * o.den_;
    num_ = std::move(t);
    den_ = std::move(d);
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  BigInt g1 = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, o.den_);
  BigInt g2 = mp::gcd(o.num_ < 0 ? BigInt(-o.num_) : o.num_, den_);
  num_ = (num_ / g1) * (o.num_ / g2);
  den_ = (den_ / g2) * (o.den_ / g1);
  if (num_.is_zero()) den_ = 1;
#ifndef NDEBUG
  assertCanonical();
#endif
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) raise(Errc::DivisionByZero, "division by zero rational");
  return *this *= o.inverse();
}

Rational Rational::inverse() const {
  if (isZero()) raise(Errc::DivisionByZero, "inverse of zero");
  Rational r;
  if (num_ < 0) {
    r.num_ = -den_;
    r.den_ = -num_;
  } else {
    r.num_ = den_;
    r.den_ = num_;
  }
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // canonical forms, so cross-multiplication is exact and cheap
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rational Rational::fromString(std::string_view text) {
  auto bad = [&] { raise(Errc::ParseError, "bad rational literal: '" + std::string(text) + "'"); };
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) bad();
  text = text.substr(begin, end - begin + 1);

  size_t slash = text.find('/');
  std::string_view numPart = text.substr(0, slash);
  if (numPart.empty()) bad();
  size_t i = (numPart[0] == '-' || numPart[0] == '+') ? 1 : 0;
  if (i == numPart.size()) bad();
  for (size_t j = i; j < numPart.size(); ++j)
    if (numPart[j] < '0' || numPart[j] > '9') bad();

  BigInt num{std::string(numPart)};
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    std::string_view denPart = text.substr(slash + 1);
    if (denPart.empty()) bad();
    for (char c : denPart)
      if (c < '0' || c > '9') bad();
    den = BigInt{std::string(denPart)};
    if (den.is_zero()) bad();
  }
  return Rational(std::move(num), std::move(den));
}

Capacity Capacity::fromString(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin != std::string_view::npos && text.substr(begin, end - begin + 1) == "inf")
    return Capacity::unbounded();
  return Capacity(Rational::fromString(text));
}

Rational rational_pow2(int exponent) {
  assert(exponent >= 0);
  BigInt v = 1;
  v <<= exponent;
  return Rational(std::move(v));
}

Rational common_granularity(const std::vector<Rational>& values) {
  if (values.empty()) raise(Errc::EmptyInput, "common_granularity of empty list");
  BigInt num = 0, den = 1;
  for (const Rational& v : values) {
    if (v.sign() <= 0)
      raise(Errc::NonPositiveValue, "common_granularity requires positive values, got " + v.str());
    num = boost::multiprecision::gcd(num, v.num());
    den = boost::multiprecision::lcm(den, v.den());
  }
  return Rational(std::move(num), std::move(den));
}

}  // namespace flowlab
