#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "flowlab/rational.hpp"

namespace flowlab {

// Arc capacity: a finite nonnegative rational or Unbounded. Unbounded is a
// distinct variant, never a sentinel value; it compares greater than every
// finite capacity and absorbs subtraction.
class Capacity {
 public:
  Capacity() : infinite_(false), value_(0) {}
  Capacity(Rational v) : infinite_(false), value_(std::move(v)) {}  // NOLINT
  Capacity(long long v) : infinite_(false), value_(v) {}            // NOLINT

  static Capacity unbounded() {
    Capacity c;
    c.infinite_ = true;
    return c;
  }
  static Capacity fromString(std::string_view text);

  bool isUnbounded() const { return infinite_; }
  // Finite value; callers must check isUnbounded() first.
  const Rational& value() const { return value_; }

  // Residual arithmetic: Unbounded - finite = Unbounded.
  Capacity minus(const Rational& r) const {
    return infinite_ ? unbounded() : Capacity(value_ - r);
  }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Capacity& a, const Capacity& b) {
    if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
    if (a.infinite_) return std::strong_ordering::greater;
    if (b.infinite_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }
  friend bool operator<(const Capacity& a, const Rational& b) {
    return !a.infinite_ && a.value_ < b;
  }
  friend bool operator<(const Rational& a, const Capacity& b) {
    return b.infinite_ || a < b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

 private:
  bool infinite_;
  Rational value_;
};

inline Capacity min(const Capacity& a, const Capacity& b) { return a < b ? a : b; }

}  // namespace flowlab
