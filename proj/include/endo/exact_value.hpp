#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "endo/error.hpp"

namespace endo {

using Rational = boost::multiprecision::cpp_rational;

/// Exact number sign * magnitude * q^(half_power/2), magnitude a positive
/// rational. Zero is represented with sign 0.
class ExactValue {
 public:
  ExactValue() : sign_(1), mag_(1), half_(0) {}

  static ExactValue zero() {
    ExactValue v;
    v.sign_ = 0;
    v.mag_ = 0;
    return v;
  }
  static ExactValue from_rational(const Rational& r, int half_power = 0) {
    ExactValue v;
    if (r == 0) return zero();
    v.sign_ = r < 0 ? -1 : 1;
    v.mag_ = r < 0 ? Rational(-r) : r;
    v.half_ = half_power;
    return v;
  }
  static ExactValue integer(long n) { return from_rational(Rational(n)); }
  static ExactValue fraction(long num, long den) {
    require(den != 0, "ExactValue: zero denominator");
    return from_rational(Rational(num) / Rational(den));
  }
  static ExactValue sign_value(int s) {
    require(s == 1 || s == -1, "ExactValue: sign must be +1 or -1");
    return integer(s);
  }
  static ExactValue q_power_half(int k) {
    ExactValue v;
    v.half_ = k;
    return v;
  }

  int sign() const { return sign_; }
  const Rational& magnitude() const { return mag_; }
  int q_half_power() const { return half_; }
  bool is_zero() const { return sign_ == 0; }
  bool is_sign() const { return sign_ != 0 && mag_ == 1 && half_ == 0; }

  /// Signed rational part (ignores the q power).
  Rational rational() const { return sign_ < 0 ? Rational(-mag_) : mag_; }

  ExactValue inverse() const {
    require(!is_zero(), "ExactValue: inverse of zero");
    ExactValue v;
    v.sign_ = sign_;
    v.mag_ = Rational(1) / mag_;
    v.half_ = -half_;
    return v;
  }

  ExactValue pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    ExactValue r;
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  friend ExactValue operator*(const ExactValue& a, const ExactValue& b) {
    if (a.is_zero() || b.is_zero()) return zero();
    ExactValue v;
    v.sign_ = a.sign_ * b.sign_;
    v.mag_ = a.mag_ * b.mag_;
    v.half_ = a.half_ + b.half_;
    return v;
  }
  friend ExactValue operator/(const ExactValue& a, const ExactValue& b) { return a * b.inverse(); }

  /// Sum of values with the same q power (or where one side is zero).
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    require(a.half_ == b.half_, "ExactValue: sum of values with different q powers");
    return from_rational(a.rational() + b.rational(), a.half_);
  }
  friend ExactValue operator-(const ExactValue& a) {
    ExactValue v = a;
    v.sign_ = -v.sign_;
    return v;
  }

  friend bool operator==(const ExactValue& a, const ExactValue& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.sign_ == b.sign_ && a.mag_ == b.mag_ && a.half_ == b.half_;
  }

  /// Numeric value at a concrete q when the q power is even.
  Rational evaluate(long q) const {
    require(half_ % 2 == 0, "ExactValue: odd q half-power has no rational value");
    Rational r = rational();
    Rational qq(q);
    int e = half_ / 2;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) r = e < 0 ? Rational(r / qq) : Rational(r * qq);
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s = (sign_ < 0 ? "-" : "") + mag_.str();
    if (half_ != 0) s += "*q^(" + std::to_string(half_) + "/2)";
    return s;
  }

 private:
  int sign_;
  Rational mag_;
  int half_;
};

}  // namespace endo
