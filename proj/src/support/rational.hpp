#ifndef PNF_SUPPORT_RATIONAL_HPP
#define PNF_SUPPORT_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include "support/error.hpp"

namespace pnf {

/// Exact rational number over checked 64-bit integers.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate
/// products run through 128-bit arithmetic; a result that does not fit
/// back into 64 bits raises Error(ErrorCode::Overflow) instead of
/// wrapping silently.
class Rational {
public:
  constexpr Rational() = default;
  Rational(std::int64_t n) : num_(n) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    I128 n = I128(a.num_) * b.den_ + I128(b.num_) * a.den_;
    I128 d = I128(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    I128 n = I128(a.num_) * b.den_ - I128(b.num_) * a.den_;
    I128 d = I128(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from_wide(I128(a.num_) * b.num_, I128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0)
      throw Error(ErrorCode::InvalidArgument, "rational division by zero");
    return from_wide(I128(a.num_) * b.den_, I128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return I128(a.num_) * b.den_ < I128(b.num_) * a.den_;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

private:
  using I128 = __int128;

  void normalize() {
    if (den_ == 0)
      throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static Rational from_wide(I128 n, I128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    I128 g = wide_gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr I128 lo = INT64_MIN, hi = INT64_MAX;
    if (n < lo || n > hi || d > hi)
      throw Error(ErrorCode::Overflow, "rational overflow");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  static I128 wide_gcd(I128 a, I128 b) {
    while (b != 0) {
      I128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace pnf

#endif
