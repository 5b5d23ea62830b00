#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace geoposet {

using BigInt = boost::multiprecision::cpp_int;

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline int sign_of(const BigInt& v) {
  return v.sign();
}

/// Exact rational number, always stored reduced with positive denominator.
/// Every geometric predicate in this library bottoms out in BigInt
/// arithmetic on these; there are no floating-point values anywhere.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_.is_zero()) throw std::domain_error("rational division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // denominators are positive, so cross-multiplication preserves order
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Serialized as "p/q" with decimal integers, e.g. "0/1", "-3/7".
  std::string str() const {
    return num_.str() + "/" + den_.str();
  }

  static Rational parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) {
        return Rational(BigInt(std::string(s)));
      }
      BigInt n{std::string(s.substr(0, slash))};
      BigInt d{std::string(s.substr(slash + 1))};
      if (d.is_zero()) throw parse_error("zero denominator: " + std::string(s));
      return Rational(std::move(n), std::move(d));
    } catch (const std::runtime_error&) {
      throw parse_error("bad rational literal: " + std::string(s));
    }
  }

 private:
  struct unchecked {};
  Rational(unchecked, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  BigInt num_;
  BigInt den_;
};

}  // namespace geoposet
