#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace tga {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction over arbitrary-precision integers, denominator always >= 1.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);
  Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

  // Accepts "n" or "n/d", optionally signed.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  // Exponent of 2 in the (reduced) denominator.
  int den_two_valuation() const;

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
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  Rational inverse() const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  void normalize();

  BigInt num_;
  BigInt den_;
};

}  // namespace tga
