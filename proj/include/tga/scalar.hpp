#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "tga/rational.hpp"

namespace tga {

/// Monic degree-4 polynomial with rational coefficients, coeff[k] multiplies t^k
/// and coeff[4] == 1.
struct QuarticPoly {
  std::array<Rational, 5> coeff;

  bool is_integral() const;
  std::string str() const;
  friend bool operator==(const QuarticPoly& a, const QuarticPoly& b) {
    return a.coeff == b.coeff;
  }
};

/// Element of Q(i, sqrt5) in coordinates a + b*i + c*r5 + d*i*r5, where
/// i^2 = -1 and r5^2 = 5.  Equality is componentwise; all arithmetic exact.
class Scalar {
public:
  Scalar() = default;
  Scalar(long long n) : a_(n) {}
  Scalar(Rational a) : a_(std::move(a)) {}
  Scalar(Rational a, Rational b, Rational c, Rational d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1), Rational(0), Rational(0)); }
  static Scalar sqrt5() { return Scalar(Rational(0), Rational(0), Rational(1), Rational(0)); }
  static Scalar i_sqrt5() { return Scalar(Rational(0), Rational(0), Rational(0), Rational(1)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_zero() const { return a_.is_zero() && is_rational_only(); }
  bool is_one() const { return a_.is_one() && is_rational_only(); }
  bool is_rational() const { return is_rational_only(); }

  Scalar operator-() const { return Scalar(-a_, -b_, -c_, -d_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar inverse() const;

  // Galois conjugations: i -> -i and r5 -> -r5.
  Scalar conj_i() const { return Scalar(a_, -b_, c_, -d_); }
  Scalar conj_r5() const { return Scalar(a_, b_, -c_, -d_); }

  // Matrix of multiplication by *this on the basis {1, i, r5, i*r5};
  // column k is the image of the k-th basis vector.
  std::array<std::array<Rational, 4>, 4> mult_matrix() const;

  QuarticPoly char_poly() const;
  bool is_algebraic_integer() const;

  // Smallest e >= 0 such that 2^e * x has all four reduced denominators odd.
  int two_adic_defect() const;

  // Canonical rendering "a + b*i + c*r5 + d*i*r5" with zero terms omitted.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

private:
  bool is_rational_only() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }

  Rational a_, b_, c_, d_;
};

}  // namespace tga
