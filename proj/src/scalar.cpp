#include "tga/scalar.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace tga {

bool QuarticPoly::is_integral() const {
  return std::all_of(coeff.begin(), coeff.end(),
                     [](const Rational& r) { return r.is_integer(); });
}

std::string QuarticPoly::str() const {
  std::string s;
  for (int k = 4; k >= 0; --k) {
    if (coeff[k].is_zero()) continue;
    if (!s.empty()) s += " + ";
    if (k == 0) {
      s += coeff[k].str();
    } else {
      if (!coeff[k].is_one()) s += coeff[k].str() + "*";
      s += (k == 1) ? "t" : "t^" + std::to_string(k);
    }
  }
  return s.empty() ? "0" : s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  // fast paths for rational-only operands
  if (is_rational_only()) {
    if (o.is_rational_only()) {
      a_ *= o.a_;
      return *this;
    }
    Rational f = a_;
    a_ = f * o.a_;
    b_ = f * o.b_;
    c_ = f * o.c_;
    d_ = f * o.d_;
    return *this;
  }
  if (o.is_rational_only()) {
    a_ *= o.a_;
    b_ *= o.a_;
    c_ *= o.a_;
    d_ *= o.a_;
    return *this;
  }
  const Rational five(5);
  Rational a = a_ * o.a_ - b_ * o.b_ + five * (c_ * o.c_ - d_ * o.d_);
  Rational b = a_ * o.b_ + b_ * o.a_ + five * (c_ * o.d_ + d_ * o.c_);
  Rational c = a_ * o.c_ + c_ * o.a_ - b_ * o.d_ - d_ * o.b_;
  Rational d = a_ * o.d_ + d_ * o.a_ + b_ * o.c_ + c_ * o.b_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  d_ = std::move(d);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
  if (is_rational_only()) return Scalar(a_.inverse());
  // x^-1 = prod of the three Galois conjugates divided by the field norm.
  Scalar p = conj_i() * conj_r5() * conj_i().conj_r5();
  Scalar n = *this * p;
  if (!n.is_rational_only() || n.a_.is_zero())
    throw std::logic_error("Scalar: norm computation failed");
  Rational inv = n.a_.inverse();
  return Scalar(p.a_ * inv, p.b_ * inv, p.c_ * inv, p.d_ * inv);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("Scalar: division by zero");
  if (o.is_rational_only()) {
    Rational inv = o.a_.inverse();
    a_ *= inv;
    b_ *= inv;
    c_ *= inv;
    d_ *= inv;
    return *this;
  }
  return *this *= o.inverse();
}

std::array<std::array<Rational, 4>, 4> Scalar::mult_matrix() const {
  // Images of 1, i, r5, i*r5 under multiplication by a + b i + c r5 + d i r5.
  const Rational five(5);
  std::array<std::array<Rational, 4>, 4> m;
  // column 0: x*1
  m[0][0] = a_; m[1][0] = b_; m[2][0] = c_; m[3][0] = d_;
  // column 1: x*i = -b + a i - d r5 + c i r5
  m[0][1] = -b_; m[1][1] = a_; m[2][1] = -d_; m[3][1] = c_;
  // column 2: x*r5 = 5c + 5d i + a r5 + b i r5
  m[0][2] = five * c_; m[1][2] = five * d_; m[2][2] = a_; m[3][2] = b_;
  // column 3: x*(i r5) = -5d + 5c i - b r5 + a i r5
  m[0][3] = -(five * d_); m[1][3] = five * c_; m[2][3] = -b_; m[3][3] = a_;
  return m;
}

QuarticPoly Scalar::char_poly() const {
  // Faddeev-LeVerrier on the 4x4 multiplication matrix.
  auto a = mult_matrix();
  using Mat = std::array<std::array<Rational, 4>, 4>;
  auto matmul = [](const Mat& x, const Mat& y) {
    Mat r{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k) {
        if (x[i][k].is_zero()) continue;
        for (int j = 0; j < 4; ++j) r[i][j] += x[i][k] * y[k][j];
      }
    return r;
  };
  auto trace = [](const Mat& x) {
    return x[0][0] + x[1][1] + x[2][2] + x[3][3];
  };
  QuarticPoly p;
  p.coeff[4] = Rational(1);
  Mat m = a;
  for (int k = 1; k <= 4; ++k) {
    Rational ck = -(trace(m) / Rational(k));
    p.coeff[4 - k] = ck;
    if (k == 4) break;
    for (int i = 0; i < 4; ++i) m[i][i] += ck;
    m = matmul(a, m);
  }
  return p;
}

bool Scalar::is_algebraic_integer() const { return char_poly().is_integral(); }

int Scalar::two_adic_defect() const {
  int e = 0;
  for (const Rational* r : {&a_, &b_, &c_, &d_})
    e = std::max(e, r->den_two_valuation());
  return e;
}

std::string Scalar::str() const {
  struct Part {
    const Rational* coeff;
    const char* unit;
  };
  const Part parts[] = {{&a_, ""}, {&b_, "i"}, {&c_, "r5"}, {&d_, "i*r5"}};
  std::string s;
  for (const auto& [coeff, unit] : parts) {
    if (coeff->is_zero()) continue;
    Rational v = *coeff;
    bool neg = v < Rational(0);
    if (neg) v = -v;
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (*unit == '\0') {
      s += v.str();
    } else if (v.is_one()) {
      s += unit;
    } else {
      s += v.str() + "*" + unit;
    }
  }
  return s.empty() ? "0" : s;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace tga
