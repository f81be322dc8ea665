#include "tga/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace tga {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_ == 0) throw std::domain_error("Rational: zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (den_ == 1) return;
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  auto to_big = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty field");
    return BigInt(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(to_big(text));
  return Rational(to_big(text.substr(0, slash)), to_big(text.substr(slash + 1)));
}

int Rational::den_two_valuation() const {
  if (den_ == 1) return 0;
  return static_cast<int>(boost::multiprecision::lsb(den_));
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ += o.num_;
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    num_ -= o.num_;
    return *this;
  }
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (num_ == 0) return *this;
  if (o.num_ == 0) {
    num_ = 0;
    den_ = 1;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

Rational Rational::inverse() const {
  if (num_ == 0) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace tga
