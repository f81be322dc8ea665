#include "tga/algelt.hpp"

#include <ostream>
#include <stdexcept>

namespace tga {

AlgElt AlgElt::of(const Perm& g, Scalar coeff) {
  AlgElt a(g.degree());
  a.add_term(g, coeff);
  return a;
}

Scalar AlgElt::coefficient(const Perm& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Scalar() : it->second;
}

void AlgElt::add_term(const Perm& g, const Scalar& coeff) {
  if (g.degree() != degree_) throw std::invalid_argument("AlgElt: degree mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgElt& AlgElt::operator+=(const AlgElt& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("AlgElt: degree mismatch");
  if (this == &o) return *this = scaled(Scalar(2));
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

AlgElt& AlgElt::operator-=(const AlgElt& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("AlgElt: degree mismatch");
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

AlgElt AlgElt::operator-() const {
  AlgElt r(degree_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

AlgElt operator*(const AlgElt& a, const AlgElt& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("AlgElt: degree mismatch");
  AlgElt r(a.degree_);
  for (const auto& [g, cg] : a.terms_)
    for (const auto& [h, ch] : b.terms_) r.add_term(g * h, cg * ch);
  return r;
}

AlgElt AlgElt::scaled(const Scalar& s) const {
  AlgElt r(degree_);
  if (s.is_zero()) return r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, c * s);
  return r;
}

Scalar AlgElt::counit() const {
  Scalar s;
  for (const auto& [g, c] : terms_) s += c;
  return s;
}

AlgElt AlgElt::antipode() const {
  AlgElt r(degree_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g.inverse(), c);
  return r;
}

AlgElt AlgElt::conjugated_by(const Perm& g) const {
  AlgElt r(degree_);
  Perm gi = g.inverse();
  for (const auto& [h, c] : terms_) r.terms_.emplace(g * h * gi, c);
  return r;
}

AlgElt AlgElt::padded(int new_degree) const {
  AlgElt r(new_degree);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g.padded(new_degree), c);
  return r;
}

AlgElt AlgElt::restricted(int new_degree) const {
  AlgElt r(new_degree);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g.restricted(new_degree), c);
  return r;
}

AlgElt AlgElt::renamed(const Perm& rho) const {
  AlgElt r(degree_);
  for (const auto& [g, c] : terms_) r.terms_.emplace(g.conjugated_by(rho), c);
  return r;
}

std::vector<Perm> AlgElt::support() const {
  std::vector<Perm> s;
  s.reserve(terms_.size());
  for (const auto& [g, c] : terms_) s.push_back(g);
  return s;
}

std::string AlgElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [g, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + g.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const AlgElt& a) { return os << a.str(); }

// ---------------------------------------------------------------------------

Tensor2 Tensor2::pure(const AlgElt& a, const AlgElt& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("Tensor2: degree mismatch");
  Tensor2 t(a.degree());
  for (const auto& [g, cg] : a.terms())
    for (const auto& [h, ch] : b.terms()) t.add_term(g, h, cg * ch);
  return t;
}

Scalar Tensor2::coefficient(const Perm& g, const Perm& h) const {
  auto it = terms_.find({g, h});
  return it == terms_.end() ? Scalar() : it->second;
}

void Tensor2::add_term(const Perm& g, const Perm& h, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({g, h}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("Tensor2: degree mismatch");
  if (this == &o) return *this = scaled(Scalar(2));
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

Tensor2& Tensor2::operator-=(const Tensor2& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("Tensor2: degree mismatch");
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

Tensor2 operator*(const Tensor2& a, const Tensor2& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("Tensor2: degree mismatch");
  Tensor2 r(a.degree_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first * kb.first, ka.second * kb.second, ca * cb);
  return r;
}

Tensor2 Tensor2::scaled(const Scalar& s) const {
  Tensor2 r(degree_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

AlgElt Tensor2::counit_left() const {
  AlgElt r(degree_);
  for (const auto& [k, c] : terms_) r.add_term(k.second, c);
  return r;
}

AlgElt Tensor2::counit_right() const {
  AlgElt r(degree_);
  for (const auto& [k, c] : terms_) r.add_term(k.first, c);
  return r;
}

std::string Tensor2::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + k.first.str() + "(x)" + k.second.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Tensor2& t) { return os << t.str(); }

// ---------------------------------------------------------------------------

Tensor3 Tensor3::pure(const AlgElt& a, const AlgElt& b, const AlgElt& c) {
  if (a.degree() != b.degree() || b.degree() != c.degree())
    throw std::invalid_argument("Tensor3: degree mismatch");
  Tensor3 t(a.degree());
  for (const auto& [g, cg] : a.terms())
    for (const auto& [h, ch] : b.terms())
      for (const auto& [k, ck] : c.terms()) t.add_term(g, h, k, cg * ch * ck);
  return t;
}

void Tensor3::add_term(const Perm& g, const Perm& h, const Perm& k, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{g, h, k}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Tensor3& Tensor3::operator+=(const Tensor3& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("Tensor3: degree mismatch");
  if (this == &o) return *this = scaled(Scalar(2));
  for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], c);
  return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& o) {
  if (degree_ != o.degree_) throw std::invalid_argument("Tensor3: degree mismatch");
  if (this == &o) {
    terms_.clear();
    return *this;
  }
  for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], -c);
  return *this;
}

Tensor3 operator*(const Tensor3& a, const Tensor3& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("Tensor3: degree mismatch");
  Tensor3 r(a.degree_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka[0] * kb[0], ka[1] * kb[1], ka[2] * kb[2], ca * cb);
  return r;
}

Tensor3 Tensor3::scaled(const Scalar& s) const {
  Tensor3 r(degree_);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
  return r;
}

std::string Tensor3::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + k[0].str() + "(x)" + k[1].str() + "(x)" + k[2].str();
  }
  return s;
}

// ---------------------------------------------------------------------------

Tensor2 coproduct(const AlgElt& a) {
  Tensor2 t(a.degree());
  for (const auto& [g, c] : a.terms()) t.add_term(g, g, c);
  return t;
}

Tensor3 coproduct3(const AlgElt& a) {
  Tensor3 t(a.degree());
  for (const auto& [g, c] : a.terms()) t.add_term(g, g, g, c);
  return t;
}

Tensor3 tensor_1_otimes(const Tensor2& t) {
  Tensor3 r(t.degree());
  Perm id(t.degree());
  for (const auto& [k, c] : t.terms()) r.add_term(id, k.first, k.second, c);
  return r;
}

Tensor3 tensor_otimes_1(const Tensor2& t) {
  Tensor3 r(t.degree());
  Perm id(t.degree());
  for (const auto& [k, c] : t.terms()) r.add_term(k.first, k.second, id, c);
  return r;
}

Tensor3 coproduct_left_leg(const Tensor2& t) {
  Tensor3 r(t.degree());
  for (const auto& [k, c] : t.terms()) r.add_term(k.first, k.first, k.second, c);
  return r;
}

Tensor3 coproduct_right_leg(const Tensor2& t) {
  Tensor3 r(t.degree());
  for (const auto& [k, c] : t.terms()) r.add_term(k.first, k.second, k.second, c);
  return r;
}

}  // namespace tga
