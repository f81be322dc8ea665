#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tga/perm.hpp"
#include "tga/scalar.hpp"

namespace tga {

/// Sparse element of the group algebra K[S_n]: a finite K-linear combination of
/// permutations.  Zero coefficients are never stored, so equality is term-wise.
class AlgElt {
public:
  explicit AlgElt(int degree) : degree_(degree) {}
  static AlgElt unit(int degree) { return of(Perm::identity(degree)); }
  static AlgElt of(const Perm& g, Scalar coeff = Scalar(1));

  int degree() const { return degree_; }
  const std::map<Perm, Scalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Perm& g) const;
  void add_term(const Perm& g, const Scalar& coeff);

  AlgElt& operator+=(const AlgElt& o);
  AlgElt& operator-=(const AlgElt& o);
  friend AlgElt operator+(AlgElt a, const AlgElt& b) { return a += b; }
  friend AlgElt operator-(AlgElt a, const AlgElt& b) { return a -= b; }
  AlgElt operator-() const;

  // Convolution product extending the group product bilinearly.
  friend AlgElt operator*(const AlgElt& a, const AlgElt& b);
  AlgElt scaled(const Scalar& s) const;

  Scalar counit() const;     // sum of coefficients
  AlgElt antipode() const;   // g -> g^-1
  AlgElt conjugated_by(const Perm& g) const;
  AlgElt padded(int new_degree) const;
  AlgElt restricted(int new_degree) const;
  // Applies a point relabeling rho, i.e. conjugates every support element.
  AlgElt renamed(const Perm& rho) const;

  std::vector<Perm> support() const;

  friend bool operator==(const AlgElt& a, const AlgElt& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const AlgElt& a, const AlgElt& b) { return !(a == b); }

  // "c1*(perm1) + c2*(perm2) + ..." in canonical support order.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const AlgElt& a);

private:
  int degree_;
  std::map<Perm, Scalar> terms_;
};

/// Sparse element of K[S_n] (x) K[S_n], a flat table over ordered pairs.
class Tensor2 {
public:
  using Key = std::pair<Perm, Perm>;

  explicit Tensor2(int degree) : degree_(degree) {}
  static Tensor2 pure(const AlgElt& a, const AlgElt& b);  // a (x) b

  int degree() const { return degree_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Scalar coefficient(const Perm& g, const Perm& h) const;
  void add_term(const Perm& g, const Perm& h, const Scalar& coeff);

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator-=(const Tensor2& o);
  friend Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }

  // Componentwise product on pure tensors, extended bilinearly.
  friend Tensor2 operator*(const Tensor2& a, const Tensor2& b);
  Tensor2 scaled(const Scalar& s) const;

  AlgElt counit_left() const;   // (eps (x) id)
  AlgElt counit_right() const;  // (id (x) eps)

  friend bool operator==(const Tensor2& a, const Tensor2& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Tensor2& t);

private:
  int degree_;
  std::map<Key, Scalar> terms_;
};

/// Three-fold analogue of Tensor2; just enough surface for the twist axioms
/// and the coefficient-extraction identities.
class Tensor3 {
public:
  using Key = std::array<Perm, 3>;

  explicit Tensor3(int degree) : degree_(degree) {}
  static Tensor3 pure(const AlgElt& a, const AlgElt& b, const AlgElt& c);

  int degree() const { return degree_; }
  const std::map<Key, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Perm& g, const Perm& h, const Perm& k, const Scalar& coeff);

  Tensor3& operator+=(const Tensor3& o);
  Tensor3& operator-=(const Tensor3& o);
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

  friend Tensor3 operator*(const Tensor3& a, const Tensor3& b);
  Tensor3 scaled(const Scalar& s) const;

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

  std::string str() const;

private:
  int degree_;
  std::map<Key, Scalar> terms_;
};

// Hopf structure of K[G]: group-likes, extended linearly.
Tensor2 coproduct(const AlgElt& a);
Tensor3 coproduct3(const AlgElt& a);

// Leg embeddings used by the twist axioms.
Tensor3 tensor_1_otimes(const Tensor2& t);        // 1 (x) t
Tensor3 tensor_otimes_1(const Tensor2& t);        // t (x) 1
Tensor3 coproduct_left_leg(const Tensor2& t);     // (Delta (x) Id)(t)
Tensor3 coproduct_right_leg(const Tensor2& t);    // (Id (x) Delta)(t)

// (Delta_any (x) Id) / (Id (x) Delta_any) for an arbitrary coproduct-like map.
template <typename F>
Tensor3 expand_left_leg(const Tensor2& t, F&& delta) {
  Tensor3 out(t.degree());
  for (const auto& [key, coeff] : t.terms()) {
    Tensor2 d = delta(key.first);
    for (const auto& [dkey, dcoeff] : d.terms())
      out.add_term(dkey.first, dkey.second, key.second, coeff * dcoeff);
  }
  return out;
}

template <typename F>
Tensor3 expand_right_leg(const Tensor2& t, F&& delta) {
  Tensor3 out(t.degree());
  for (const auto& [key, coeff] : t.terms()) {
    Tensor2 d = delta(key.second);
    for (const auto& [dkey, dcoeff] : d.terms())
      out.add_term(key.first, dkey.first, dkey.second, coeff * dcoeff);
  }
  return out;
}

}  // namespace tga
