#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tga/algelt.hpp"
#include "tga/chars.hpp"
#include "tga/cocycle.hpp"

namespace tga {

/// Character-group data of a concrete abelian subgroup M: the 2^k characters
/// by mask together with their cached idempotents e_phi.
struct CharContext {
  GroupPtr m;
  std::vector<LinChar> chars;
  std::vector<AlgElt> idem;

  static CharContext make(GroupPtr m);
  int degree() const { return m->degree(); }
  int rank() const { return m->rank(); }
};

bool check_twist_axioms(const Tensor2& value, const Tensor2& inverse,
                        std::string* why = nullptr);

/// A twist J with its inverse and the antipode-correction element U_J.
/// Both the invertibility and the twist axioms are verified at construction.
class TwistElt {
public:
  /// J_omega = sum omega(phi, psi) e_phi (x) e_psi.
  static TwistElt build(const CharContext& ctx, const Cocycle& omega);
  static TwistElt from_parts(Tensor2 value, Tensor2 inverse);

  int degree() const { return value_.degree(); }
  const Tensor2& value() const { return value_; }
  const Tensor2& inverse() const { return inverse_; }
  const AlgElt& u() const { return u_; }
  const AlgElt& u_inverse() const { return u_inv_; }

private:
  TwistElt(Tensor2 value, Tensor2 inverse, AlgElt u, AlgElt u_inv)
      : value_(std::move(value)), inverse_(std::move(inverse)), u_(std::move(u)),
        u_inv_(std::move(u_inv)) {}

  Tensor2 value_;
  Tensor2 inverse_;
  AlgElt u_;
  AlgElt u_inv_;
};

Tensor2 twisted_coproduct(const TwistElt& j, const AlgElt& a);
AlgElt twisted_antipode(const TwistElt& j, const AlgElt& a);

/// U_J = sum J^(1) S(J^(2)); the returned element is the one cached in the
/// twist, whose inverse sum S(J^-(1)) J^-(2) is verified at construction.
const AlgElt& u_element(const TwistElt& j);

/// v = sum q(phi) e_phi for a normalized q; invertible in K[M].
AlgElt cohomologous_v(const CharContext& ctx, const std::vector<Scalar>& q);

/// Inverse of v inside the span of `basis` (must be closed under products);
/// nullopt when v is not invertible.
std::optional<AlgElt> algebra_inverse(const AlgElt& v, const std::vector<Perm>& basis);

/// Verifies J' = (v (x) v) J Delta(v^-1) and, on each sample h, that
/// conjugation by v intertwines the two twisted coproducts:
/// Delta_{J'}(v h v^-1) = (v (x) v) Delta_J(h) (v^-1 (x) v^-1).
bool transport_check(const TwistElt& j, const TwistElt& j_prime, const AlgElt& v,
                     std::span<const AlgElt> samples, std::string* why = nullptr);

/// M = P x Q as an internal direct product.
struct FactorSplit {
  GroupPtr p;
  GroupPtr q;
};

/// Image of the twist under the algebra map collapsing the Q factor,
/// m = p q -> p.  The result is a twist for the P-part and is re-verified.
TwistElt project_twist(const TwistElt& j, const CharContext& mctx,
                       const FactorSplit& split);

}  // namespace tga
