#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tga/algelt.hpp"
#include "tga/matrix.hpp"
#include "tga/twist.hpp"

namespace tga {

/// Finitely generated span of K-linearly independent group-algebra elements
/// over Z or Z[i].  Independence is verified at construction; membership is an
/// exact linear solve followed by a coefficient-ring check.
class Lattice {
public:
  enum class Ring { Z, GaussianZ };

  Lattice(std::vector<AlgElt> basis, Ring ring);

  const std::vector<AlgElt>& basis() const { return basis_; }
  Ring ring() const { return ring_; }
  int degree() const { return degree_; }

  static bool in_ring(const Scalar& s, Ring ring);

  struct Membership {
    bool in_span = false;     // solvable over the field at all
    bool member = false;      // solvable with coefficients in the ring
    std::vector<Scalar> coords;
  };
  Membership membership(const AlgElt& a) const;

  /// Membership of a tensor in the induced lattice basis_i (x) basis_j.
  /// Requires the basis to span the full ambient coordinate space (true for
  /// the Hopf orders handled here); throws otherwise.
  Membership tensor_membership(const Tensor2& t) const;

private:
  std::vector<Scalar> coordinates_of(const AlgElt& a, bool* consistent) const;

  std::vector<AlgElt> basis_;
  Ring ring_;
  int degree_;
  std::vector<Perm> support_;            // ambient coordinate support, sorted
  ScalarMatrix basis_matrix_;            // |support| x |basis|
  std::optional<ScalarMatrix> inverse_;  // set when square and invertible
};

/// Hopf-order axioms for the lattice, checked exactly on all basis elements
/// and basis pairs: unit, products, coproduct, counit, antipode.  With a
/// twist the coproduct/antipode are the twisted ones and J, J^-1 themselves
/// are tested for membership in X (x) X.
struct ClosureReport {
  bool unit = false;
  bool products = false;
  bool coproduct = false;
  bool counit = false;
  bool antipode = false;
  bool twist_in_tensor_square = true;  // only meaningful in twisted mode
  std::vector<std::string> failures;

  bool pass() const {
    return unit && products && coproduct && counit && antipode && twist_in_tensor_square;
  }
};

ClosureReport lattice_closure_check(const Lattice& x, const TwistElt* twist = nullptr);

}  // namespace tga
