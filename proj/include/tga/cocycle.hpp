#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tga/scalar.hpp"

namespace tga {

/// Normalized 2-cocycle on an elementary abelian 2-group Z_2^k with values in
/// the fourth roots of unity {1, i, -1, -i}.  Group elements are addressed by
/// exponent masks and multiply by XOR.  Values are kept as i-exponents so the
/// cocycle identity can be swept over all triples cheaply; Scalar views are
/// derived on demand.
class Cocycle {
public:
  Cocycle(int rank, std::vector<Scalar> table);  // table[(a << rank) | b]
  static Cocycle trivial(int rank);
  // omega(a, b) = (-1)^(a^T B b) for a Z_2 matrix B.
  static Cocycle from_bicharacter(const std::vector<std::vector<int>>& b);
  // Text form: either a value table with bit-vector headers or a bicharacter
  // matrix; see the README for the exact grammar.
  static Cocycle parse(std::istream& in);

  int rank() const { return rank_; }
  uint32_t order() const { return 1u << rank_; }

  const Scalar& value(uint32_t a, uint32_t b) const;
  const Scalar& value_inverse(uint32_t a, uint32_t b) const;
  int exponent(uint32_t a, uint32_t b) const {  // value = i^exponent
    return exps_[(a << rank_) | b];
  }

  Cocycle multiplied(const Cocycle& o) const;
  Cocycle inversed() const;

  /// The cocycle (c, c^-1) on the doubled group, mask packing (a << rank) | b.
  Cocycle paired_with_inverse() const;

  /// Restriction along the subgroup generated by independent masks `gens`:
  /// c'(x, y) = c(expand(x), expand(y)).
  Cocycle restricted(const std::vector<uint32_t>& gens) const;

  /// The c-regular elements {g : c(g,h) = c(h,g) for all h}, as masks.
  std::vector<uint32_t> radical() const;
  bool nondegenerate() const { return radical().size() == 1; }

  struct Wedderburn {
    uint64_t block_count = 0;  // |Rad(c)|
    uint64_t block_dim = 0;    // |N / Rad(c)|
    uint64_t irrep_dim = 0;    // sqrt(block_dim) when consistent
    bool consistent = false;   // block_dim is a perfect square
  };
  Wedderburn wedderburn_profile() const;

  /// Explicit sweep of normalization plus the cocycle identity over all
  /// triples.  Constructors from external data run this and throw; values
  /// derived from already-valid cocycles (restriction, pairing, pointwise
  /// product) skip it, so test suites call it directly.
  bool identity_holds() const noexcept;

  friend bool operator==(const Cocycle& a, const Cocycle& b) {
    return a.rank_ == b.rank_ && a.exps_ == b.exps_;
  }
  friend bool operator!=(const Cocycle& a, const Cocycle& b) { return !(a == b); }

private:
  struct AlreadyValid {};
  Cocycle(int rank, std::vector<uint8_t> exps);
  Cocycle(int rank, std::vector<uint8_t> exps, AlreadyValid);
  void validate() const;

  friend Cocycle coboundary(int rank, const std::vector<Scalar>& q);

  int rank_;
  std::vector<uint8_t> exps_;  // i-exponents, size 4^rank
};

/// The coboundary (dq)(a, b) = q(a) q(b) / q(ab); q must be normalized
/// (q(1) = 1) with fourth-root-of-unity values.
Cocycle coboundary(int rank, const std::vector<Scalar>& q);

/// Scalar view of i^e.
const Scalar& fourth_root_value(int e);

}  // namespace tga
