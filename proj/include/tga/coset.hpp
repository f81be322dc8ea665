#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tga/cocycle.hpp"
#include "tga/subgroup.hpp"
#include "tga/twist.hpp"

namespace tga {

/// One double coset M tau M of the decomposition, together with the pair
/// group N = {(phi, psi) : psi(m) = phi(tau m tau^-1) on M cap tau M tau^-1},
/// the basis elements e_phi tau e_psi for pairs in N, and the 2-cocycle
/// omega(phi1, phi2) omega^-1(psi1, psi2) governing the dual algebra.
///
/// Pairs are packed as (phi_mask << rank) | psi_mask.
class CosetBlock {
public:
  const Perm& representative() const { return representative_; }
  const std::vector<Perm>& coset() const { return coset_; }
  size_t dimension() const { return coset_.size(); }

  int char_rank() const { return rank_; }
  const std::vector<uint32_t>& pairs() const { return pairs_; }  // sorted packed pairs
  size_t n_size() const { return pairs_.size(); }
  bool pair_in_n(uint32_t packed) const;

  /// Generators of N chosen greedily over the sorted pair list.
  const std::vector<uint32_t>& n_generators() const { return n_gens_; }
  /// The block cocycle on N in terms of those generators.
  const Cocycle& block_cocycle() const { return block_cocycle_; }
  uint32_t pair_of_nmask(uint32_t nmask) const;
  std::optional<uint32_t> nmask_of_pair(uint32_t packed) const;

  /// e_phi tau e_psi for the canonical representative; cached.
  const AlgElt& basis_element(uint32_t packed) const;
  /// e_phi tau e_psi for a caller-chosen representative of the same coset.
  AlgElt basis_element_at(const Perm& tau, uint32_t packed) const;

  /// Z = the radical of the block cocycle, as packed pairs (sorted).
  std::vector<uint32_t> center_pairs() const;

  /// Elements g of the coset with Delta_J(g) = g (x) g.
  const std::vector<Perm>& group_like_elements() const { return group_likes_; }

  const CharContext& context() const { return *ctx_; }
  const Cocycle& ambient_cocycle() const { return *omega_; }

  std::string pair_str(uint32_t packed) const;  // e.g. "(1010,0011)"

private:
  friend class CosetDecomposition;

  Perm representative_{1};
  std::vector<Perm> coset_;
  int rank_ = 0;
  const CharContext* ctx_ = nullptr;
  const Cocycle* omega_ = nullptr;
  std::vector<uint32_t> pairs_;
  std::vector<uint32_t> n_gens_;
  Cocycle block_cocycle_ = Cocycle::trivial(0);
  std::vector<Perm> group_likes_;
  mutable std::map<uint32_t, AlgElt> basis_cache_;
};

/// The coalgebra decomposition of the twisted group algebra of G along the
/// double cosets of M.  Block construction verifies |N| = |M tau M| and that
/// the twisted coproduct of each representative stays inside its block.
class CosetDecomposition {
public:
  static CosetDecomposition make(const SubgroupTable& g, CharContext ctx,
                                 Cocycle omega);

  const SubgroupTable& group() const { return group_; }
  const CharContext& context() const { return *ctx_; }
  const Cocycle& omega() const { return *omega_; }
  const TwistElt& twist() const { return *twist_; }
  const std::vector<CosetBlock>& blocks() const { return blocks_; }
  const CosetBlock& block_of(const Perm& tau) const;

private:
  CosetDecomposition(SubgroupTable g, std::unique_ptr<CharContext> ctx,
                     std::unique_ptr<Cocycle> omega);

  SubgroupTable group_;
  std::unique_ptr<CharContext> ctx_;
  std::unique_ptr<Cocycle> omega_;
  std::unique_ptr<TwistElt> twist_;
  std::vector<CosetBlock> blocks_;
};

/// u_{p1} u_{p2} = omega(phi1, phi2) omega^-1(psi1, psi2) u_{p1 p2} in the
/// dual algebra of the block; throws if a pair is outside N.
std::pair<Scalar, uint32_t> block_dual_product(const CosetBlock& block, uint32_t p1,
                                               uint32_t p2);

struct Cocharacter {
  AlgElt value;
  uint64_t dimension = 0;
  Perm block_representative{1};
};

/// The irreducible cocharacter attached to the block: d * sum_{Z} e_phi tau
/// e_psi with d = sqrt(|N|/|Z|); reduces to |M| e_eps tau e_eps on free
/// blocks.  Throws if |N|/|Z| is not a perfect square.  The basis depends on
/// the chosen coset representative (only through signs on non-free blocks),
/// so a representative other than the canonical one may be passed explicitly.
Cocharacter matrix_cocharacter(const CosetBlock& block);
Cocharacter matrix_cocharacter(const CosetBlock& block, const Perm& tau);

struct CentralIdempotentReport {
  bool idempotent = false;
  bool central = false;
  size_t rank = 0;
  size_t expected_rank = 0;
  bool pass() const { return idempotent && central && rank == expected_rank; }
};

/// Checks c = (1/|Z|) sum_{nu in Z} u_nu inside the dual algebra: idempotent,
/// central, and the left ideal it generates has dimension |N|/|Z|.
/// Primitivity of c is not certified here.
CentralIdempotentReport central_idempotent_check(const CosetBlock& block);

/// All g in G with Delta_J(g) = g (x) g, via a support-pruned scan of
/// J (g (x) g) = (g (x) g) J.
std::vector<Perm> group_like_blocks(const SubgroupTable& g, const CharContext& ctx,
                                    const Cocycle& omega);

}  // namespace tga
