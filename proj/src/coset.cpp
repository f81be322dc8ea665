#include "tga/coset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "tga/matrix.hpp"

namespace tga {

namespace {

struct PairKeyHash {
  size_t operator()(const std::pair<uint64_t, uint64_t>& k) const {
    uint64_t h = k.first * 0x9e3779b97f4a7c15ULL ^ (k.second + 0x7f4a7c15U);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
    h ^= h >> 29;
    return static_cast<size_t>(h);
  }
};

using SupportMap =
    std::unordered_map<std::pair<uint64_t, uint64_t>, const Scalar*, PairKeyHash>;

SupportMap index_tensor(const Tensor2& t) {
  SupportMap out;
  out.reserve(t.terms().size() * 2);
  for (const auto& [k, c] : t.terms())
    out.emplace(std::make_pair(k.first.key(), k.second.key()), &c);
  return out;
}

// J (g (x) g) = (g (x) g) J done as a support scan: for every support pair
// (a, b) of J the conjugated pair must carry the same coefficient.
bool is_group_like(const Tensor2& j, const SupportMap& support, const Perm& g) {
  Perm gi = g.inverse();
  for (const auto& [k, c] : j.terms()) {
    Perm a = gi * k.first * g;
    Perm b = gi * k.second * g;
    auto it = support.find(std::make_pair(a.key(), b.key()));
    if (it == support.end() || !(*it->second == c)) return false;
  }
  return true;
}

}  // namespace

bool CosetBlock::pair_in_n(uint32_t packed) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), packed);
}

uint32_t CosetBlock::pair_of_nmask(uint32_t nmask) const {
  uint32_t packed = 0;
  for (size_t j = 0; j < n_gens_.size(); ++j)
    if (nmask & (1u << j)) packed ^= n_gens_[j];
  return packed;
}

std::optional<uint32_t> CosetBlock::nmask_of_pair(uint32_t packed) const {
  // N is small; solve the subset-XOR by scanning all nmasks once and caching.
  for (uint32_t nmask = 0; nmask < (1u << n_gens_.size()); ++nmask)
    if (pair_of_nmask(nmask) == packed) return nmask;
  return std::nullopt;
}

const AlgElt& CosetBlock::basis_element(uint32_t packed) const {
  auto it = basis_cache_.find(packed);
  if (it != basis_cache_.end()) return it->second;
  return basis_cache_.emplace(packed, basis_element_at(representative_, packed))
      .first->second;
}

AlgElt CosetBlock::basis_element_at(const Perm& tau, uint32_t packed) const {
  if (!std::binary_search(coset_.begin(), coset_.end(), tau))
    throw std::invalid_argument("basis_element_at: representative outside the coset");
  uint32_t phi = packed >> rank_;
  uint32_t psi = packed & ((1u << rank_) - 1);
  return ctx_->idem[phi] * AlgElt::of(tau) * ctx_->idem[psi];
}

std::vector<uint32_t> CosetBlock::center_pairs() const {
  std::vector<uint32_t> out;
  for (uint32_t nmask : block_cocycle_.radical()) out.push_back(pair_of_nmask(nmask));
  std::sort(out.begin(), out.end());
  return out;
}

std::string CosetBlock::pair_str(uint32_t packed) const {
  auto bits = [&](uint32_t mask) {
    std::string s;
    for (int j = 0; j < rank_; ++j) s += (mask & (1u << j)) ? '1' : '0';
    return s;
  };
  return "(" + bits(packed >> rank_) + "," + bits(packed & ((1u << rank_) - 1)) + ")";
}

CosetDecomposition::CosetDecomposition(SubgroupTable g, std::unique_ptr<CharContext> ctx,
                                       std::unique_ptr<Cocycle> omega)
    : group_(std::move(g)), ctx_(std::move(ctx)), omega_(std::move(omega)) {}

CosetDecomposition CosetDecomposition::make(const SubgroupTable& g, CharContext ctx,
                                            Cocycle omega) {
  if (g.degree() != ctx.degree())
    throw std::invalid_argument("decompose: degree mismatch");
  if (omega.rank() != ctx.rank())
    throw std::invalid_argument("decompose: cocycle rank mismatch");
  SubgroupTable m_table = ctx.m->table();
  if (!m_table.subgroup_of(g))
    throw std::invalid_argument("decompose: M is not a subgroup of G");

  CosetDecomposition out(g, std::make_unique<CharContext>(std::move(ctx)),
                         std::make_unique<Cocycle>(std::move(omega)));
  out.twist_ = std::make_unique<TwistElt>(TwistElt::build(*out.ctx_, *out.omega_));

  const CharContext& mctx = *out.ctx_;
  const Cocycle& w = *out.omega_;
  const int rank = mctx.rank();
  const uint32_t chars = 1u << rank;
  Cocycle paired = w.paired_with_inverse();
  SupportMap j_support = index_tensor(out.twist_->value());

  for (auto& dc : double_cosets(m_table, g)) {
    CosetBlock block;
    block.representative_ = dc.representative;
    block.coset_ = std::move(dc.elements);
    block.rank_ = rank;
    block.ctx_ = out.ctx_.get();
    block.omega_ = out.omega_.get();

    // N by brute-force scan of all character pairs.  The defining relation
    // psi(m) = phi(tau m tau^-1) quantifies over the m in M whose conjugate
    // tau m tau^-1 is again in M, i.e. m in M cap tau^-1 M tau.
    SubgroupTable stab = intersect(
        m_table, conjugated_subgroup(m_table, block.representative_.inverse()));
    std::vector<uint32_t> stab_masks;
    std::vector<uint32_t> conj_masks;
    for (const Perm& s : stab.elements()) {
      stab_masks.push_back(*mctx.m->mask_of(s));
      conj_masks.push_back(*mctx.m->mask_of(s.conjugated_by(block.representative_)));
    }

    for (uint32_t phi = 0; phi < chars; ++phi)
      for (uint32_t psi = 0; psi < chars; ++psi) {
        bool in_n = true;
        for (size_t k = 0; k < stab_masks.size() && in_n; ++k)
          in_n = mctx.chars[psi].sign_on_mask(stab_masks[k]) ==
                 mctx.chars[phi].sign_on_mask(conj_masks[k]);
        if (in_n) block.pairs_.push_back((phi << rank) | psi);
      }
    if (block.pairs_.size() != block.coset_.size())
      throw std::logic_error("decompose: |N| != |M tau M| for representative " +
                             block.representative_.str());

    // generators of N over GF(2), greedy over the sorted pair list
    std::unordered_set<uint32_t> span{0};
    for (uint32_t p : block.pairs_) {
      if (span.count(p)) continue;
      std::vector<uint32_t> extend;
      for (uint32_t s : span) extend.push_back(s ^ p);
      span.insert(extend.begin(), extend.end());
      block.n_gens_.push_back(p);
    }
    if (span.size() != block.pairs_.size())
      throw std::logic_error("decompose: N is not a subgroup");

    block.block_cocycle_ = paired.restricted(block.n_gens_);

    // the twisted coproduct of the representative stays inside the block
    Tensor2 d = twisted_coproduct(*out.twist_, AlgElt::of(block.representative_));
    for (const auto& [key, coeff] : d.terms()) {
      if (!std::binary_search(block.coset_.begin(), block.coset_.end(), key.first) ||
          !std::binary_search(block.coset_.begin(), block.coset_.end(), key.second))
        throw std::logic_error("decompose: coproduct leaves the block of " +
                               block.representative_.str());
    }

    for (const Perm& p : block.coset_)
      if (is_group_like(out.twist_->value(), j_support, p))
        block.group_likes_.push_back(p);

    out.blocks_.push_back(std::move(block));
  }
  return out;
}

const CosetBlock& CosetDecomposition::block_of(const Perm& tau) const {
  for (const CosetBlock& b : blocks_)
    if (std::binary_search(b.coset().begin(), b.coset().end(), tau)) return b;
  throw std::invalid_argument("block_of: element outside G");
}

std::pair<Scalar, uint32_t> block_dual_product(const CosetBlock& block, uint32_t p1,
                                               uint32_t p2) {
  if (!block.pair_in_n(p1) || !block.pair_in_n(p2))
    throw std::invalid_argument("block_dual_product: pair " +
                                block.pair_str(block.pair_in_n(p1) ? p2 : p1) +
                                " outside N");
  int rank = block.char_rank();
  uint32_t lo = (1u << rank) - 1;
  const Cocycle& w = block.ambient_cocycle();
  Scalar coeff = w.value(p1 >> rank, p2 >> rank) * w.value_inverse(p1 & lo, p2 & lo);
  return {coeff, p1 ^ p2};
}

Cocharacter matrix_cocharacter(const CosetBlock& block) {
  return matrix_cocharacter(block, block.representative());
}

Cocharacter matrix_cocharacter(const CosetBlock& block, const Perm& tau) {
  std::vector<uint32_t> z = block.center_pairs();
  uint64_t ratio = block.n_size() / z.size();
  uint64_t d = 1;
  while (d * d < ratio) ++d;
  if (d * d != ratio)
    throw std::logic_error("matrix_cocharacter: |N|/|Z| = " + std::to_string(ratio) +
                           " is not a perfect square");
  Cocharacter out{AlgElt(block.context().degree()), d, tau};
  for (uint32_t packed : z) out.value += block.basis_element_at(tau, packed);
  out.value = out.value.scaled(Scalar(static_cast<long long>(d)));
  if (out.value.counit() != Scalar(static_cast<long long>(d)))
    throw std::logic_error("matrix_cocharacter: counit differs from the dimension");
  return out;
}

CentralIdempotentReport central_idempotent_check(const CosetBlock& block) {
  const auto& pairs = block.pairs();
  size_t n = pairs.size();
  std::unordered_map<uint32_t, size_t> index;
  for (size_t k = 0; k < n; ++k) index.emplace(pairs[k], k);

  std::vector<uint32_t> z = block.center_pairs();
  Scalar inv_z(Rational(1, static_cast<long long>(z.size())));

  // dense vectors over the dual basis u_nu
  using Vec = std::vector<Scalar>;
  auto mul_basis = [&](uint32_t p1, uint32_t p2) {
    return block_dual_product(block, p1, p2);
  };
  Vec c(n);
  for (uint32_t nu : z) c[index.at(nu)] = inv_z;

  auto mul_vec = [&](const Vec& a, const Vec& b) {
    Vec out(n);
    for (size_t i = 0; i < n; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[j].is_zero()) continue;
        auto [coeff, prod] = mul_basis(pairs[i], pairs[j]);
        out[index.at(prod)] += a[i] * b[j] * coeff;
      }
    }
    return out;
  };

  CentralIdempotentReport report;
  report.idempotent = mul_vec(c, c) == c;

  report.central = true;
  ScalarMatrix rows(n, n);
  for (size_t g = 0; g < n && report.central; ++g) {
    Vec ug(n);
    ug[g] = Scalar(1);
    Vec left = mul_vec(ug, c);
    report.central = left == mul_vec(c, ug);
    for (size_t j = 0; j < n; ++j) rows.at(g, j) = left[j];
  }
  report.rank = rows.rank();
  report.expected_rank = n / z.size();
  return report;
}

std::vector<Perm> group_like_blocks(const SubgroupTable& g, const CharContext& ctx,
                                    const Cocycle& omega) {
  TwistElt j = TwistElt::build(ctx, omega);
  SupportMap support = index_tensor(j.value());
  std::vector<Perm> out;
  for (const Perm& p : g.elements())
    if (is_group_like(j.value(), support, p)) out.push_back(p);
  return out;
}

}  // namespace tga
