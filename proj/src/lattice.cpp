#include "tga/lattice.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tga {

Lattice::Lattice(std::vector<AlgElt> basis, Ring ring)
    : basis_(std::move(basis)), ring_(ring), degree_(0),
      basis_matrix_(0, 0) {
  if (basis_.empty()) throw std::invalid_argument("Lattice: empty basis");
  degree_ = basis_[0].degree();
  std::set<Perm> support;
  for (const AlgElt& b : basis_) {
    if (b.degree() != degree_) throw std::invalid_argument("Lattice: degree mismatch");
    for (const auto& [g, c] : b.terms()) support.insert(g);
  }
  support_.assign(support.begin(), support.end());

  basis_matrix_ = ScalarMatrix(support_.size(), basis_.size());
  for (size_t c = 0; c < basis_.size(); ++c)
    for (const auto& [g, coeff] : basis_[c].terms()) {
      size_t r = std::lower_bound(support_.begin(), support_.end(), g) - support_.begin();
      basis_matrix_.at(r, c) = coeff;
    }
  if (basis_matrix_.rank() != basis_.size())
    throw std::invalid_argument("Lattice: basis is not K-linearly independent");
  if (support_.size() == basis_.size()) inverse_ = basis_matrix_.inverse();
}

bool Lattice::in_ring(const Scalar& s, Ring ring) {
  if (!s.c().is_zero() || !s.d().is_zero()) return false;
  if (!s.a().is_integer()) return false;
  if (ring == Ring::Z) return s.b().is_zero();
  return s.b().is_integer();
}

std::vector<Scalar> Lattice::coordinates_of(const AlgElt& a, bool* consistent) const {
  std::vector<Scalar> rhs(support_.size());
  for (const auto& [g, c] : a.terms()) {
    auto it = std::lower_bound(support_.begin(), support_.end(), g);
    if (it == support_.end() || !(*it == g)) {
      *consistent = false;
      return {};
    }
    rhs[it - support_.begin()] = c;
  }
  if (inverse_) {
    *consistent = true;
    return inverse_->apply(rhs);
  }
  auto sol = basis_matrix_.solve(rhs);
  *consistent = sol.has_value();
  return sol ? *sol : std::vector<Scalar>{};
}

Lattice::Membership Lattice::membership(const AlgElt& a) const {
  if (a.degree() != degree_) throw std::invalid_argument("Lattice: degree mismatch");
  Membership m;
  bool consistent = false;
  m.coords = coordinates_of(a, &consistent);
  if (!consistent) return m;
  // solve() returns a candidate; confirm it reproduces a exactly
  AlgElt rebuilt(degree_);
  for (size_t k = 0; k < basis_.size(); ++k) rebuilt += basis_[k].scaled(m.coords[k]);
  if (rebuilt != a) return m;
  m.in_span = true;
  m.member = std::all_of(m.coords.begin(), m.coords.end(),
                         [&](const Scalar& s) { return in_ring(s, ring_); });
  return m;
}

Lattice::Membership Lattice::tensor_membership(const Tensor2& t) const {
  if (!inverse_)
    throw std::logic_error(
        "Lattice: tensor membership needs a square invertible basis");
  Membership m;
  m.in_span = true;
  // coordinates in basis_i (x) basis_j via the inverse on each leg
  std::map<std::pair<size_t, size_t>, Scalar> coords;
  for (const auto& [key, coeff] : t.terms()) {
    auto row_of = [&](const Perm& g) -> std::optional<size_t> {
      auto it = std::lower_bound(support_.begin(), support_.end(), g);
      if (it == support_.end() || !(*it == g)) return std::nullopt;
      return static_cast<size_t>(it - support_.begin());
    };
    auto r1 = row_of(key.first), r2 = row_of(key.second);
    if (!r1 || !r2) {
      m.in_span = false;
      return m;
    }
    for (size_t i = 0; i < basis_.size(); ++i) {
      const Scalar& ci = inverse_->at(i, *r1);
      if (ci.is_zero()) continue;
      for (size_t j = 0; j < basis_.size(); ++j) {
        const Scalar& cj = inverse_->at(j, *r2);
        if (cj.is_zero()) continue;
        Scalar contrib = coeff * ci * cj;
        auto [it, inserted] = coords.try_emplace({i, j}, contrib);
        if (!inserted) it->second += contrib;
      }
    }
  }
  m.member = true;
  m.coords.reserve(coords.size());
  for (const auto& [ij, c] : coords) {
    m.coords.push_back(c);
    if (!in_ring(c, ring_)) m.member = false;
  }
  return m;
}

ClosureReport lattice_closure_check(const Lattice& x, const TwistElt* twist) {
  ClosureReport report;
  int degree = x.degree();
  auto note = [&](const std::string& s) { report.failures.push_back(s); };

  report.unit = x.membership(AlgElt::unit(degree)).member;
  if (!report.unit) note("1 is not in X");

  report.products = true;
  const auto& basis = x.basis();
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      if (!x.membership(basis[i] * basis[j]).member) {
        report.products = false;
        note("product of basis " + std::to_string(i) + " and " + std::to_string(j) +
             " leaves X");
      }

  report.coproduct = true;
  report.counit = true;
  report.antipode = true;
  for (size_t i = 0; i < basis.size(); ++i) {
    Tensor2 d = twist ? twisted_coproduct(*twist, basis[i]) : coproduct(basis[i]);
    if (!x.tensor_membership(d).member) {
      report.coproduct = false;
      note("coproduct of basis " + std::to_string(i) + " leaves X (x) X");
    }
    if (!Lattice::in_ring(basis[i].counit(), x.ring())) {
      report.counit = false;
      note("counit of basis " + std::to_string(i) + " leaves the coefficient ring");
    }
    AlgElt s = twist ? twisted_antipode(*twist, basis[i]) : basis[i].antipode();
    if (!x.membership(s).member) {
      report.antipode = false;
      note("antipode of basis " + std::to_string(i) + " leaves X");
    }
  }

  if (twist) {
    report.twist_in_tensor_square = x.tensor_membership(twist->value()).member &&
                                    x.tensor_membership(twist->inverse()).member;
    if (!report.twist_in_tensor_square) note("J or J^-1 is not in X (x) X");
  }
  return report;
}

}  // namespace tga
