#include "tga/twist.hpp"

#include <stdexcept>

#include "tga/matrix.hpp"

namespace tga {

CharContext CharContext::make(GroupPtr m) {
  CharContext ctx;
  ctx.m = std::move(m);
  ctx.chars = char_group(ctx.m);
  ctx.idem.reserve(ctx.chars.size());
  for (const auto& phi : ctx.chars) ctx.idem.push_back(idempotent(phi));
  return ctx;
}

bool check_twist_axioms(const Tensor2& value, const Tensor2& inverse, std::string* why) {
  int degree = value.degree();
  Tensor2 id2 = Tensor2::pure(AlgElt::unit(degree), AlgElt::unit(degree));
  if (value * inverse != id2 || inverse * value != id2) {
    if (why) *why = "J * J^-1 differs from id (x) id";
    return false;
  }
  AlgElt one = AlgElt::unit(degree);
  if (value.counit_left() != one || value.counit_right() != one) {
    if (why) *why = "(eps (x) Id)(J) or (Id (x) eps)(J) differs from 1";
    return false;
  }
  Tensor3 lhs = tensor_1_otimes(value) * coproduct_right_leg(value);
  Tensor3 rhs = tensor_otimes_1(value) * coproduct_left_leg(value);
  if (lhs != rhs) {
    if (why) {
      Tensor3 diff = lhs - rhs;
      *why = "(1 (x) J)(Id (x) Delta)(J) != (J (x) 1)(Delta (x) Id)(J); difference " +
             diff.str();
    }
    return false;
  }
  return true;
}

TwistElt TwistElt::build(const CharContext& ctx, const Cocycle& omega) {
  if (omega.rank() != ctx.rank())
    throw std::invalid_argument("TwistElt: cocycle rank does not match the subgroup");
  int degree = ctx.degree();
  Tensor2 value(degree), inverse(degree);
  uint32_t n = omega.order();
  for (uint32_t a = 0; a < n; ++a)
    for (uint32_t b = 0; b < n; ++b) {
      Tensor2 pure = Tensor2::pure(ctx.idem[a], ctx.idem[b]);
      value += pure.scaled(omega.value(a, b));
      inverse += pure.scaled(omega.value_inverse(a, b));
    }
  return from_parts(std::move(value), std::move(inverse));
}

TwistElt TwistElt::from_parts(Tensor2 value, Tensor2 inverse) {
  std::string why;
  if (!check_twist_axioms(value, inverse, &why))
    throw std::invalid_argument("TwistElt: twist axioms fail: " + why);
  int degree = value.degree();
  AlgElt u(degree), u_inv(degree);
  for (const auto& [k, c] : value.terms()) u.add_term(k.first * k.second.inverse(), c);
  for (const auto& [k, c] : inverse.terms()) u_inv.add_term(k.first.inverse() * k.second, c);
  if (u * u_inv != AlgElt::unit(degree))
    throw std::invalid_argument("TwistElt: U_J inverse verification failed");
  return TwistElt(std::move(value), std::move(inverse), std::move(u), std::move(u_inv));
}

Tensor2 twisted_coproduct(const TwistElt& j, const AlgElt& a) {
  return j.value() * coproduct(a) * j.inverse();
}

AlgElt twisted_antipode(const TwistElt& j, const AlgElt& a) {
  return j.u() * a.antipode() * j.u_inverse();
}

const AlgElt& u_element(const TwistElt& j) { return j.u(); }

AlgElt cohomologous_v(const CharContext& ctx, const std::vector<Scalar>& q) {
  if (q.size() != ctx.chars.size())
    throw std::invalid_argument("cohomologous_v: q size mismatch");
  if (!q[0].is_one()) throw std::invalid_argument("cohomologous_v: q(1) must be 1");
  AlgElt v(ctx.degree());
  for (size_t k = 0; k < q.size(); ++k) {
    if (q[k].is_zero())
      throw std::invalid_argument("cohomologous_v: q values must be nonzero");
    v += ctx.idem[k].scaled(q[k]);
  }
  return v;
}

std::optional<AlgElt> algebra_inverse(const AlgElt& v, const std::vector<Perm>& basis) {
  size_t n = basis.size();
  std::map<Perm, size_t> index;
  for (size_t k = 0; k < n; ++k) index.emplace(basis[k], k);
  // left multiplication by v on the span of the basis
  ScalarMatrix lv(n, n);
  for (size_t c = 0; c < n; ++c)
    for (const auto& [g, coeff] : v.terms()) {
      auto it = index.find(g * basis[c]);
      if (it == index.end()) return std::nullopt;  // not closed, give up
      lv.at(it->second, c) += coeff;
    }
  std::vector<Scalar> rhs(n);
  Perm id(v.degree());
  auto id_it = index.find(id);
  if (id_it == index.end()) return std::nullopt;
  rhs[id_it->second] = Scalar(1);
  bool unique = false;
  auto sol = lv.solve(rhs, &unique);
  if (!sol || !unique) return std::nullopt;
  AlgElt w(v.degree());
  for (size_t k = 0; k < n; ++k) w.add_term(basis[k], (*sol)[k]);
  if (v * w != AlgElt::unit(v.degree()) || w * v != AlgElt::unit(v.degree()))
    return std::nullopt;
  return w;
}

bool transport_check(const TwistElt& j, const TwistElt& j_prime, const AlgElt& v,
                     std::span<const AlgElt> samples, std::string* why) {
  int degree = j.degree();
  if (j_prime.degree() != degree || v.degree() != degree)
    throw std::invalid_argument("transport_check: degree mismatch");

  std::vector<Perm> basis;
  {
    // close the support of v under products to invert inside a subalgebra
    std::vector<Perm> gens = v.support();
    basis = SubgroupTable(degree, gens).elements();
  }
  auto v_inv = algebra_inverse(v, basis);
  if (!v_inv) throw std::invalid_argument("transport_check: v is not invertible");

  Tensor2 vv = Tensor2::pure(v, v);
  Tensor2 vv_inv = Tensor2::pure(*v_inv, *v_inv);
  Tensor2 expected = vv * j.value() * coproduct(*v_inv);
  if (expected != j_prime.value()) {
    if (why) *why = "J' != (v (x) v) J Delta(v^-1)";
    return false;
  }
  for (const AlgElt& h : samples) {
    AlgElt fh = v * h * *v_inv;
    Tensor2 lhs = twisted_coproduct(j_prime, fh);
    Tensor2 rhs = vv * twisted_coproduct(j, h) * vv_inv;
    if (lhs != rhs) {
      if (why) *why = "conjugation by v does not intertwine the twisted coproducts";
      return false;
    }
  }
  return true;
}

TwistElt project_twist(const TwistElt& j, const CharContext& mctx,
                       const FactorSplit& split) {
  const auto& m = mctx.m;
  int degree = mctx.degree();
  if (split.p->degree() != degree || split.q->degree() != degree)
    throw std::invalid_argument("project_twist: degree mismatch");
  if (uint64_t(split.p->order()) * split.q->order() != m->order())
    throw std::invalid_argument("project_twist: M is not split by P x Q");

  // factorization table m = p q, which must be unique
  std::map<Perm, Perm> p_part;
  for (uint32_t pm = 0; pm < split.p->order(); ++pm)
    for (uint32_t qm = 0; qm < split.q->order(); ++qm) {
      Perm prod = split.p->element(pm) * split.q->element(qm);
      if (!m->contains(prod))
        throw std::invalid_argument("project_twist: P x Q is not inside M");
      if (!p_part.emplace(prod, split.p->element(pm)).second)
        throw std::invalid_argument("project_twist: factorization is not unique");
    }
  if (p_part.size() != m->order())
    throw std::invalid_argument("project_twist: P Q does not cover M");

  auto project = [&](const Tensor2& t) {
    Tensor2 out(degree);
    for (const auto& [k, c] : t.terms()) {
      auto it1 = p_part.find(k.first);
      auto it2 = p_part.find(k.second);
      if (it1 == p_part.end() || it2 == p_part.end())
        throw std::invalid_argument("project_twist: twist support outside M x M");
      out.add_term(it1->second, it2->second, c);
    }
    return out;
  };
  return TwistElt::from_parts(project(j.value()), project(j.inverse()));
}

}  // namespace tga
