#include "tga/chars.hpp"

#include <bit>
#include <set>
#include <stdexcept>

namespace tga {

ElemAbelian2Group::ElemAbelian2Group(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (generators_.size() > 20)
    throw std::invalid_argument("ElemAbelian2Group: rank too large");
  for (const Perm& t : generators_) {
    if (t.degree() != degree_)
      throw std::invalid_argument("ElemAbelian2Group: generator degree mismatch");
    if (t.is_identity() || !(t * t).is_identity())
      throw std::invalid_argument("ElemAbelian2Group: generators must be involutions");
  }
  for (size_t i = 0; i < generators_.size(); ++i)
    for (size_t j = i + 1; j < generators_.size(); ++j)
      if (!(generators_[i] * generators_[j] == generators_[j] * generators_[i]))
        throw std::invalid_argument("ElemAbelian2Group: generators must commute");
  uint32_t n = 1u << generators_.size();
  element_by_mask_.reserve(n);
  for (uint32_t mask = 0; mask < n; ++mask) {
    Perm p(degree_);
    for (size_t j = 0; j < generators_.size(); ++j)
      if (mask & (1u << j)) p = p * generators_[j];
    element_by_mask_.push_back(p);
    if (!mask_by_element_.emplace(p, mask).second)
      throw std::invalid_argument("ElemAbelian2Group: generators are not independent");
  }
}

const Perm& ElemAbelian2Group::element(uint32_t mask) const {
  if (mask >= element_by_mask_.size())
    throw std::out_of_range("ElemAbelian2Group: mask out of range");
  return element_by_mask_[mask];
}

std::optional<uint32_t> ElemAbelian2Group::mask_of(const Perm& m) const {
  auto it = mask_by_element_.find(m);
  if (it == mask_by_element_.end()) return std::nullopt;
  return it->second;
}

SubgroupTable ElemAbelian2Group::table() const {
  return SubgroupTable(degree_, generators_);
}

LinChar::LinChar(GroupPtr group, uint32_t bits) : group_(std::move(group)), bits_(bits) {
  if (!group_) throw std::invalid_argument("LinChar: null group");
  if (bits_ >= group_->order()) throw std::invalid_argument("LinChar: bits out of range");
}

int LinChar::sign_on_mask(uint32_t elem_mask) const {
  return (std::popcount(bits_ & elem_mask) % 2) ? -1 : 1;
}

int LinChar::sign(const Perm& m) const {
  auto mask = group_->mask_of(m);
  if (!mask) throw std::invalid_argument("LinChar: element is not in the subgroup");
  return sign_on_mask(*mask);
}

Scalar LinChar::value(const Perm& m) const { return Scalar(sign(m)); }

LinChar LinChar::operator*(const LinChar& o) const {
  if (group_ != o.group_) throw std::invalid_argument("LinChar: different subgroups");
  return LinChar(group_, bits_ ^ o.bits_);
}

std::vector<LinChar> char_group(const GroupPtr& group) {
  std::vector<LinChar> out;
  out.reserve(group->order());
  for (uint32_t bits = 0; bits < group->order(); ++bits) out.emplace_back(group, bits);
  return out;
}

LinChar conj_act(const Perm& h, const LinChar& phi) {
  const auto& grp = phi.group();
  uint32_t bits = 0;
  for (int j = 0; j < grp->rank(); ++j) {
    Perm conj = grp->generators()[j].conjugated_by(h);
    auto mask = grp->mask_of(conj);
    if (!mask) throw std::invalid_argument("conj_act: conjugation does not normalize M");
    if (phi.sign_on_mask(*mask) < 0) bits |= 1u << j;
  }
  return LinChar(grp, bits);
}

AlgElt idempotent(const LinChar& phi) {
  const auto& grp = phi.group();
  AlgElt e(grp->degree());
  Rational inv_order(1, static_cast<long long>(grp->order()));
  for (uint32_t mask = 0; mask < grp->order(); ++mask) {
    // m = m^-1 in an elementary abelian 2-group
    e.add_term(grp->element(mask), Scalar(phi.sign_on_mask(mask) > 0 ? inv_order : -inv_order));
  }
  return e;
}

// ---------------------------------------------------------------------------

namespace {

// Conjugacy class of (1 2 3 4 5) inside A5, for separating the two classes of
// 5-cycles; cycle type cannot tell them apart.
const std::set<Perm>& a5_reference_five_class() {
  static const std::set<Perm> cls = [] {
    std::set<Perm> out;
    SubgroupTable a5 = alternating_group(5);
    Perm rep = Perm::parse("(1 2 3 4 5)", 5);
    for (const Perm& g : a5.elements()) out.insert(rep.conjugated_by(g));
    return out;
  }();
  return cls;
}

}  // namespace

int ClassFunction::class_index(GroupTag tag, const Perm& g) {
  if (tag == GroupTag::S4) {
    if (g.degree() != 4)
      throw std::invalid_argument("ClassFunction: expected degree 4");
    auto type = g.cycle_type();
    if (type == std::vector<int>{1, 1, 1, 1}) return 0;
    if (type == std::vector<int>{2, 1, 1}) return 1;
    if (type == std::vector<int>{2, 2}) return 2;
    if (type == std::vector<int>{3, 1}) return 3;
    return 4;  // [4]
  }
  if (g.degree() != 5)
    throw std::invalid_argument("ClassFunction: expected degree 5");
  if (g.parity() != 0)
    throw std::invalid_argument("ClassFunction: support outside A5");
  auto type = g.cycle_type();
  if (type == std::vector<int>{1, 1, 1, 1, 1}) return 0;
  if (type == std::vector<int>{2, 2, 1}) return 1;
  if (type == std::vector<int>{3, 1, 1}) return 2;
  return a5_reference_five_class().count(g) ? 3 : 4;
}

ClassFunction ClassFunction::irreducible(GroupTag tag, int index) {
  if (index < 1 || index > 5)
    throw std::invalid_argument("ClassFunction: index out of range");
  auto S = [](long long v) { return Scalar(v); };
  const Scalar half(Rational(1, 2));
  const Scalar golden_plus = Scalar(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0));
  const Scalar golden_minus = Scalar(Rational(1, 2), Rational(0), Rational(-1, 2), Rational(0));
  std::string name = "chi" + std::to_string(index);
  if (tag == GroupTag::S4) {
    // classes: id, (12), (12)(34), (123), (1234)
    static const std::array<std::array<long long, 5>, 5> table = {{
        {1, 1, 1, 1, 1},
        {1, -1, 1, 1, -1},
        {2, 0, 2, -1, 0},
        {3, 1, -1, 0, -1},
        {3, -1, -1, 0, 1},
    }};
    std::array<Scalar, 5> vals;
    for (int k = 0; k < 5; ++k) vals[k] = S(table[index - 1][k]);
    return ClassFunction(tag, vals, std::move(name));
  }
  // classes: id, (12)(34), (123), (12345), (13524)
  std::array<Scalar, 5> vals;
  switch (index) {
    case 1: vals = {S(1), S(1), S(1), S(1), S(1)}; break;
    case 2: vals = {S(3), S(-1), S(0), golden_plus, golden_minus}; break;
    case 3: vals = {S(3), S(-1), S(0), golden_minus, golden_plus}; break;
    case 4: vals = {S(4), S(0), S(1), S(-1), S(-1)}; break;
    case 5: vals = {S(5), S(1), S(-1), S(0), S(0)}; break;
  }
  return ClassFunction(tag, vals, std::move(name));
}

Scalar ClassFunction::at(const Perm& g) const {
  return values_[class_index(tag_, g)];
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (tag_ != o.tag_) throw std::invalid_argument("ClassFunction: group mismatch");
  for (int k = 0; k < 5; ++k) values_[k] += o.values_[k];
  name_ += "+" + o.name_;
  return *this;
}

ClassFunction ClassFunction::scaled(const Scalar& s) const {
  std::array<Scalar, 5> vals;
  for (int k = 0; k < 5; ++k) vals[k] = values_[k] * s;
  return ClassFunction(tag_, vals, s.str() + "*" + name_);
}

Scalar apply_char(const ClassFunction& chi, const AlgElt& a) {
  Scalar s;
  for (const auto& [g, c] : a.terms()) s += chi.at(g) * c;
  return s;
}

Scalar apply_char(const CharEval& chi, const AlgElt& a) {
  Scalar s;
  for (const auto& [g, c] : a.terms()) s += chi(g) * c;
  return s;
}

AlgElt slice_left(const ClassFunction& chi, const Tensor2& t) {
  return slice_left([&chi](const Perm& g) { return chi.at(g); }, t);
}

AlgElt slice_left(const CharEval& chi, const Tensor2& t) {
  AlgElt r(t.degree());
  for (const auto& [k, c] : t.terms()) r.add_term(k.second, chi(k.first) * c);
  return r;
}

AlgElt slice_right(const Tensor2& t, const ClassFunction& chi) {
  return slice_right(t, [&chi](const Perm& g) { return chi.at(g); });
}

AlgElt slice_right(const Tensor2& t, const CharEval& chi) {
  AlgElt r(t.degree());
  for (const auto& [k, c] : t.terms()) r.add_term(k.first, chi(k.second) * c);
  return r;
}

}  // namespace tga
