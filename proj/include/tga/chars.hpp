#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tga/algelt.hpp"
#include "tga/subgroup.hpp"

namespace tga {

/// Elementary abelian 2-subgroup of S_n with an ordered, independent generator
/// list t_1..t_k.  Elements are addressed by exponent masks: bit j-1 of the
/// mask is the exponent of t_j.
class ElemAbelian2Group {
public:
  ElemAbelian2Group(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  uint32_t order() const { return 1u << rank(); }
  const std::vector<Perm>& generators() const { return generators_; }

  const Perm& element(uint32_t mask) const;
  std::optional<uint32_t> mask_of(const Perm& m) const;
  bool contains(const Perm& m) const { return mask_of(m).has_value(); }
  SubgroupTable table() const;

private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> element_by_mask_;
  std::map<Perm, uint32_t> mask_by_element_;
};

using GroupPtr = std::shared_ptr<const ElemAbelian2Group>;

/// Character of an ElemAbelian2Group given by a sign bit per generator:
/// value on t_j is (-1)^{bit j-1}, multiplicative on products.
class LinChar {
public:
  LinChar(GroupPtr group, uint32_t bits);

  const GroupPtr& group() const { return group_; }
  uint32_t bits() const { return bits_; }
  bool is_trivial() const { return bits_ == 0; }

  int sign_on_mask(uint32_t elem_mask) const;
  int sign(const Perm& m) const;     // throws if m is not in the subgroup
  Scalar value(const Perm& m) const;

  LinChar operator*(const LinChar& o) const;
  LinChar inverse() const { return *this; }

  friend bool operator==(const LinChar& a, const LinChar& b) {
    return a.group_ == b.group_ && a.bits_ == b.bits_;
  }

private:
  GroupPtr group_;
  uint32_t bits_;
};

/// All 2^k characters, ordered by bits.
std::vector<LinChar> char_group(const GroupPtr& group);

/// The character m -> phi(h m h^-1); requires h to normalize the subgroup.
LinChar conj_act(const Perm& h, const LinChar& phi);

/// e_phi = (1/|M|) sum_m phi(m^-1) m, the primitive idempotent attached to phi.
AlgElt idempotent(const LinChar& phi);

/// Class function on S4 or A5 with the exact character-table values; the two
/// classes of 5-cycles in A5 are separated by explicit conjugacy membership.
class ClassFunction {
public:
  enum class GroupTag { S4, A5 };

  static ClassFunction irreducible(GroupTag tag, int index);  // 1-based chi_k
  static ClassFunction s4(int index) { return irreducible(GroupTag::S4, index); }
  static ClassFunction a5(int index) { return irreducible(GroupTag::A5, index); }

  GroupTag group() const { return tag_; }
  int degree() const { return tag_ == GroupTag::S4 ? 4 : 5; }
  const std::string& name() const { return name_; }

  Scalar at(const Perm& g) const;  // throws if g is outside the group

  ClassFunction& operator+=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  ClassFunction scaled(const Scalar& s) const;

private:
  ClassFunction(GroupTag tag, std::array<Scalar, 5> values, std::string name)
      : tag_(tag), values_(std::move(values)), name_(std::move(name)) {}
  static int class_index(GroupTag tag, const Perm& g);

  GroupTag tag_;
  std::array<Scalar, 5> values_;  // indexed by conjugacy class
  std::string name_;
};

using CharEval = std::function<Scalar(const Perm&)>;

Scalar apply_char(const ClassFunction& chi, const AlgElt& a);
Scalar apply_char(const CharEval& chi, const AlgElt& a);

AlgElt slice_left(const ClassFunction& chi, const Tensor2& t);   // (chi (x) Id)
AlgElt slice_left(const CharEval& chi, const Tensor2& t);
AlgElt slice_right(const Tensor2& t, const ClassFunction& chi);  // (Id (x) chi)
AlgElt slice_right(const Tensor2& t, const CharEval& chi);

}  // namespace tga
