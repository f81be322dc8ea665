#pragma once

#include <optional>
#include <vector>

#include "tga/perm.hpp"

namespace tga {

/// A subgroup of S_n given by generators together with the full element list,
/// kept sorted lexicographically on image words.  Immutable after construction.
class SubgroupTable {
public:
  SubgroupTable(int degree, std::vector<Perm> generators);
  static SubgroupTable trivial(int degree) { return SubgroupTable(degree, {}); }

  int degree() const { return degree_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  std::optional<size_t> index_of(const Perm& p) const;
  bool subgroup_of(const SubgroupTable& g) const;

private:
  int degree_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

SubgroupTable symmetric_group(int n);
SubgroupTable alternating_group(int n);

SubgroupTable conjugated_subgroup(const SubgroupTable& h, const Perm& g);
SubgroupTable intersect(const SubgroupTable& a, const SubgroupTable& b);

struct DoubleCoset {
  Perm representative;          // canonically least element
  std::vector<Perm> elements;   // sorted
};

/// Partition of G into double cosets M\tau M; requires M <= G.
std::vector<DoubleCoset> double_cosets(const SubgroupTable& m, const SubgroupTable& g);

/// The set M\tau M, sorted.
std::vector<Perm> double_coset_of(const SubgroupTable& m, const Perm& tau);

}  // namespace tga
