#include "tga/subgroup.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace tga {

namespace {

std::vector<Perm> bfs_closure(int degree, const std::vector<Perm>& gens) {
  std::unordered_set<uint64_t> seen;
  std::deque<Perm> queue;
  std::vector<Perm> out;
  Perm id(degree);
  seen.insert(id.key());
  queue.push_back(id);
  out.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next.key()).second) {
        queue.push_back(next);
        out.push_back(next);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SubgroupTable::SubgroupTable(int degree, std::vector<Perm> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const Perm& g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("SubgroupTable: generator degree mismatch");
  elements_ = bfs_closure(degree_, generators_);
}

bool SubgroupTable::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::optional<size_t> SubgroupTable::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return std::nullopt;
  return static_cast<size_t>(it - elements_.begin());
}

bool SubgroupTable::subgroup_of(const SubgroupTable& g) const {
  if (degree_ != g.degree()) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const Perm& p) { return g.contains(p); });
}

SubgroupTable symmetric_group(int n) {
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(Perm::transposition(n, 1, 2));
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = (k + 1) % n + 1;
    gens.push_back(Perm::from_images(img));
  }
  return SubgroupTable(n, std::move(gens));
}

SubgroupTable alternating_group(int n) {
  std::vector<Perm> gens;
  if (n >= 3) gens.push_back(Perm::parse("(1 2 3)", n));
  if (n >= 4) {
    // (1 2 ... n) for odd n, (2 3 ... n) for even n
    std::vector<int> img(n);
    for (int k = 0; k < n; ++k) img[k] = k + 1;
    if (n % 2 == 1) {
      for (int k = 0; k < n; ++k) img[k] = (k + 1) % n + 1;
    } else {
      for (int k = 1; k < n; ++k) img[k] = k + 2 > n ? 2 : k + 2;
    }
    gens.push_back(Perm::from_images(img));
  }
  return SubgroupTable(n, std::move(gens));
}

SubgroupTable conjugated_subgroup(const SubgroupTable& h, const Perm& g) {
  std::vector<Perm> gens;
  gens.reserve(h.generators().size());
  for (const Perm& x : h.generators()) gens.push_back(x.conjugated_by(g));
  return SubgroupTable(h.degree(), std::move(gens));
}

SubgroupTable intersect(const SubgroupTable& a, const SubgroupTable& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("intersect: degree mismatch");
  // The intersection of two subgroups is a subgroup; list it directly.
  std::vector<Perm> common;
  for (const Perm& p : a.elements())
    if (b.contains(p)) common.push_back(p);
  SubgroupTable result(a.degree(), common);
  if (result.order() != common.size())
    throw std::logic_error("intersect: closure changed the element count");
  return result;
}

std::vector<Perm> double_coset_of(const SubgroupTable& m, const Perm& tau) {
  std::unordered_set<uint64_t> seen;
  std::vector<Perm> out;
  for (const Perm& m1 : m.elements())
    for (const Perm& m2 : m.elements()) {
      Perm p = m1 * tau * m2;
      if (seen.insert(p.key()).second) out.push_back(p);
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DoubleCoset> double_cosets(const SubgroupTable& m, const SubgroupTable& g) {
  if (!m.subgroup_of(g))
    throw std::invalid_argument("double_cosets: M is not a subgroup of G");
  std::vector<DoubleCoset> out;
  std::unordered_set<uint64_t> assigned;
  for (const Perm& tau : g.elements()) {
    if (assigned.count(tau.key())) continue;
    std::vector<Perm> elems = double_coset_of(m, tau);
    for (const Perm& p : elems) assigned.insert(p.key());
    Perm rep = elems.front();  // least element; elems is sorted
    out.push_back(DoubleCoset{std::move(rep), std::move(elems)});
  }
  return out;
}

}  // namespace tga
