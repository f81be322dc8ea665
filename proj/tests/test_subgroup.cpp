#include "doctest.h"

#include <algorithm>
#include <set>

#include "tga/subgroup.hpp"
#include "testutil.hpp"

using namespace tga;
using namespace tga::testutil;

namespace {

SubgroupTable klein5() {
  return SubgroupTable(5, {Perm::parse("(1 2)(3 4)", 5), Perm::parse("(1 3)(2 4)", 5)});
}

std::vector<Perm> parse_all(const std::vector<const char*>& texts, int degree) {
  std::vector<Perm> out;
  for (const char* t : texts) out.push_back(Perm::parse(t, degree));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("generate basics") {
  SubgroupTable m4(4, {Perm::parse("(1 2)(3 4)", 4), Perm::parse("(1 3)(2 4)", 4)});
  CHECK(m4.order() == 4);
  CHECK(m4.contains(Perm::parse("(1 4)(2 3)", 4)));

  SubgroupTable m8(8, {Perm::parse("(1 2)", 8), Perm::parse("(3 4)", 8),
                       Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)});
  CHECK(m8.order() == 16);

  CHECK(SubgroupTable::trivial(6).order() == 1);

  CHECK(symmetric_group(4).order() == 24);
  CHECK(symmetric_group(8).order() == 40320);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
}

TEST_CASE("generate is idempotent") {
  SubgroupTable m = klein5();
  SubgroupTable again(5, m.elements());
  CHECK(again.elements() == m.elements());

  SubgroupTable a4 = alternating_group(4);
  CHECK(SubgroupTable(4, a4.elements()).elements() == a4.elements());
}

TEST_CASE("double coset of (1 2 3 4 5) under the Klein subgroup") {
  auto coset = double_coset_of(klein5(), Perm::parse("(1 2 3 4 5)", 5));
  auto expected = parse_all(
      {"(1 2 3 4 5)", "(1 4 3 2 5)", "(1 5)(2 4)", "(1 3 5)", "(1 4 5 3 2)",
       "(1 2 5 3 4)", "(1 5 3)", "(2 4)(3 5)", "(1 3)(4 5)", "(2 5 4)",
       "(1 5 4 3 2)", "(1 2 3 5 4)", "(2 4 5)", "(1 3)(2 5)", "(1 5 2 3 4)",
       "(1 4 3 5 2)"},
      5);
  CHECK(coset == expected);
}

TEST_CASE("double coset degenerate cases") {
  SubgroupTable m = klein5();
  auto coset = double_coset_of(m, Perm::parse("(1 2)(3 4)", 5));
  CHECK(coset == m.elements());

  SubgroupTable m8(8, {Perm::parse("(1 2)", 8), Perm::parse("(3 4)", 8),
                       Perm::parse("(5 6)", 8), Perm::parse("(7 8)", 8)});
  CHECK(double_coset_of(m8, Perm::parse("(1 2 3)", 8)).size() == 64);
}

TEST_CASE("double cosets of Klein subgroup in A5") {
  SubgroupTable m = klein5();
  SubgroupTable a5 = alternating_group(5);
  SubgroupTable a4 =
      SubgroupTable(5, {Perm::parse("(1 2 3)", 5), Perm::parse("(1 2)(3 4)", 5)});
  REQUIRE(a4.order() == 12);

  auto blocks = double_cosets(m, a5);
  size_t inside_a4 = 0, outside = 0;
  size_t total = 0;
  for (const auto& b : blocks) {
    total += b.elements.size();
    if (a4.contains(b.representative)) {
      CHECK(b.elements.size() == 4);
      ++inside_a4;
    } else {
      CHECK(b.elements.size() == 16);
      ++outside;
    }
  }
  CHECK(total == 60);
  CHECK(inside_a4 == 3);
  CHECK(outside == 3);
}

TEST_CASE("double cosets of <(1 2),(3 4)> in S4 have sizes 4, 4, 16") {
  SubgroupTable m(4, {Perm::parse("(1 2)", 4), Perm::parse("(3 4)", 4)});
  SubgroupTable s4 = symmetric_group(4);
  auto blocks = double_cosets(m, s4);
  std::multiset<size_t> sizes;
  for (const auto& b : blocks) sizes.insert(b.elements.size());
  CHECK(sizes == std::multiset<size_t>{4, 4, 16});

  // the size-4 coset away from M is M(1 3)(2 4)M = M(1 3)(2 4)
  auto coset = double_coset_of(m, Perm::parse("(1 3)(2 4)", 4));
  auto expected =
      parse_all({"(1 3)(2 4)", "(1 4)(2 3)", "(1 3 2 4)", "(1 4 2 3)"}, 4);
  CHECK(coset == expected);
}

TEST_CASE("double cosets: M = G gives one block") {
  SubgroupTable m = klein5();
  auto blocks = double_cosets(m, m);
  REQUIRE(blocks.size() == 1);
  CHECK(blocks[0].elements == m.elements());
  CHECK(blocks[0].representative.is_identity());
}

TEST_CASE("double cosets requires containment") {
  SubgroupTable m(4, {Perm::parse("(1 2)", 4), Perm::parse("(3 4)", 4)});
  CHECK_THROWS(double_cosets(m, alternating_group(4)));
}

TEST_CASE("double cosets partition G with the index formula") {
  SubgroupTable m = klein5();
  SubgroupTable g = alternating_group(5);
  auto blocks = double_cosets(m, g);

  std::set<Perm> seen;
  for (const auto& b : blocks) {
    // index formula |M tau M| * |M cap tau M tau^-1| = |M|^2
    SubgroupTable conj = conjugated_subgroup(m, b.representative);
    size_t stab = intersect(m, conj).order();
    CHECK(b.elements.size() * stab == m.order() * m.order());

    for (const Perm& p : b.elements) {
      CHECK(!seen.count(p));
      seen.insert(p);
    }
    // closure under left/right multiplication by M
    for (const Perm& mm : m.elements()) {
      CHECK(std::binary_search(b.elements.begin(), b.elements.end(),
                               mm * b.representative));
      CHECK(std::binary_search(b.elements.begin(), b.elements.end(),
                               b.representative * mm));
    }
  }
  CHECK(seen.size() == g.order());
}
