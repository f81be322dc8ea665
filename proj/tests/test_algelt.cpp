#include "doctest.h"

#include "tga/algelt.hpp"
#include "testutil.hpp"

using namespace tga;
using namespace tga::testutil;

namespace {

AlgElt from_terms(int degree, const std::vector<std::pair<const char*, Rational>>& terms) {
  AlgElt a(degree);
  for (const auto& [cyc, coeff] : terms) a.add_term(Perm::parse(cyc, degree), Scalar(coeff));
  return a;
}

AlgElt mul_legs(const Tensor2& t, bool antipode_first_leg) {
  AlgElt r(t.degree());
  for (const auto& [k, c] : t.terms()) {
    Perm left = antipode_first_leg ? k.first.inverse() : k.first;
    r.add_term(left * k.second, c);
  }
  return r;
}

}  // namespace

TEST_CASE("algebra product basics") {
  AlgElt a = random_algelt(4);
  CHECK(AlgElt::unit(4) * a == a);
  CHECK(a * AlgElt::unit(4) == a);

  // x = (id - (1 2)(3 4))/2 is idempotent
  AlgElt x = from_terms(4, {{"id", Rational(1, 2)}, {"(1 2)(3 4)", Rational(-1, 2)}});
  CHECK(x * x == x);

  // r^2 = x for the 8-term element r in K[S4]
  AlgElt r = from_terms(4, {{"(1 3)", Rational(1, 4)},
                            {"(1 2 3 4)", Rational(-1, 4)},
                            {"(2 3)", Rational(1, 4)},
                            {"(1 3 4 2)", Rational(-1, 4)},
                            {"(1 2 4 3)", Rational(-1, 4)},
                            {"(1 4)", Rational(1, 4)},
                            {"(1 4 3 2)", Rational(-1, 4)},
                            {"(2 4)", Rational(1, 4)}});
  CHECK(r * r == x);
}

TEST_CASE("self-aliasing compound assignment") {
  AlgElt a = random_algelt(4);
  AlgElt doubled = a.scaled(Scalar(2));
  AlgElt copy = a;
  copy += copy;
  CHECK(copy == doubled);
  copy -= copy;
  CHECK(copy.is_zero());

  Tensor2 t = Tensor2::pure(a, a);
  Tensor2 t2 = t.scaled(Scalar(2));
  t += t;
  CHECK(t == t2);
}

TEST_CASE("zero coefficients are purged") {
  AlgElt a(4);
  Perm g = Perm::parse("(1 2)", 4);
  a.add_term(g, Scalar(1));
  a.add_term(g, Scalar(-1));
  CHECK(a.is_zero());
  CHECK(a.term_count() == 0);

  AlgElt b = AlgElt::of(g) - AlgElt::of(g);
  CHECK(b == AlgElt(4));
}

TEST_CASE("coproduct of a group element is group-like") {
  Perm g = Perm::parse("(1 2 3)", 5);
  CHECK(coproduct(AlgElt::of(g)) == Tensor2::pure(AlgElt::of(g), AlgElt::of(g)));
}

TEST_CASE("Hopf axioms of K[G] on random elements") {
  for (int k = 0; k < 200; ++k) {
    AlgElt a = random_algelt(5);

    // coassociativity
    Tensor2 d = coproduct(a);
    auto delta = [](const Perm& g) { return coproduct(AlgElt::of(g)); };
    CHECK(expand_left_leg(d, delta) == expand_right_leg(d, delta));
    CHECK(expand_left_leg(d, delta) == coproduct3(a));

    // counit law
    CHECK(d.counit_left() == a);
    CHECK(d.counit_right() == a);

    // antipode law: m(S (x) Id)Delta(a) = eps(a) 1
    CHECK(mul_legs(d, true) == AlgElt::unit(5).scaled(a.counit()));

    // antipode is an anti-automorphism on products of group-likes
    AlgElt b = random_algelt(5);
    CHECK((a * b).antipode() == b.antipode() * a.antipode());
  }
}

TEST_CASE("tensor products act componentwise") {
  for (int k = 0; k < 50; ++k) {
    AlgElt a = random_algelt(4, 2), b = random_algelt(4, 2);
    AlgElt c = random_algelt(4, 2), d = random_algelt(4, 2);
    CHECK(Tensor2::pure(a, b) * Tensor2::pure(c, d) == Tensor2::pure(a * c, b * d));
    CHECK(Tensor3::pure(a, b, c) * Tensor3::pure(c, d, a) ==
          Tensor3::pure(a * c, b * d, c * a));
  }
}

TEST_CASE("renaming applies a point relabeling") {
  AlgElt x = from_terms(8, {{"id", Rational(1, 2)}, {"(1 2)(3 4)", Rational(-1, 2)}});
  // 1->3, 2->4, 3->5, 4->6, 5->1, 6->2
  Perm rho = Perm::parse("(1 3 5)(2 4 6)", 8);
  AlgElt expected = from_terms(8, {{"id", Rational(1, 2)}, {"(3 4)(5 6)", Rational(-1, 2)}});
  CHECK(x.renamed(rho) == expected);
}

TEST_CASE("pad and restrict round trip") {
  AlgElt a = random_algelt(4);
  CHECK(a.padded(8).restricted(4) == a);
  AlgElt moves_high = AlgElt::of(Perm::parse("(5 6)", 8));
  CHECK_THROWS(moves_high.restricted(4));
}
