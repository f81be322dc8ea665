#include "doctest.h"

#include "tga/rational.hpp"
#include "tga/scalar.hpp"
#include "testutil.hpp"

using namespace tga;
using namespace tga::testutil;

namespace {

Scalar half_plus_half_sqrt5() {  // (1 + r5)/2
  return Scalar(Rational(1, 2), Rational(0), Rational(1, 2), Rational(0));
}

QuarticPoly quartic(long long c0, long long c1, long long c2, long long c3) {
  QuarticPoly p;
  p.coeff = {Rational(c0), Rational(c1), Rational(c2), Rational(c3), Rational(1)};
  return p;
}

using Mat = std::array<std::array<Rational, 4>, 4>;

Mat matmul(const Mat& x, const Mat& y) {
  Mat r{};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k)
      for (int j = 0; j < 4; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(27, 4).den_two_valuation() == 2);
  CHECK(Rational(3, 2).den_two_valuation() == 1);
  CHECK(Rational(5).den_two_valuation() == 0);
  CHECK(Rational::parse("27/4") == Rational(27, 4));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1, 2) / Rational(0));
  CHECK(Rational(1, 2).str() == "1/2");
  CHECK(Rational(-7).str() == "-7");
}

TEST_CASE("scalar defining relations") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::sqrt5() * Scalar::sqrt5() == Scalar(5));
  CHECK(Scalar::i_sqrt5() * Scalar::i_sqrt5() == Scalar(-5));
  CHECK(Scalar::i() * Scalar::sqrt5() == Scalar::i_sqrt5());
  // (1+r5)/2 * (1-r5)/2 = (1-5)/4 = -1
  Scalar golden = half_plus_half_sqrt5();
  Scalar conj = golden.conj_r5();
  CHECK(golden * conj == Scalar(-1));
}

TEST_CASE("scalar division and inverse") {
  Scalar x = Scalar(Rational(1), Rational(2), Rational(0), Rational(-1));
  CHECK(x * x.inverse() == Scalar(1));
  CHECK((x / x) == Scalar(1));
  CHECK_THROWS(x / Scalar(0));
  CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("field axioms on random samples") {
  for (int k = 0; k < 200; ++k) {
    Scalar x = random_scalar(), y = random_scalar(), z = random_scalar();
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x + y == y + x);
  }
  for (int k = 0; k < 200; ++k) {
    Scalar x = random_nonzero_scalar();
    CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("char_poly examples") {
  // (t-3)^4 = t^4 - 12t^3 + 54t^2 - 108t + 81
  CHECK(Scalar(3).char_poly() == quartic(81, -108, 54, -12));
  // (t^2+1)^2 = t^4 + 2t^2 + 1
  CHECK(Scalar::i().char_poly() == quartic(1, 0, 2, 0));
  // (t^2-t-1)^2 = t^4 - 2t^3 - t^2 + 2t + 1
  CHECK(half_plus_half_sqrt5().char_poly() == quartic(1, 2, -1, -2));
}

TEST_CASE("char_poly is the Cayley-Hamilton annihilator") {
  for (int k = 0; k < 50; ++k) {
    Scalar x = random_scalar();
    QuarticPoly p = x.char_poly();
    Mat a = x.mult_matrix();
    Mat acc{};  // Horner: (((1*a + c3)*a + c2)*a + c1)*a + c0
    for (int i = 0; i < 4; ++i) acc[i][i] = Rational(1);
    for (int deg = 3; deg >= 0; --deg) {
      acc = matmul(acc, a);
      for (int i = 0; i < 4; ++i) acc[i][i] += p.coeff[deg];
    }
    bool zero = true;
    for (auto& row : acc)
      for (auto& v : row) zero = zero && v.is_zero();
    CHECK(zero);
  }
}

TEST_CASE("is_algebraic_integer examples") {
  CHECK_FALSE(Scalar(Rational(27, 4)).is_algebraic_integer());
  CHECK(half_plus_half_sqrt5().is_algebraic_integer());
  CHECK(Scalar(1).is_algebraic_integer());
  CHECK(Scalar::i().is_algebraic_integer());
  CHECK_FALSE(Scalar(Rational(1, 2)).is_algebraic_integer());
  CHECK_FALSE(Scalar(Rational(1, 2), Rational(1, 2), Rational(0), Rational(0))
                  .is_algebraic_integer());
}

TEST_CASE("integrality is closed under add and mul") {
  std::uniform_int_distribution<int> small(-4, 4);
  auto random_integral = [&] {
    Scalar s(Rational(small(rng())), Rational(small(rng())), Rational(small(rng())),
             Rational(small(rng())));
    if (small(rng()) > 0) s += half_plus_half_sqrt5();
    return s;
  };
  for (int k = 0; k < 200; ++k) {
    Scalar x = random_integral(), y = random_integral();
    REQUIRE(x.is_algebraic_integer());
    REQUIRE(y.is_algebraic_integer());
    CHECK((x + y).is_algebraic_integer());
    CHECK((x * y).is_algebraic_integer());
  }
}

TEST_CASE("two_adic_defect examples and scaling law") {
  CHECK(Scalar(Rational(27, 4)).two_adic_defect() == 2);
  CHECK(Scalar(Rational(3, 2)).two_adic_defect() == 1);
  CHECK(Scalar(5).two_adic_defect() == 0);
  // (1+r5)/2 has defect 1 in coordinates yet is an algebraic integer
  CHECK(half_plus_half_sqrt5().two_adic_defect() == 1);
  CHECK(half_plus_half_sqrt5().is_algebraic_integer());

  for (int trial = 0; trial < 200; ++trial) {
    Scalar x = random_scalar();
    int defect = x.two_adic_defect();
    std::uniform_int_distribution<int> kd(0, 5);
    int k = kd(rng());
    Scalar scaled = x * Scalar(Rational(BigInt(1) << k));
    CHECK(scaled.two_adic_defect() == std::max(defect - k, 0));
  }
}

TEST_CASE("scalar rendering") {
  CHECK(Scalar(Rational(27, 4)).str() == "27/4");
  CHECK(half_plus_half_sqrt5().str() == "1/2 + 1/2*r5");
  CHECK((-Scalar::i()).str() == "-i");
  CHECK(Scalar(0).str() == "0");
  CHECK(Scalar(Rational(0), Rational(-1), Rational(0), Rational(2)).str() == "-i + 2*i*r5");
}
