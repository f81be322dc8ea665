#pragma once

#include <random>
#include <vector>

#include "tga/algelt.hpp"
#include "tga/perm.hpp"
#include "tga/rational.hpp"
#include "tga/scalar.hpp"

namespace tga::testutil {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline Rational random_rational(int max_num = 20, int max_den = 8) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rational(num(rng()), den(rng()));
}

inline Scalar random_scalar() {
  return Scalar(random_rational(), random_rational(), random_rational(), random_rational());
}

inline Scalar random_nonzero_scalar() {
  for (;;) {
    Scalar s = random_scalar();
    if (!s.is_zero()) return s;
  }
}

inline Perm random_perm(int degree) {
  std::vector<int> img(degree);
  for (int k = 0; k < degree; ++k) img[k] = k + 1;
  std::shuffle(img.begin(), img.end(), rng());
  return Perm::from_images(img);
}

inline AlgElt random_algelt(int degree, int terms = 4) {
  AlgElt a(degree);
  for (int k = 0; k < terms; ++k) a.add_term(random_perm(degree), random_scalar());
  return a;
}

// Fourth root of unity i^k.
inline Scalar fourth_root(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar::i();
    case 2: return Scalar(-1);
    default: return -Scalar::i();
  }
}

inline Scalar random_fourth_root() {
  std::uniform_int_distribution<int> d(0, 3);
  return fourth_root(d(rng()));
}

}  // namespace tga::testutil
