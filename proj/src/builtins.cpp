#include "tga/builtins.hpp"

#include <algorithm>
#include <stdexcept>

namespace tga {

namespace {

GroupPtr make_group(int degree, const std::vector<const char*>& gens) {
  std::vector<Perm> perms;
  perms.reserve(gens.size());
  for (const char* g : gens) perms.push_back(Perm::parse(g, degree));
  return std::make_shared<ElemAbelian2Group>(degree, std::move(perms));
}

GroupPtr klein_in_a5() { return make_group(5, {"(1 2)(3 4)", "(1 3)(2 4)"}); }
GroupPtr pairs_in_s4() { return make_group(4, {"(1 2)", "(3 4)"}); }
GroupPtr pairs_in_s8() { return make_group(8, {"(1 2)", "(3 4)", "(5 6)", "(7 8)"}); }

Cocycle a5_xi_table() {
  // rows/columns ordered eps, phi1, phi2, phi1 phi2; xi = i
  const Scalar one(1), xi = Scalar::i();
  std::vector<Scalar> t(16, one);
  auto set = [&](uint32_t a, uint32_t b, const Scalar& v) { t[(a << 2) | b] = v; };
  set(1, 2, xi);  set(1, 3, -xi);
  set(2, 1, -xi); set(2, 3, xi);
  set(3, 1, xi);  set(3, 2, -xi);
  return Cocycle(2, std::move(t));
}

std::vector<std::vector<int>> strict_upper(int n) {
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) b[i][j] = 1;
  return b;
}

}  // namespace

const std::vector<std::string>& builtin_cocycle_names() {
  static const std::vector<std::string> names = {"a5-xi",    "a5-rational", "s4-omega",
                                                 "s4-kappa", "s8-omega",    "s8-kappa"};
  return names;
}

bool is_builtin_cocycle(const std::string& name) {
  const auto& names = builtin_cocycle_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

BuiltinSetup builtin_cocycle(const std::string& name) {
  if (name == "a5-xi")
    return {name, "A5", CharContext::make(klein_in_a5()), a5_xi_table()};
  if (name == "a5-rational")
    return {name, "A5", CharContext::make(klein_in_a5()),
            Cocycle::from_bicharacter({{0, 1}, {0, 0}})};
  if (name == "s4-omega")
    return {name, "S4", CharContext::make(pairs_in_s4()),
            Cocycle::from_bicharacter({{0, 1}, {0, 0}})};
  if (name == "s4-kappa")
    return {name, "S4", CharContext::make(pairs_in_s4()),
            Cocycle::from_bicharacter({{1, 0}, {1, 0}})};
  if (name == "s8-omega")
    return {name, "S8", CharContext::make(pairs_in_s8()),
            Cocycle::from_bicharacter(strict_upper(4))};
  if (name == "s8-kappa") {
    auto b = strict_upper(4);
    b[0][2] ^= 1;
    b[2][0] ^= 1;
    return {name, "S8", CharContext::make(pairs_in_s8()), Cocycle::from_bicharacter(b)};
  }
  throw std::invalid_argument("unknown builtin cocycle '" + name + "'");
}

SubgroupTable group_from_spec(const std::string& spec) {
  if (spec.size() < 2 || (spec[0] != 'S' && spec[0] != 'A'))
    throw std::invalid_argument("group spec must be S<n> or A<n>");
  int n = 0;
  for (size_t k = 1; k < spec.size(); ++k) {
    if (!isdigit(static_cast<unsigned char>(spec[k])))
      throw std::invalid_argument("group spec must be S<n> or A<n>");
    n = n * 10 + (spec[k] - '0');
  }
  if (n < 2 || n > Perm::kMaxDegree)
    throw std::invalid_argument("group spec degree out of range");
  return spec[0] == 'S' ? symmetric_group(n) : alternating_group(n);
}

}  // namespace tga
