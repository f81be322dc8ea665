#include "tga/serialize.hpp"

#include <stdexcept>

namespace tga {

using nlohmann::json;

json scalar_to_json(const Scalar& s) {
  return json::array({s.a().str(), s.b().str(), s.c().str(), s.d().str()});
}

Scalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4)
    throw std::invalid_argument("scalar_from_json: expected 4 components");
  return Scalar(Rational::parse(j[0].get<std::string>()),
                Rational::parse(j[1].get<std::string>()),
                Rational::parse(j[2].get<std::string>()),
                Rational::parse(j[3].get<std::string>()));
}

json algelt_to_json(const AlgElt& a) {
  json terms = json::array();
  for (const auto& [g, c] : a.terms()) terms.push_back({g.str(), scalar_to_json(c)});
  return {{"degree", a.degree()}, {"terms", terms}};
}

AlgElt algelt_from_json(const json& j) {
  AlgElt a(j.at("degree").get<int>());
  for (const auto& term : j.at("terms"))
    a.add_term(Perm::parse(term[0].get<std::string>(), a.degree()),
               scalar_from_json(term[1]));
  return a;
}

json tensor2_to_json(const Tensor2& t) {
  json terms = json::array();
  for (const auto& [k, c] : t.terms())
    terms.push_back({k.first.str(), k.second.str(), scalar_to_json(c)});
  return {{"degree", t.degree()}, {"terms", terms}};
}

Tensor2 tensor2_from_json(const json& j) {
  Tensor2 t(j.at("degree").get<int>());
  for (const auto& term : j.at("terms"))
    t.add_term(Perm::parse(term[0].get<std::string>(), t.degree()),
               Perm::parse(term[1].get<std::string>(), t.degree()),
               scalar_from_json(term[2]));
  return t;
}

}  // namespace tga
