#pragma once

// JSON documents for bases, series and monomial lists.

#include <json.hpp>

#include "qscov/groebner.hpp"
#include "qscov/hilbert.hpp"

namespace qscov {

using Json = nlohmann::ordered_json;

struct BasisDocument {
  unsigned m = 1;
  GroebnerBasis basis;

  friend bool operator==(const BasisDocument&, const BasisDocument&) = default;
};

inline Json basis_to_json(const GroebnerBasis& b, unsigned m) {
  Json gens = Json::array();
  for (const auto& g : b.generators) gens.push_back(to_string(g));
  return Json{{"n", b.nvars}, {"m", m}, {"degree_bound", b.degree_bound}, {"reduced", b.reduced}, {"generators", gens}};
}

inline BasisDocument basis_from_json(const Json& j) {
  try {
    BasisDocument doc;
    doc.m = j.at("m").get<unsigned>();
    doc.basis.nvars = j.at("n").get<std::size_t>();
    doc.basis.degree_bound = j.at("degree_bound").get<unsigned>();
    doc.basis.reduced = j.at("reduced").get<bool>();
    for (const auto& g : j.at("generators"))
      doc.basis.generators.push_back(parse_polynomial<Rational>(doc.basis.nvars, g.get<std::string>()));
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("basis_from_json: ") + e.what());
  }
}

inline Json series_to_json(const HilbertSeries& h) { return Json(h.coefficients()); }

inline HilbertSeries series_from_json(const Json& j) {
  try {
    return HilbertSeries(j.get<std::vector<std::uint64_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("series_from_json: ") + e.what());
  }
}

inline Json vectors_to_json(const std::vector<ExponentVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_string(v));
  return out;
}

}  // namespace qscov
