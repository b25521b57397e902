#pragma once

#include <json.hpp>

#include "jackmaps/multivar_poly.hpp"
#include "jackmaps/polynomial.hpp"
#include "jackmaps/quad_ext.hpp"
#include "jackmaps/rational.hpp"

namespace jackmaps {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) { return format_rational(r); }

// Coefficient array, lowest degree first.
inline Json gamma_poly_json(const GammaPoly& p) {
  Json arr = Json::array();
  for (int d = 0; d <= p.degree(); ++d) arr.push_back(rational_json(p.coeff(d)));
  return arr;
}

inline Json quad_ext_json(const QuadExt& v) {
  return Json{{"alpha", rational_json(v.alpha)},
              {"rat", rational_json(v.rat)},
              {"irr", rational_json(v.irr)}};
}

// Terms sorted by the graded-lex monomial order; exponent maps list only
// nonzero exponents, keyed by variable name.
inline Json multivar_poly_json(const MultivarPoly& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json exps = Json::object();
    for (size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) exps[p.vars()[i]] = m[i];
    terms.push_back(Json{{"exps", exps}, {"coeff", rational_json(c)}});
  }
  return Json{{"vars", p.vars()}, {"terms", terms}};
}

}  // namespace jackmaps
