#pragma once

#include <json.hpp>

#include "cwp/forms.hpp"
#include "cwp/surface.hpp"
#include "cwp/verify.hpp"

namespace cwp {

using json = nlohmann::json;

// Laurent polynomial: {"arity": n, "terms": [{"exp": [...], "coef": "decimal"}]}
json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

// Rational function: {"num": poly, "den": poly}
json rf_to_json(const RationalFunction& f);
RationalFunction rf_from_json(const json& j);

// Seed: {"n": int, "Z": [[int]], "variables": [rf...]} — "variables" may be
// omitted on input for the identity chart.
json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j);

json exchange_to_json(const ExchangeMatrix& Z);
ExchangeMatrix exchange_from_json(const json& j);

// Rational matrices as arrays of strings like "3/2".
json qmat_to_json(const QMat& m);
QMat qmat_from_json(const json& j);

// Triangulation: {"triangles": [[s,s,s]], "pairing": [[s,s]], "edge_names": [...]}
json triangulation_to_json(const IdealTriangulation& t);
IdealTriangulation triangulation_from_json(const json& j);

// Verification report: {"check", "surface", "word", "pass", "witness"}
json report_json(const std::string& check, const std::string& surface,
                 const std::vector<int>& word, bool pass, json witness = json::object());

}  // namespace cwp
