#pragma once

#include "syzstab/construct.hpp"
#include "syzstab/exterior.hpp"
#include "syzstab/secant.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace syzstab::io {

using json = nlohmann::json;

struct MonomialSetDocument {
  MonomialSet set;
  std::string label;
};

/// Parses {"n": ..., "monomials": [...], "label"?}. Entries are exponent
/// vectors or convenience strings like "X0^2*X1" (input only). Duplicates
/// and length mismatches are rejected with positional messages.
MonomialSetDocument parse_monomial_set(const json& doc);
json serialize_monomial_set(const MonomialSet& set, const std::string& label = "");

json serialize_monomial(const Monomial& m);

json serialize_verdict(const Verdict& v, const json& input_echo,
                       const std::string& mode);
Verdict parse_verdict(const json& doc);

json serialize_trace(const ConstructionTrace& t);
ConstructionTrace parse_trace(const json& doc);

/// {"m": ..., "r": ..., "terms": [{"indices": [...], "coeff": "p/q"}...]}
ExteriorElement parse_exterior(const json& doc);
json serialize_exterior(const ExteriorElement& w);

/// {"matrix": [[6 rational strings] x 5]}
RationalMatrix parse_matrix(const json& doc);
/// {"functional": [6 rational strings]}
QuadricFunctional parse_functional(const json& doc);

json rational_json(const Rational& x);
Rational parse_rational_json(const json& v, const std::string& where);

/// Wraps nlohmann parsing so malformed text surfaces as
/// std::invalid_argument with the parser's position information.
json parse_json_text(const std::string& text);

}  // namespace syzstab::io
