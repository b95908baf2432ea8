#include "syzstab/io.hpp"

#include "syzstab/version.hpp"

#include <stdexcept>
#include <string>

namespace syzstab::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::invalid_argument(where + ": " + what);
}

int int_field(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    fail(key, "expected an integer field");
  }
  return doc[key].get<int>();
}

/// "X0^2*X1" or "1"; repeated factors accumulate.
Monomial parse_monomial_string(const std::string& text, int n,
                               const std::string& where) {
  std::vector<int> exps(static_cast<size_t>(n) + 1, 0);
  std::string s;
  for (char c : text) {
    if (c != ' ') s += c;
  }
  if (s == "1") return Monomial(std::move(exps));
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'X' && s[pos] != 'x') fail(where, "expected a variable like X0");
    ++pos;
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail(where, "missing variable index after X");
    const int var = std::stoi(s.substr(start, pos - start));
    if (var > n) {
      fail(where, "variable X" + std::to_string(var) + " exceeds n = " +
                      std::to_string(n));
    }
    int exp = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail(where, "missing exponent after ^");
      exp = std::stoi(s.substr(start, pos - start));
    }
    exps[static_cast<size_t>(var)] += exp;
    if (pos < s.size()) {
      if (s[pos] != '*') fail(where, "expected '*' between factors");
      ++pos;
      if (pos == s.size()) fail(where, "trailing '*'");
    }
  }
  return Monomial(std::move(exps));
}

Monomial parse_monomial_entry(const json& entry, int n, const std::string& where) {
  if (entry.is_string()) {
    return parse_monomial_string(entry.get<std::string>(), n, where);
  }
  if (!entry.is_array()) fail(where, "expected an exponent array or a string");
  std::vector<int> exps;
  for (const json& e : entry) {
    if (!e.is_number_integer()) fail(where, "exponents must be integers");
    exps.push_back(e.get<int>());
  }
  if (static_cast<int>(exps.size()) != n + 1) {
    fail(where, "exponent vector has " + std::to_string(exps.size()) +
                    " entries, expected " + std::to_string(n + 1));
  }
  for (int e : exps) {
    if (e < 0) fail(where, "negative exponent");
  }
  return Monomial(std::move(exps));
}

const char* witness_kind_name(Witness::Kind k) {
  return k == Witness::Kind::ColonMonomial ? "colon-monomial" : "subset";
}

}  // namespace

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

json rational_json(const Rational& x) { return rational_to_string(x); }

Rational parse_rational_json(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (!v.is_string()) fail(where, "expected a rational string like \"5\" or \"5/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where, e.what());
  }
}

MonomialSetDocument parse_monomial_set(const json& doc) {
  if (!doc.is_object()) fail("document", "expected a JSON object");
  const int n = int_field(doc, "n");
  if (n < 1) fail("n", "must be >= 1");
  if (!doc.contains("monomials") || !doc["monomials"].is_array()) {
    fail("monomials", "expected an array");
  }
  std::vector<Monomial> members;
  std::vector<size_t> first_seen;
  size_t index = 0;
  for (const json& entry : doc["monomials"]) {
    const std::string where = "monomials[" + std::to_string(index) + "]";
    Monomial m = parse_monomial_entry(entry, n, where);
    for (size_t prev = 0; prev < members.size(); ++prev) {
      if (members[prev] == m) {
        fail(where, "duplicate of monomials[" + std::to_string(first_seen[prev]) +
                        "]");
      }
    }
    first_seen.push_back(index);
    members.push_back(std::move(m));
    ++index;
  }
  if (members.empty()) fail("monomials", "must not be empty");

  MonomialSetDocument out{MonomialSet(n, std::move(members)), ""};
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) fail("label", "expected a string");
    out.label = doc["label"].get<std::string>();
  }
  return out;
}

json serialize_monomial(const Monomial& m) { return json(m.exponents()); }

json serialize_monomial_set(const MonomialSet& set, const std::string& label) {
  json doc;
  doc["n"] = set.n();
  json monos = json::array();
  for (const Monomial& m : set.monomials()) monos.push_back(serialize_monomial(m));
  doc["monomials"] = std::move(monos);
  if (!label.empty()) doc["label"] = label;
  return doc;
}

json serialize_verdict(const Verdict& v, const json& input_echo,
                       const std::string& mode) {
  json doc;
  doc["status"] = to_string(v.status);
  doc["reference_slope"] = rational_json(v.reference_slope);
  doc["extremal_value"] =
      v.extremal_value ? rational_json(*v.extremal_value) : json(nullptr);
  json witnesses = json::array();
  for (const Witness& w : v.witnesses) {
    json entry;
    entry["kind"] = witness_kind_name(w.kind);
    if (w.kind == Witness::Kind::ColonMonomial) {
      entry["monomial"] = serialize_monomial(*w.u);
      entry["e"] = w.e();
    } else {
      entry["indices"] = w.subset;
    }
    entry["lhs"] = rational_json(w.lhs);
    witnesses.push_back(std::move(entry));
  }
  doc["witnesses"] = std::move(witnesses);
  doc["normalized_by"] =
      v.normalized_by ? serialize_monomial(*v.normalized_by) : json(nullptr);
  doc["mode"] = mode;
  if (!input_echo.is_null()) doc["input"] = input_echo;
  doc["version"] = kVersion;
  return doc;
}

Verdict parse_verdict(const json& doc) {
  Verdict v;
  const std::string status = doc.at("status").get<std::string>();
  if (status == "Stable") {
    v.status = Status::Stable;
  } else if (status == "StrictlySemistable") {
    v.status = Status::StrictlySemistable;
  } else if (status == "Unstable") {
    v.status = Status::Unstable;
  } else {
    fail("status", "unknown status \"" + status + "\"");
  }
  v.reference_slope = parse_rational_json(doc.at("reference_slope"), "reference_slope");
  if (!doc.at("extremal_value").is_null()) {
    v.extremal_value = parse_rational_json(doc["extremal_value"], "extremal_value");
  }
  for (const json& entry : doc.at("witnesses")) {
    Witness w;
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "colon-monomial") {
      w.kind = Witness::Kind::ColonMonomial;
      std::vector<int> exps = entry.at("monomial").get<std::vector<int>>();
      w.u = Monomial(std::move(exps));
    } else if (kind == "subset") {
      w.kind = Witness::Kind::Subset;
      w.subset = entry.at("indices").get<std::vector<int>>();
    } else {
      fail("witnesses", "unknown kind \"" + kind + "\"");
    }
    w.lhs = parse_rational_json(entry.at("lhs"), "lhs");
    v.witnesses.push_back(std::move(w));
  }
  if (doc.contains("normalized_by") && !doc["normalized_by"].is_null()) {
    std::vector<int> exps = doc["normalized_by"].get<std::vector<int>>();
    v.normalized_by = Monomial(std::move(exps));
  }
  return v;
}

json serialize_trace(const ConstructionTrace& t) {
  json doc;
  doc["rule"] = t.rule;
  if (!t.variant.empty()) doc["variant"] = t.variant;
  json params = json::object();
  for (const auto& [key, value] : t.params) params[key] = value;
  doc["params"] = std::move(params);
  if (!t.inserted.empty()) doc["inserted"] = t.inserted;
  if (!t.children.empty()) {
    json children = json::array();
    for (const ConstructionTrace& c : t.children) {
      children.push_back(serialize_trace(c));
    }
    doc["children"] = std::move(children);
  }
  return doc;
}

ConstructionTrace parse_trace(const json& doc) {
  ConstructionTrace t;
  t.rule = doc.at("rule").get<std::string>();
  if (doc.contains("variant")) t.variant = doc["variant"].get<std::string>();
  if (doc.contains("params")) {
    for (const auto& [key, value] : doc["params"].items()) {
      t.params[key] = value.get<long long>();
    }
  }
  if (doc.contains("inserted")) t.inserted = doc["inserted"].get<std::vector<int>>();
  if (doc.contains("children")) {
    for (const json& c : doc["children"]) t.children.push_back(parse_trace(c));
  }
  return t;
}

ExteriorElement parse_exterior(const json& doc) {
  const int m = int_field(doc, "m");
  const int r = int_field(doc, "r");
  if (m < 1) fail("m", "must be >= 1");
  if (r < 0) fail("r", "must be >= 0");
  ExteriorElement w(m, r);
  if (!doc.contains("terms") || !doc["terms"].is_array()) {
    fail("terms", "expected an array");
  }
  size_t index = 0;
  for (const json& entry : doc["terms"]) {
    const std::string where = "terms[" + std::to_string(index) + "]";
    if (!entry.is_object() || !entry.contains("indices") || !entry.contains("coeff")) {
      fail(where, "expected {\"indices\": [...], \"coeff\": ...}");
    }
    IndexTuple indices = entry["indices"].get<IndexTuple>();
    const Rational c = parse_rational_json(entry["coeff"], where + ".coeff");
    try {
      w.add_term(indices, c);
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
    ++index;
  }
  return w;
}

json serialize_exterior(const ExteriorElement& w) {
  json doc;
  doc["m"] = w.m();
  doc["r"] = w.r();
  json terms = json::array();
  for (const auto& [key, c] : w.terms()) {
    json entry;
    entry["indices"] = key;
    entry["coeff"] = rational_json(c);
    terms.push_back(std::move(entry));
  }
  doc["terms"] = std::move(terms);
  return doc;
}

RationalMatrix parse_matrix(const json& doc) {
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    fail("matrix", "expected an array of rows");
  }
  RationalMatrix out;
  size_t ri = 0;
  for (const json& row : doc["matrix"]) {
    if (!row.is_array()) fail("matrix[" + std::to_string(ri) + "]", "expected a row");
    RationalVector r;
    size_t ci = 0;
    for (const json& v : row) {
      r.push_back(parse_rational_json(
          v, "matrix[" + std::to_string(ri) + "][" + std::to_string(ci) + "]"));
      ++ci;
    }
    out.push_back(std::move(r));
    ++ri;
  }
  return out;
}

QuadricFunctional parse_functional(const json& doc) {
  if (!doc.contains("functional") || !doc["functional"].is_array() ||
      doc["functional"].size() != kQuadricDim) {
    fail("functional", "expected 6 rational values in canonical monomial order");
  }
  QuadricFunctional lambda;
  for (size_t i = 0; i < kQuadricDim; ++i) {
    lambda.values[i] = parse_rational_json(
        doc["functional"][i], "functional[" + std::to_string(i) + "]");
  }
  return lambda;
}

}  // namespace syzstab::io
