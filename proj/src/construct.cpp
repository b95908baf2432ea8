#include "syzstab/construct.hpp"

#include "syzstab/bounds.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace syzstab {

const char* to_string(Strictness s) {
  return s == Strictness::Strict ? "strict" : "nonstrict";
}

namespace {

long long dim_of_degree(int n, int d) {
  const BigInt p = numerator(eval_p(n, Rational(d)));
  return p.convert_to<long long>();
}

/// {Xa^d} + {Xa^(p c) Xb^(d - p c) : 0 <= p <= m-2} inside ambient n.
std::vector<Monomial> ladder_monomials(int n, int var_a, int var_b, int d, int m,
                                       int c) {
  std::vector<Monomial> out;
  out.push_back(Monomial::pure_power(n, var_a, d));
  for (int p = 0; p <= m - 2; ++p) {
    std::vector<int> exps(n + 1, 0);
    exps[static_cast<size_t>(var_a)] = p * c;
    exps[static_cast<size_t>(var_b)] = d - p * c;
    out.emplace_back(std::move(exps));
  }
  return out;
}

std::vector<Monomial> dedupe(std::vector<Monomial> members) {
  std::sort(members.begin(), members.end(), canonical_before);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

/// Padded copy in a larger ambient dimension.
std::vector<Monomial> embed(const MonomialSet& v, int new_n) {
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (const Monomial& w : v.monomials()) {
    std::vector<int> exps = w.exponents();
    exps.resize(new_n + 1, 0);
    out.emplace_back(std::move(exps));
  }
  return out;
}

std::vector<Monomial> multiplied_by_var(const MonomialSet& v, int var) {
  std::vector<Monomial> out;
  out.reserve(v.size());
  for (const Monomial& w : v.monomials()) {
    std::vector<int> exps = w.exponents();
    exps.at(static_cast<size_t>(var)) += 1;
    out.emplace_back(std::move(exps));
  }
  return out;
}

/// Degree-d monomials not involving the last variable, embedded in n+1 vars.
std::vector<Monomial> subring_slice(int n, int d) {
  return embed(enumerate_monomials(n - 1, d), n);
}

Verdict verify_family(const MonomialSet& set, int m, Strictness req) {
  if (set.size() != m) {
    throw std::logic_error("construction produced " + std::to_string(set.size()) +
                           " monomials, expected " + std::to_string(m));
  }
  if (!is_bpf(set)) {
    throw std::logic_error("construction is not base point free");
  }
  Verdict v = check_equal_degree(set);
  const bool ok = v.status == Status::Stable ||
                  (req == Strictness::NonStrict &&
                   v.status == Status::StrictlySemistable);
  if (!ok) {
    throw std::logic_error("construction failed verification: verdict " +
                           std::string(to_string(v.status)) + " under " +
                           to_string(req) + " requirement");
  }
  return v;
}

struct GluedParams {
  int m1 = 0, m2 = 0, c1 = 0, c2 = 0;
  std::string variant;
};

/// Parameter choices splitting m-1 = (m1-1) + (m2-1) with step sizes c1, c2
/// between d/(m-1) and d/(mi-1). The plain branches satisfy the bounds
/// weakly; the strict branches leave at least one bound strict on each side.
GluedParams glued_params(int d, int m, bool strict) {
  GluedParams g;
  if (!strict) {
    if (m <= d + 1 && m % 2 == 1) {
      const int t = (m - 1) / 2;
      g = {t + 1, t + 1, d / t, d / t, "odd"};
    } else if (m <= d + 1) {
      const int t = (m - 2) / 2;
      g = {t + 2, t + 1, d / (t + 1), d / t, "even"};
    } else {
      g = {d + 1, m - d, 1, 1, "tail"};
    }
    return g;
  }
  if (m <= d && m % 2 == 1) {
    const int t = (m - 1) / 2;
    if (d % t != 0) {
      g = {t + 1, t + 1, d / t, d / t, "strict-odd"};
    } else {
      g = {t + 1, t + 1, d / t - 1, d / t - 1, "strict-odd-divisible"};
    }
  } else if (m <= d) {
    const int t = (m - 2) / 2;
    if (d % t != 0) {
      g = {t + 2, t + 1, d / (t + 1), d / t, "strict-even"};
    } else {
      g = {t + 2, t + 1, d / (t + 1), d / t - 1, "strict-even-divisible"};
    }
  } else {
    // d+2 <= m <= 2d: the plain tail parameters already sit strictly
    // inside the bounds here.
    g = {d + 1, m - d, 1, 1, "strict-tail"};
  }
  return g;
}

MonomialSet glued_set(int d, const GluedParams& p) {
  std::vector<Monomial> members = ladder_monomials(2, 0, 1, d, p.m1, p.c1);
  std::vector<Monomial> second = ladder_monomials(2, 0, 2, d, p.m2, p.c2);
  members.insert(members.end(), second.begin(), second.end());
  return MonomialSet(2, dedupe(std::move(members)));
}

ConstructionTrace glued_trace(int d, int m, const GluedParams& p) {
  ConstructionTrace t;
  t.rule = "glued";
  t.variant = p.variant;
  t.params = {{"n", 2},   {"d", d},   {"m", m},   {"m1", p.m1},
              {"m2", p.m2}, {"c1", p.c1}, {"c2", p.c2}};
  return t;
}

MonomialSet table_set(int d, int m) {
  if (d == 2 && m == 3) {
    return MonomialSet(2, {Monomial({2, 0, 0}), Monomial({0, 2, 0}),
                           Monomial({0, 0, 2})});
  }
  if (d == 3 && m == 7) {
    return MonomialSet(
        2, {Monomial({3, 0, 0}), Monomial({1, 2, 0}), Monomial({0, 3, 0}),
            Monomial({2, 0, 1}), Monomial({1, 1, 1}), Monomial({0, 1, 2}),
            Monomial({0, 0, 3})});
  }
  throw std::logic_error("no table family for d=" + std::to_string(d) +
                         ", m=" + std::to_string(m));
}

ConstructionTrace table_trace(int d, int m) {
  ConstructionTrace t;
  t.rule = "table";
  t.params = {{"n", 2}, {"d", d}, {"m", m}};
  return t;
}

ConstructionTrace full_trace(int n, int d) {
  ConstructionTrace t;
  t.rule = "full";
  t.params = {{"n", n}, {"d", d}};
  return t;
}

/// Child family plus one extra monomial.
Construction insert_monomial(Construction base, const Monomial& extra, int m,
                             Strictness req,
                             std::map<std::string, long long> extra_params) {
  std::vector<Monomial> members = base.set.monomials();
  members.push_back(extra);
  MonomialSet set(base.set.n(), std::move(members));

  ConstructionTrace t;
  t.rule = "insert";
  t.params = {{"n", base.set.n()}, {"d", *set.uniform_degree()}, {"m", m}};
  t.params.insert(extra_params.begin(), extra_params.end());
  t.inserted = extra.exponents();
  t.children.push_back(std::move(base.trace));

  Verdict v = verify_family(set, m, req);
  return {std::move(set), std::move(t), std::move(v)};
}

/// Extra monomial inserted into the m = d+1 families for small d.
Monomial small_insert_monomial(int d) {
  switch (d) {
    case 3: return Monomial({1, 1, 1});
    case 4: return Monomial({1, 1, 2});
    case 5: return Monomial({1, 2, 2});
  }
  throw std::logic_error("no small insert for d=" + std::to_string(d));
}

Construction make_glued(int d, int m, bool strict, Strictness req,
                        const std::string& variant_override = "") {
  GluedParams p = glued_params(d, m, strict);
  if (!variant_override.empty()) p.variant = variant_override;
  MonomialSet set = glued_set(d, p);
  ConstructionTrace trace = glued_trace(d, m, p);
  Verdict v = verify_family(set, m, req);
  return {std::move(set), std::move(trace), std::move(v)};
}

Construction make_full(int n, int d, Strictness req) {
  MonomialSet set = enumerate_monomials(n, d);
  Verdict v = verify_family(set, set.size(), req);
  return {std::move(set), full_trace(n, d), std::move(v)};
}

/// S'_d + W * Xn where W is a degree-(d-1) family in the same variables.
Construction make_shift(int n, int d, int m, Construction child, Strictness req) {
  std::vector<Monomial> members = subring_slice(n, d);
  std::vector<Monomial> shifted = multiplied_by_var(child.set, n);
  members.insert(members.end(), shifted.begin(), shifted.end());
  MonomialSet set(n, std::move(members));

  ConstructionTrace t;
  t.rule = "shift";
  t.params = {{"n", n}, {"d", d}, {"m", m}, {"l", child.set.size()}};
  t.children.push_back(std::move(child.trace));

  Verdict v = verify_family(set, m, req);
  return {std::move(set), std::move(t), std::move(v)};
}

}  // namespace

MonomialSet construct_n1(int d, int m, int c) {
  if (d < 1) throw std::domain_error("construct_n1: d must be >= 1");
  if (m < 2 || m > d + 1) {
    throw std::domain_error("construct_n1: m must lie in [2, d+1]");
  }
  if (c < 1) throw std::domain_error("construct_n1: c must be >= 1");
  if (static_cast<long long>(m - 1) * c > d) {
    throw std::domain_error("construct_n1: (m-1)*c must not exceed d");
  }
  return MonomialSet(1, ladder_monomials(1, 0, 1, d, m, c));
}

Construction construct_n2(int d, int m, Strictness req) {
  if (d < 1) throw std::domain_error("construct_n2: d must be >= 1");
  if (m < 3 || m > dim_of_degree(2, d)) {
    throw std::domain_error("construct_n2: m must lie in [3, P_2(d)]");
  }

  if (d == 1) return make_full(2, 1, req);

  if (req == Strictness::Strict && d == 2 && m == 5) {
    throw ImpossibleConstructionError(
        "no 5-dimensional base-point-free monomial family of conics in three "
        "variables meets the strict slope bounds; every choice is only "
        "semistable. Request nonstrict to obtain one.");
  }

  if (req == Strictness::NonStrict) {
    if (m <= 2 * d + 1) {
      const bool exceptional = d == 2 && m == 5;
      return make_glued(d, m, /*strict=*/false, req,
                        exceptional ? "exceptional-semistable" : "");
    }
    if (d == 2) return make_full(2, 2, req);  // m == 6 is forced here
    Construction w = construct_n2(d - 1, m - d - 1, Strictness::NonStrict);
    return make_shift(2, d, m, std::move(w), req);
  }

  // Strict.
  if (m == d + 1) {
    if (d == 2) {
      MonomialSet set = table_set(2, 3);
      Verdict v = verify_family(set, 3, req);
      return {std::move(set), table_trace(2, 3), std::move(v)};
    }
    Construction base = construct_n2(d, d, Strictness::NonStrict);
    if (d <= 5) {
      return insert_monomial(std::move(base), small_insert_monomial(d), m, req, {});
    }
    const int a = d / 2;  // both parts >= 3 once d >= 6
    const int b = d - a;
    return insert_monomial(std::move(base), Monomial({0, a, b}), m, req,
                           {{"a", a}, {"b", b}});
  }
  if (m == 2 * d + 1) {
    if (d == 3) {
      MonomialSet set = table_set(3, 7);
      Verdict v = verify_family(set, 7, req);
      return {std::move(set), table_trace(3, 7), std::move(v)};
    }
    // d >= 4: the 2d-dimensional tail family plus X1^a X2^b, both parts >= 2.
    Construction base = construct_n2(d, 2 * d, Strictness::NonStrict);
    const int a = d / 2;
    const int b = d - a;
    return insert_monomial(std::move(base), Monomial({0, a, b}), m, req,
                           {{"a", a}, {"b", b}});
  }
  if (m <= 2 * d) {
    return make_glued(d, m, /*strict=*/true, req);
  }
  // 2d+2 <= m <= P_2(d).
  if (d == 2) return make_full(2, 2, req);  // m == 6
  Construction w = construct_n2(d - 1, m - d - 1, Strictness::NonStrict);
  return make_shift(2, d, m, std::move(w), req);
}

namespace {

Construction construct_ladder(int d, int m, Strictness /*req*/) {
  if (m < 2 || m > d + 1) {
    throw std::domain_error("construct: for n = 1, m must lie in [2, d+1]");
  }
  const int c = d / (m - 1);  // largest admissible step
  MonomialSet set = construct_n1(d, m, c);
  if (set.size() != m || !is_bpf(set)) {
    throw std::logic_error("ladder construction invariants violated");
  }
  Verdict v = check_equal_degree(set);
  // The two-variable guarantee is the 1/c colon bound, not stability.
  if (v.extremal_value && *v.extremal_value > Rational(1, c)) {
    throw std::logic_error("ladder construction exceeded its 1/c colon bound");
  }
  ConstructionTrace t;
  t.rule = "ladder";
  t.params = {{"n", 1}, {"d", d}, {"m", m}, {"c", c}};
  return {std::move(set), std::move(t), std::move(v)};
}

Construction construct_high(int n, int d, int m, Strictness req) {
  if (d == 1) return make_full(n, 1, req);  // m == n+1 is forced

  const long long lower_dim = dim_of_degree(n - 1, d);
  if (m <= lower_dim + 1) {
    // Lower-dimension family plus the pure power Xn^d. The jump from m-1 to
    // m members makes the inherited bounds strict.
    Construction sub = construct(n - 1, d, m - 1, Strictness::NonStrict);
    std::vector<Monomial> members = embed(sub.set, n);
    members.push_back(Monomial::pure_power(n, n, d));
    MonomialSet set(n, std::move(members));

    ConstructionTrace t;
    t.rule = "apex";
    t.params = {{"n", n}, {"d", d}, {"m", m}};
    t.children.push_back(std::move(sub.trace));

    Verdict v = verify_family(set, m, req);
    return {std::move(set), std::move(t), std::move(v)};
  }
  if (m <= lower_dim + n) {
    const int l = static_cast<int>(lower_dim) + n + 1 - m;  // 1..n-1
    std::vector<Monomial> members = subring_slice(n, d);
    for (int i = l; i <= n; ++i) {
      std::vector<int> exps(n + 1, 0);
      exps[static_cast<size_t>(i)] = d - 1;
      exps[static_cast<size_t>(n)] += 1;
      members.emplace_back(std::move(exps));
    }
    MonomialSet set(n, std::move(members));

    ConstructionTrace t;
    t.rule = "tail";
    t.params = {{"n", n}, {"d", d}, {"m", m}, {"l", l}};

    Verdict v = verify_family(set, m, req);
    return {std::move(set), std::move(t), std::move(v)};
  }
  // lower_dim + n + 1 <= m <= P_n(d): recurse on the degree.
  const int l = static_cast<int>(m - lower_dim);
  Construction w = construct(n, d - 1, l, Strictness::NonStrict);
  return make_shift(n, d, m, std::move(w), req);
}

}  // namespace

Construction construct(int n, int d, int m, Strictness req) {
  if (n < 1) throw std::domain_error("construct: n must be >= 1");
  if (d < 1) throw std::domain_error("construct: d must be >= 1");
  if (n == 1) return construct_ladder(d, m, req);
  if (m < n + 1 || m > dim_of_degree(n, d)) {
    throw std::domain_error("construct: m must lie in [n+1, P_n(d)]");
  }
  if (n == 2) return construct_n2(d, m, req);
  return construct_high(n, d, m, req);
}

MonomialSet replay_trace(const ConstructionTrace& t) {
  const auto param = [&](const std::string& key) {
    auto it = t.params.find(key);
    if (it == t.params.end()) {
      throw std::invalid_argument("trace rule \"" + t.rule +
                                  "\" is missing parameter \"" + key + "\"");
    }
    return static_cast<int>(it->second);
  };

  if (t.rule == "ladder") {
    return construct_n1(param("d"), param("m"), param("c"));
  }
  if (t.rule == "glued") {
    GluedParams p;
    p.m1 = param("m1");
    p.m2 = param("m2");
    p.c1 = param("c1");
    p.c2 = param("c2");
    return glued_set(param("d"), p);
  }
  if (t.rule == "table") {
    return table_set(param("d"), param("m"));
  }
  if (t.rule == "full") {
    return enumerate_monomials(param("n"), param("d"));
  }
  if (t.rule == "insert") {
    if (t.children.size() != 1 || t.inserted.empty()) {
      throw std::invalid_argument("insert trace needs one child and a monomial");
    }
    MonomialSet base = replay_trace(t.children.front());
    std::vector<Monomial> members = base.monomials();
    members.emplace_back(t.inserted);
    return MonomialSet(base.n(), std::move(members));
  }
  if (t.rule == "apex") {
    if (t.children.size() != 1) {
      throw std::invalid_argument("apex trace needs one child");
    }
    const int n = param("n");
    MonomialSet sub = replay_trace(t.children.front());
    std::vector<Monomial> members = embed(sub, n);
    members.push_back(Monomial::pure_power(n, n, param("d")));
    return MonomialSet(n, std::move(members));
  }
  if (t.rule == "tail") {
    const int n = param("n");
    const int d = param("d");
    std::vector<Monomial> members = subring_slice(n, d);
    for (int i = param("l"); i <= n; ++i) {
      std::vector<int> exps(n + 1, 0);
      exps[static_cast<size_t>(i)] = d - 1;
      exps[static_cast<size_t>(n)] += 1;
      members.emplace_back(std::move(exps));
    }
    return MonomialSet(n, std::move(members));
  }
  if (t.rule == "shift") {
    if (t.children.size() != 1) {
      throw std::invalid_argument("shift trace needs one child");
    }
    const int n = param("n");
    MonomialSet w = replay_trace(t.children.front());
    std::vector<Monomial> members = subring_slice(n, param("d"));
    std::vector<Monomial> shifted = multiplied_by_var(w, n);
    members.insert(members.end(), shifted.begin(), shifted.end());
    return MonomialSet(n, std::move(members));
  }
  throw std::invalid_argument("unknown trace rule \"" + t.rule + "\"");
}

}  // namespace syzstab
