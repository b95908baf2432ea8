#include "syzstab/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace syzstab {

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) {
    throw std::invalid_argument("monomial needs at least one variable");
  }
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("negative exponent in monomial");
  }
  degree_ = std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

Monomial Monomial::unit(int n) { return Monomial(std::vector<int>(n + 1, 0)); }

Monomial Monomial::pure_power(int n, int var, int degree) {
  std::vector<int> exps(n + 1, 0);
  exps.at(var) = degree;
  return Monomial(std::move(exps));
}

std::string Monomial::to_string() const {
  if (is_unit()) return "1";
  std::string s;
  for (int i = 0; i < num_vars(); ++i) {
    const int e = exponents_[i];
    if (e == 0) continue;
    if (!s.empty()) s += "*";
    s += "X" + std::to_string(i);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

namespace {

void require_same_vars(const Monomial& a, const Monomial& b) {
  if (a.num_vars() != b.num_vars()) {
    throw std::invalid_argument("monomials live in different variable counts");
  }
}

}  // namespace

bool grlex_less(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i < a.num_vars(); ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
  }
  return false;
}

bool grlex_greater(const Monomial& a, const Monomial& b) { return grlex_less(b, a); }

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b);
  std::vector<int> exps(a.num_vars());
  for (int i = 0; i < a.num_vars(); ++i) {
    exps[i] = std::min(a.exponent(i), b.exponent(i));
  }
  return Monomial(std::move(exps));
}

bool divides(const Monomial& u, const Monomial& w) {
  require_same_vars(u, w);
  for (int i = 0; i < u.num_vars(); ++i) {
    if (u.exponent(i) > w.exponent(i)) return false;
  }
  return true;
}

Monomial quotient(const Monomial& w, const Monomial& u) {
  if (!divides(u, w)) {
    throw std::domain_error("quotient: " + u.to_string() + " does not divide " +
                            w.to_string());
  }
  std::vector<int> exps(w.num_vars());
  for (int i = 0; i < w.num_vars(); ++i) {
    exps[i] = w.exponent(i) - u.exponent(i);
  }
  return Monomial(std::move(exps));
}

MonomialSet::MonomialSet(int n, std::vector<Monomial> monomials)
    : n_(n), monomials_(std::move(monomials)) {
  if (n_ < 1) throw std::invalid_argument("monomial set needs n >= 1");
  for (const Monomial& m : monomials_) {
    if (m.num_vars() != n_ + 1) {
      throw std::invalid_argument("monomial " + m.to_string() + " has " +
                                  std::to_string(m.num_vars()) +
                                  " variables, expected " + std::to_string(n_ + 1));
    }
  }
  std::sort(monomials_.begin(), monomials_.end(), canonical_before);
  for (size_t i = 1; i < monomials_.size(); ++i) {
    if (monomials_[i] == monomials_[i - 1]) {
      throw std::invalid_argument("duplicate monomial " + monomials_[i].to_string());
    }
  }
  if (!monomials_.empty()) {
    const int d = monomials_.front().degree();
    bool uniform = true;
    for (const Monomial& m : monomials_) {
      if (m.degree() != d) {
        uniform = false;
        break;
      }
    }
    if (uniform) uniform_degree_ = d;
  }
}

bool MonomialSet::contains(const Monomial& u) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), u, canonical_before);
  return it != monomials_.end() && *it == u;
}

namespace {

void enumerate_rec(int var, int total_vars, int remaining, std::vector<int>& exps,
                   std::vector<Monomial>& out) {
  if (var == total_vars - 1) {
    exps[var] = remaining;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    enumerate_rec(var + 1, total_vars, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

MonomialSet enumerate_monomials(int n, int e) {
  if (n < 1) throw std::domain_error("enumerate_monomials: n must be >= 1");
  if (e < 0) throw std::domain_error("enumerate_monomials: e must be >= 0");
  std::vector<Monomial> out;
  std::vector<int> exps(n + 1, 0);
  enumerate_rec(0, n + 1, e, exps, out);
  return MonomialSet(n, std::move(out));
}

bool is_bpf(const MonomialSet& v) {
  const auto d = v.uniform_degree();
  if (!d) throw std::domain_error("is_bpf requires a uniform-degree set");
  for (int i = 0; i <= v.n(); ++i) {
    if (!v.contains(Monomial::pure_power(v.n(), i, *d))) return false;
  }
  return true;
}

int colon_dim(const MonomialSet& v, const Monomial& u) {
  const auto d = v.uniform_degree();
  if (!d) throw std::domain_error("colon_dim requires a uniform-degree set");
  if (u.num_vars() != v.n() + 1) {
    throw std::invalid_argument("colon_dim: variable count mismatch");
  }
  const int e = u.degree();
  if (e < 1 || e > *d - 1) {
    throw std::domain_error("colon_dim: deg u must lie in [1, d-1]");
  }
  int count = 0;
  for (const Monomial& w : v.monomials()) {
    if (divides(u, w)) ++count;
  }
  return count;
}

}  // namespace syzstab
