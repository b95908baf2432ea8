#pragma once

#include <optional>
#include <string>
#include <vector>

namespace syzstab {

/// Monomial in the n+1 variables X0..Xn, stored as its exponent vector with
/// the total degree cached.
class Monomial {
 public:
  explicit Monomial(std::vector<int> exponents);

  static Monomial unit(int n);
  static Monomial pure_power(int n, int var, int degree);

  int num_vars() const { return static_cast<int>(exponents_.size()); }
  int degree() const { return degree_; }
  int exponent(int var) const { return exponents_.at(var); }
  const std::vector<int>& exponents() const { return exponents_; }
  bool is_unit() const { return degree_ == 0; }

  /// "X0^2*X1", or "1" for the unit.
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

/// Graded lexicographic order with X0 > X1 > ... > Xn.
bool grlex_less(const Monomial& a, const Monomial& b);
bool grlex_greater(const Monomial& a, const Monomial& b);

/// Canonical listing order used everywhere for serialization and witness
/// reporting: descending graded-lex, so X0^d comes first.
inline bool canonical_before(const Monomial& a, const Monomial& b) {
  return grlex_greater(a, b);
}

Monomial gcd(const Monomial& a, const Monomial& b);
bool divides(const Monomial& u, const Monomial& w);
/// w / u. Requires divides(u, w).
Monomial quotient(const Monomial& w, const Monomial& u);

/// Finite set of distinct monomials in a fixed ambient dimension, kept
/// sorted in canonical order. uniform_degree() is set exactly when all
/// member degrees coincide.
class MonomialSet {
 public:
  MonomialSet(int n, std::vector<Monomial> monomials);

  int n() const { return n_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& at(int i) const { return monomials_.at(i); }
  std::optional<int> uniform_degree() const { return uniform_degree_; }
  bool contains(const Monomial& u) const;

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  int n_ = 0;
  std::vector<Monomial> monomials_;
  std::optional<int> uniform_degree_;
};

/// All monomials of degree e in n+1 variables, in canonical order.
/// The count equals eval_p(n, e).
MonomialSet enumerate_monomials(int n, int e);

/// A uniform-degree-d monomial family is base point free iff it contains
/// every pure power Xi^d. Mixed-degree input is a domain error.
bool is_bpf(const MonomialSet& v);

/// dim (V : u) for uniform-degree V: the number of degree-(d-e) monomials f
/// with u*f in V. Computed by scanning V for multiples of u, which is exact
/// because the colon space of a monomial set is monomially spanned.
/// Requires 1 <= deg u <= d-1.
int colon_dim(const MonomialSet& v, const Monomial& u);

}  // namespace syzstab
