#pragma once

#include "syzstab/rational.hpp"

#include <map>
#include <vector>

namespace syzstab {

/// Strictly increasing 1-based indices into {1..m}.
using IndexTuple = std::vector<int>;

/// Alternating tensor of degree r over the rationals on a fixed basis
/// e_1..e_m, stored sparsely: only wedge monomials with nonzero coefficient
/// are kept, keyed by their sorted index tuple.
class ExteriorElement {
 public:
  ExteriorElement(int m, int r);

  /// c * e_{i1} ^ ... ^ e_{ir} with sorted indices.
  static ExteriorElement wedge_monomial(int m, IndexTuple indices,
                                        const Rational& coeff = 1);
  /// The degree-0 scalar 1, the neutral element for the wedge product.
  static ExteriorElement one(int m);

  int m() const { return m_; }
  int r() const { return r_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IndexTuple, Rational>& terms() const { return terms_; }

  /// Coefficient of a sorted index tuple; 0 when absent.
  Rational coeff(const IndexTuple& sorted_indices) const;
  /// Coefficient by the alternating convention: indices in any order, sign
  /// adjusted, repeated index gives 0.
  Rational coeff_signed(IndexTuple indices) const;

  /// Accumulates c onto a sorted tuple, dropping the term if it cancels.
  void add_term(const IndexTuple& sorted_indices, const Rational& c);

  std::vector<IndexTuple> support() const;

  ExteriorElement operator*(const Rational& c) const;
  ExteriorElement operator+(const ExteriorElement& other) const;
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;

 private:
  int m_ = 0;
  int r_ = 0;
  std::map<IndexTuple, Rational> terms_;
};

/// Koszul differential sending every basis vector to 1:
/// delta(e_{i1}^...^e_{ir}) = sum_p (-1)^(p-1) e_{i1}^..^{no i_p}..^e_{ir}.
/// Requires r >= 1; the degree-0 image is a scalar keyed by the empty tuple.
ExteriorElement koszul_delta(const ExteriorElement& w);

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
ExteriorElement wedge_vector(const ExteriorElement& a,
                             const std::vector<Rational>& v);
ExteriorElement wedge_of_vectors(int m,
                                 const std::vector<std::vector<Rational>>& vs);

/// Whether w equals a single wedge w_1 ^ ... ^ w_r of vectors, decided by
/// the quadratic relations
/// sum_p (-1)^p c_{i1..i(r-1) jp} c_{j0..^jp..jr} = 0. Only relations that
/// can touch the support are evaluated. Requires w != 0.
bool is_decomposable(const ExteriorElement& w);

/// Recovers r vectors whose wedge is a nonzero scalar multiple of w, by
/// contracting w against all (r-1)-fold duals and row-reducing the span.
/// The returned vectors are the reduced echelon basis. Requires
/// is_decomposable(w).
std::vector<std::vector<Rational>> recover_factors(const ExteriorElement& w);

/// Disjoint index subsets extracted from a decomposable element in the
/// kernel of the Koszul differential.
struct IndexFamilies {
  std::vector<std::vector<int>> families;
};

/// For nonzero decomposable w with koszul_delta(w) = 0, produces mutually
/// disjoint subsets I_1..I_s of {1..m}, each of size >= 2 with sizes summing
/// to r + s, such that Supp(w) contains
/// Supp(delta(e_{I_1}) ^ ... ^ delta(e_{I_s})). The echelon factor basis is
/// pivoted on least indices; different factorizations may yield different
/// valid outputs, so callers must not assume uniqueness.
IndexFamilies extract_index_families(const ExteriorElement& w);

}  // namespace syzstab
