#pragma once

#include "syzstab/linalg.hpp"

#include <array>
#include <optional>

namespace syzstab {

/// Coordinates on the quadrics in three variables follow the canonical
/// monomial order: X0^2, X0X1, X0X2, X1^2, X1X2, X2^2.
inline constexpr int kQuadricDim = 6;

int quadric_slot(int i, int j);

/// Nonzero linear functional on the quadrics, one value per monomial in
/// canonical order. A 5-dimensional subspace V determines one up to scale
/// as the generator of its annihilator.
struct QuadricFunctional {
  std::array<Rational, kQuadricDim> values;

  /// lambda(Xi * Xj).
  const Rational& operator()(int i, int j) const {
    return values[static_cast<size_t>(quadric_slot(i, j))];
  }
  bool is_zero() const;
};

enum class SecantStatus { Stable, NotStable, BasePoint };

const char* to_string(SecantStatus s);

/// Generator of the annihilator of the row space of a rank-5 matrix of
/// quadric coordinates (5 rows x 6 columns), normalized so its first
/// nonzero value is 1. Rank below 5 is a domain error.
QuadricFunctional functional_from_subspace(const RationalMatrix& v);

/// Rank of the symmetric 3x3 matrix M with M_ij = lambda(Xi Xj).
int catalecticant_rank(const QuadricFunctional& lambda);

/// Classifies the 5-dimensional subspace ker(lambda): catalecticant rank 3
/// means the syzygy sheaf is stable, rank 2 that it is not (the quotient
/// point lies on the secant cubic of the Veronese surface), rank 1 that the
/// subspace has a base point. Zero functional is a domain error.
SecantStatus secant_stability_test(const QuadricFunctional& lambda);

using LinearForm = std::array<Rational, 3>;

/// Some nonzero linear form f with S_1 * f inside the row space of v, or
/// nullopt if none exists. Solves the 3x3 homogeneous system for the
/// coefficients of f and verifies each Xi * f by reduction against the row
/// space, independently of the catalecticant rank route.
std::optional<LinearForm> find_linear_factor(const RationalMatrix& v);

/// Same solve given only the functional; membership cannot be re-verified
/// without the subspace, so this is the thin variant used by the CLI for
/// direct functional input.
std::optional<LinearForm> linear_factor_from_functional(
    const QuadricFunctional& lambda);

}  // namespace syzstab
