#include "syzstab/secant.hpp"

#include <algorithm>
#include <stdexcept>

namespace syzstab {

int quadric_slot(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 2) throw std::invalid_argument("quadric_slot: variables are 0..2");
  // canonical order: X0^2, X0X1, X0X2, X1^2, X1X2, X2^2
  static constexpr int kSlot[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return kSlot[i][j];
}

bool QuadricFunctional::is_zero() const {
  return std::all_of(values.begin(), values.end(),
                     [](const Rational& x) { return x == 0; });
}

const char* to_string(SecantStatus s) {
  switch (s) {
    case SecantStatus::Stable: return "Stable";
    case SecantStatus::NotStable: return "NotStable";
    case SecantStatus::BasePoint: return "BasePoint";
  }
  return "?";
}

namespace {

void validate_subspace_shape(const RationalMatrix& v) {
  if (v.size() != 5) {
    throw std::invalid_argument("subspace matrix must have 5 rows");
  }
  for (const RationalVector& row : v) {
    if (row.size() != kQuadricDim) {
      throw std::invalid_argument("subspace matrix rows must have 6 entries");
    }
  }
}

RationalMatrix catalecticant(const QuadricFunctional& lambda) {
  RationalMatrix m(3, RationalVector(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = lambda(i, j);
  }
  return m;
}

}  // namespace

QuadricFunctional functional_from_subspace(const RationalMatrix& v) {
  validate_subspace_shape(v);
  if (matrix_rank(v) != 5) {
    throw std::domain_error("functional_from_subspace: matrix rank is below 5");
  }
  const RationalMatrix kernel = nullspace(v);
  if (kernel.size() != 1) {
    throw std::logic_error("rank-5 subspace must have a 1-dimensional annihilator");
  }
  RationalVector gen = kernel.front();
  Rational lead = 0;
  for (const Rational& x : gen) {
    if (x != 0) {
      lead = x;
      break;
    }
  }
  QuadricFunctional lambda;
  for (size_t i = 0; i < kQuadricDim; ++i) lambda.values[i] = gen[i] / lead;
  return lambda;
}

int catalecticant_rank(const QuadricFunctional& lambda) {
  return matrix_rank(catalecticant(lambda));
}

SecantStatus secant_stability_test(const QuadricFunctional& lambda) {
  if (lambda.is_zero()) {
    throw std::domain_error("secant_stability_test: zero functional");
  }
  switch (catalecticant_rank(lambda)) {
    case 3: return SecantStatus::Stable;
    case 2: return SecantStatus::NotStable;
    case 1: return SecantStatus::BasePoint;
  }
  // Every value of the functional appears in the matrix, so rank 0 would
  // mean the functional itself is zero.
  throw std::logic_error("catalecticant of a nonzero functional has rank 0");
}

std::optional<LinearForm> linear_factor_from_functional(
    const QuadricFunctional& lambda) {
  if (lambda.is_zero()) {
    throw std::domain_error("linear factor: zero functional");
  }
  const RationalMatrix kernel = nullspace(catalecticant(lambda));
  if (kernel.empty()) return std::nullopt;
  // f = a0 X0 + a1 X1 + a2 X2 with lambda(Xi f) = 0 for every i.
  return LinearForm{kernel[0][0], kernel[0][1], kernel[0][2]};
}

std::optional<LinearForm> find_linear_factor(const RationalMatrix& v) {
  validate_subspace_shape(v);
  RationalMatrix reduced = v;
  const std::vector<int> pivots = rref(reduced);
  if (pivots.size() != 5) {
    throw std::domain_error("find_linear_factor: matrix rank is below 5");
  }

  const QuadricFunctional lambda = functional_from_subspace(v);
  const std::optional<LinearForm> f = linear_factor_from_functional(lambda);
  if (!f) return std::nullopt;

  // Confirm S_1 * f really lands in the row space; this keeps the oracle
  // independent of the rank computation above.
  for (int i = 0; i < 3; ++i) {
    RationalVector coords(kQuadricDim, 0);
    for (int j = 0; j < 3; ++j) {
      coords[static_cast<size_t>(quadric_slot(i, j))] += (*f)[static_cast<size_t>(j)];
    }
    if (!in_rowspace(reduced, pivots, std::move(coords))) {
      throw std::logic_error("candidate linear factor failed row-space check");
    }
  }
  return f;
}

}  // namespace syzstab
