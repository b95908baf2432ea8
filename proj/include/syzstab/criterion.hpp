#pragma once

#include "syzstab/monomial.hpp"
#include "syzstab/rational.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace syzstab {

enum class Status { Stable, StrictlySemistable, Unstable };

const char* to_string(Status s);

/// A search budget or enumeration guard was exceeded. Never a wrong answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Witness {
  enum class Kind { ColonMonomial, Subset };

  Kind kind = Kind::ColonMonomial;
  /// ColonMonomial: the divisor u attaining the extremal colon ratio.
  std::optional<Monomial> u;
  /// Subset: 1-based positions into the canonical listing of the set.
  std::vector<int> subset;
  Rational lhs;

  int e() const { return u ? u->degree() : 0; }
};

/// Outcome of a stability check. status is tied to the comparison of
/// extremal_value against reference_slope: strictly below means Stable,
/// equality StrictlySemistable, above Unstable. When the quantifier range
/// of the check is empty (degree 1 after normalization, or a two-element
/// family in the subset check) the verdict is vacuously Stable and
/// extremal_value is absent.
struct Verdict {
  Status status = Status::Stable;
  Rational reference_slope;
  std::optional<Rational> extremal_value;
  std::vector<Witness> witnesses;  // every entry attains extremal_value
  /// Common factor divided out of the input before checking, if any.
  std::optional<Monomial> normalized_by;
};

enum class ColonSearch {
  /// Candidates are the divisors of pairwise gcds: any u dividing at most
  /// one member has colon ratio <= 0 and cannot beat them.
  PrunedPairGcd,
  /// Sweep every monomial of every intermediate degree. Retained as a
  /// second, independent route for cross-checking the pruned search.
  FullSweep,
};

/// Equal-degree stability check. For a family V of m distinct degree-d
/// monomials the syzygy sheaf is (semi)stable iff for every monomial u of
/// degree 1 <= e <= d-1 the colon ratio (dim(V:u) - 1)/(d - e) stays
/// (weakly) below the reference slope (m-1)/d. A common factor of V is
/// divided out first (recorded in the verdict). Requires m >= 2.
Verdict check_equal_degree(const MonomialSet& v,
                           ColonSearch mode = ColonSearch::PrunedPairGcd);

struct MixedOptions {
  int subset_budget = 20;
};

/// General mixed-degree check by exact subset enumeration: over every index
/// subset I with 2 <= |I| <= m-1 the value
/// (deg gcd_I - sum of degrees in I)/(|I|-1) must stay (weakly) below the
/// reference slope -(d_1 + ... + d_m)/(m-1). A common factor is divided out
/// first. The enumeration uses branch-and-bound pruning on the gcd-degree
/// upper bound; families larger than the budget raise ResourceError.
Verdict check_mixed(const MonomialSet& u, const MixedOptions& opts = {});

/// Validates that the colon route and the subset route agree on an
/// equal-degree family: identical statuses, and the colon extremal equals
/// the subset data mapped onto the colon scale, namely
/// max{(|I|-1)/(d - deg gcd_I) : 2 <= |I| <= m-1, gcd_I != 1} (0 when no
/// subset has a nontrivial gcd). The subset side never consults colon
/// dimensions, so the two routes are independent.
bool cross_check(const MonomialSet& v, const MixedOptions& opts = {});

struct ExhaustiveOptions {
  BigInt guard = 1000000;
};

/// Number of base-point-free m-subsets of the degree-d monomials in n+1
/// variables.
BigInt bpf_subset_count(int n, int d, int m);

/// Every base-point-free m-subset of the degree-d monomials paired with its
/// equal-degree verdict, in canonical enumeration order. Raises
/// ResourceError (reporting the count) when the subset count exceeds the
/// guard.
std::vector<std::pair<MonomialSet, Verdict>> exhaustive_classify(
    int n, int d, int m, const ExhaustiveOptions& opts = {});

}  // namespace syzstab
