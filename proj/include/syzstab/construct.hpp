#pragma once

#include "syzstab/criterion.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace syzstab {

/// Strict demands a Stable verdict from the constructed family; NonStrict
/// also accepts StrictlySemistable.
enum class Strictness { Strict, NonStrict };

const char* to_string(Strictness s);

/// The requested family provably does not exist: n=2, d=2, m=5 under
/// Strict, where every base-point-free monomial choice is only semistable.
class ImpossibleConstructionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// One node of the recursive build. Replaying a trace bottom-up reproduces
/// the constructed set exactly.
///
/// Rules:
///   ladder  - two-variable family {X0^d} + {X0^(p c) X1^(d - p c)};
///             params d, m, c
///   glued   - two ladders in (X0,X1) and (X0,X2) sharing X0^d;
///             params d, m, m1, m2, c1, c2; variant names the parameter
///             branch that chose them
///   shift   - subring slice plus a lower-degree family times the last
///             variable: S'_d + W * Xn; params n, d, m; child = W
///   apex    - lower-dimension family plus the pure power Xn^d;
///             params n, d, m; child in one variable fewer
///   tail    - subring slice plus trailing mixed powers
///             {Xi^(d-1) Xn : l <= i <= n}; params n, d, m, l
///   insert  - child family plus one extra monomial (exponents in
///             `inserted`); params n, d, m, a, b when the monomial is
///             X1^a X2^b
///   full    - the complete space of degree-d monomials; params n, d
///   table   - a fixed small family; params d, m (keys (2,3) and (3,7))
struct ConstructionTrace {
  std::string rule;
  std::string variant;  // branch detail, empty when there is only one
  std::map<std::string, long long> params;
  std::vector<int> inserted;  // exponents for rule "insert"
  std::vector<ConstructionTrace> children;
};

struct Construction {
  MonomialSet set;
  ConstructionTrace trace;
  Verdict verdict;  // post-verification check of the finished set
};

/// Two-variable ladder family {X0^d} + {X0^(p c) X1^(d - p c) : 0 <= p <= m-2}
/// in ambient dimension 1. Every colon ratio of the result is bounded by
/// 1/c. Requires d >= 1, 2 <= m <= d+1, c >= 1 and (m-1) c <= d.
MonomialSet construct_n1(int d, int m, int c);

/// Base-point-free m-dimensional monomial family of degree d in three
/// variables meeting the requested strictness, for 3 <= m <= eval_p(2, d).
/// (d, m) = (2, 5) under Strict raises ImpossibleConstructionError; under
/// NonStrict it returns a semistable family. Every result is re-verified
/// with check_equal_degree before being returned.
Construction construct_n2(int d, int m, Strictness req);

/// Recursive dispatcher over all ambient dimensions.
///   n = 1:  ladder with c = floor(d/(m-1)); the guarantee is the 1/c colon
///           bound, not a stability verdict, and the strictness argument is
///           not consulted. Requires 2 <= m <= d+1.
///   n = 2:  construct_n2. Requires 3 <= m <= eval_p(2, d).
///   n >= 3: three-way recursion on (n, d); the result is always Stable.
///           Requires n+1 <= m <= eval_p(n, d).
Construction construct(int n, int d, int m, Strictness req);

/// Rebuilds the set a trace describes.
MonomialSet replay_trace(const ConstructionTrace& t);

}  // namespace syzstab
