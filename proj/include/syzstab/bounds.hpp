#pragma once

#include "syzstab/rational.hpp"

namespace syzstab {

/// Counting polynomial eval_p(n, t) = (t+1)(t+2)...(t+n) / n!.
/// At an integer t >= 0 this is the number of degree-t monomials in n+1
/// variables. Requires n >= 1.
Rational eval_p(int n, const Rational& t);

/// eval_q(n, t) = (eval_p(n, t) - 1) / t. Rejects t = 0 (domain error):
/// no caller needs the polynomial limit there.
Rational eval_q(int n, const Rational& t);

/// Dimension bound eval_p(n, d-1) + eval_q(n, d-1). Every base-point-free
/// family of m degree-d forms in n+1 variables with m strictly above this
/// value has a stable syzygy sheaf; equality gives semistability.
/// Requires n >= 2, d >= 2.
Rational stability_threshold(int n, int d);

enum class ThresholdClass { GuaranteedStable, GuaranteedSemistable, NoGuarantee };

const char* to_string(ThresholdClass c);

/// Compares m against stability_threshold(n, d). The bound is one-sided:
/// below the threshold nothing is implied, hence NoGuarantee rather than
/// a negative verdict. Requires n+1 <= m <= eval_p(n, d).
ThresholdClass classify_by_threshold(int n, int d, long long m);

/// Strict gap inequality eval_q(n, d) - eval_q(n, d-1) > c/d, the numeric
/// hypothesis behind the complete-intersection semistability bound.
/// Requires n >= 2, d >= 2, 1 <= c <= n-1.
bool flenner_gap_holds(int n, int d, int c);

struct BoundReport {
  int n = 0;
  int d = 0;
  Rational p_of_d;
  Rational threshold;
  bool threshold_is_integer = false;
};

BoundReport make_bound_report(int n, int d);

}  // namespace syzstab
