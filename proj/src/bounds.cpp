#include "syzstab/bounds.hpp"

#include <stdexcept>
#include <string>

namespace syzstab {

Rational eval_p(int n, const Rational& t) {
  if (n < 1) throw std::domain_error("eval_p: n must be >= 1");
  Rational num = 1;
  BigInt fact = 1;
  for (int i = 1; i <= n; ++i) {
    num *= t + i;
    fact *= i;
  }
  return num / Rational(fact);
}

Rational eval_q(int n, const Rational& t) {
  if (n < 1) throw std::domain_error("eval_q: n must be >= 1");
  if (t == 0) throw std::domain_error("eval_q: t = 0 is outside the domain");
  return (eval_p(n, t) - 1) / t;
}

Rational stability_threshold(int n, int d) {
  if (n < 2) throw std::domain_error("stability_threshold: n must be >= 2");
  if (d < 2) throw std::domain_error("stability_threshold: d must be >= 2");
  const Rational dm1 = d - 1;
  return eval_p(n, dm1) + eval_q(n, dm1);
}

const char* to_string(ThresholdClass c) {
  switch (c) {
    case ThresholdClass::GuaranteedStable: return "GuaranteedStable";
    case ThresholdClass::GuaranteedSemistable: return "GuaranteedSemistable";
    case ThresholdClass::NoGuarantee: return "NoGuarantee";
  }
  return "?";
}

ThresholdClass classify_by_threshold(int n, int d, long long m) {
  const Rational threshold = stability_threshold(n, d);
  if (m < n + 1 || Rational(m) > eval_p(n, d)) {
    throw std::domain_error("classify_by_threshold: m = " + std::to_string(m) +
                            " is outside [n+1, P_n(d)]");
  }
  const Rational mr(m);
  if (mr > threshold) return ThresholdClass::GuaranteedStable;
  if (mr == threshold) return ThresholdClass::GuaranteedSemistable;
  return ThresholdClass::NoGuarantee;
}

bool flenner_gap_holds(int n, int d, int c) {
  if (n < 2) throw std::domain_error("flenner_gap_holds: n must be >= 2");
  if (d < 2) throw std::domain_error("flenner_gap_holds: d must be >= 2");
  if (c < 1 || c > n - 1) {
    throw std::domain_error("flenner_gap_holds: c must be in [1, n-1]");
  }
  const Rational gap = eval_q(n, d) - eval_q(n, d - 1);
  return gap > Rational(c, d);
}

BoundReport make_bound_report(int n, int d) {
  BoundReport r;
  r.n = n;
  r.d = d;
  r.p_of_d = eval_p(n, d);
  r.threshold = stability_threshold(n, d);
  r.threshold_is_integer = is_integer(r.threshold);
  return r;
}

}  // namespace syzstab
