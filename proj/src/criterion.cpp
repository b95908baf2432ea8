#include "syzstab/criterion.hpp"

#include "syzstab/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace syzstab {

const char* to_string(Status s) {
  switch (s) {
    case Status::Stable: return "Stable";
    case Status::StrictlySemistable: return "StrictlySemistable";
    case Status::Unstable: return "Unstable";
  }
  return "?";
}

namespace {

Monomial common_factor(const MonomialSet& v) {
  Monomial g = v.at(0);
  for (int i = 1; i < v.size(); ++i) g = gcd(g, v.at(i));
  return g;
}

/// Divides out the gcd of the whole family when it is nontrivial.
MonomialSet strip_common_factor(const MonomialSet& v,
                                std::optional<Monomial>& removed) {
  const Monomial g = common_factor(v);
  if (g.is_unit()) {
    removed.reset();
    return v;
  }
  removed = g;
  std::vector<Monomial> quotients;
  quotients.reserve(v.size());
  for (const Monomial& w : v.monomials()) quotients.push_back(quotient(w, g));
  return MonomialSet(v.n(), std::move(quotients));
}

/// All divisors of g of degree in [1, max_degree].
void append_divisors(const Monomial& g, int max_degree,
                     std::set<std::vector<int>>& out) {
  std::vector<int> exps(g.num_vars(), 0);
  const auto rec = [&](auto&& self, int var, int degree) -> void {
    if (var == g.num_vars()) {
      if (degree >= 1) out.insert(exps);
      return;
    }
    for (int e = 0; e <= g.exponent(var) && degree + e <= max_degree; ++e) {
      exps[var] = e;
      self(self, var + 1, degree + e);
    }
    exps[var] = 0;
  };
  rec(rec, 0, 0);
}

Status status_from(const Rational& extremal, const Rational& reference) {
  if (extremal < reference) return Status::Stable;
  if (extremal == reference) return Status::StrictlySemistable;
  return Status::Unstable;
}

void sort_colon_witnesses(std::vector<Witness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) {
    return canonical_before(*a.u, *b.u);
  });
}

Witness colon_witness(const Monomial& u, const Rational& lhs) {
  Witness w;
  w.kind = Witness::Kind::ColonMonomial;
  w.u = u;
  w.lhs = lhs;
  return w;
}

}  // namespace

Verdict check_equal_degree(const MonomialSet& v, ColonSearch mode) {
  if (v.size() < 2) {
    throw std::domain_error("check_equal_degree: need at least 2 monomials");
  }
  if (!v.uniform_degree()) {
    throw std::domain_error("check_equal_degree: set has mixed degrees");
  }

  Verdict verdict;
  const MonomialSet nv = strip_common_factor(v, verdict.normalized_by);
  const int d = *nv.uniform_degree();
  const int m = nv.size();
  const int n = nv.n();
  verdict.reference_slope = Rational(m - 1, d);

  if (d == 1) {
    // No intermediate degree exists; the comparison is vacuous.
    verdict.status = Status::Stable;
    return verdict;
  }

  Rational best = 0;
  std::vector<Witness> best_witnesses;
  const auto consider = [&](const Monomial& u) {
    const int dim = colon_dim(nv, u);
    const Rational lhs(dim - 1, d - u.degree());
    if (lhs > best) {
      best = lhs;
      best_witnesses.clear();
    }
    if (lhs == best) best_witnesses.push_back(colon_witness(u, lhs));
  };

  if (mode == ColonSearch::FullSweep) {
    for (int e = 1; e <= d - 1; ++e) {
      const MonomialSet layer = enumerate_monomials(n, e);
      for (const Monomial& u : layer.monomials()) consider(u);
    }
  } else {
    std::set<std::vector<int>> candidates;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const Monomial g = gcd(nv.at(i), nv.at(j));
        if (!g.is_unit()) append_divisors(g, d - 1, candidates);
      }
    }
    for (const std::vector<int>& exps : candidates) consider(Monomial(exps));
    if (candidates.empty()) {
      // Pairwise coprime family: the maximum is 0, attained by every
      // divisor of a single member (each divides exactly one).
      std::set<std::vector<int>> singles;
      for (const Monomial& w : nv.monomials()) append_divisors(w, d - 1, singles);
      for (const std::vector<int>& exps : singles) {
        best_witnesses.push_back(colon_witness(Monomial(exps), 0));
      }
    }
  }

  sort_colon_witnesses(best_witnesses);
  verdict.extremal_value = best;
  verdict.witnesses = std::move(best_witnesses);
  verdict.status = status_from(best, verdict.reference_slope);
  return verdict;
}

namespace {

/// Exact enumeration over index subsets of size 2..m-1 with incremental
/// gcds. Branches are cut when even the most favorable completion (largest
/// possible size, smallest remaining degrees, no gcd loss) cannot reach the
/// current best value.
class SubsetScanner {
 public:
  explicit SubsetScanner(const MonomialSet& v) : v_(v), m_(v.size()) {
    degrees_.reserve(m_);
    for (const Monomial& w : v.monomials()) degrees_.push_back(w.degree());
    // suffix_sorted_[p] = prefix sums of the sorted degrees of positions
    // p..m-1; entry k is the least possible degree mass of k extra picks.
    suffix_sorted_.resize(m_ + 1);
    for (int p = 0; p <= m_; ++p) {
      std::vector<long long> tail(degrees_.begin() + p, degrees_.end());
      std::sort(tail.begin(), tail.end());
      std::vector<long long>& sums = suffix_sorted_[p];
      sums.assign(tail.size() + 1, 0);
      for (size_t k = 0; k < tail.size(); ++k) sums[k + 1] = sums[k] + tail[k];
    }
  }

  void run() {
    std::vector<int> chosen;
    descend(0, chosen, std::nullopt, 0);
  }

  bool found() const { return found_; }
  const Rational& best() const { return best_; }
  const std::vector<std::vector<int>>& argmax() const { return argmax_; }

 private:
  void record(const std::vector<int>& chosen, const Rational& value) {
    if (!found_ || value > best_) {
      found_ = true;
      best_ = value;
      argmax_.clear();
    }
    if (value == best_) argmax_.push_back(chosen);
  }

  bool can_beat_best(int next, const std::vector<int>& chosen,
                     const std::optional<Monomial>& g, long long degree_sum) const {
    if (!found_) return true;
    const int k = static_cast<int>(chosen.size());
    const long long gcd_cap = g ? g->degree() : 0;
    const int avail = m_ - next;
    bool possible = false;
    for (int r = std::max(k + 1, 2); r <= std::min(m_ - 1, k + avail); ++r) {
      const long long extra = suffix_sorted_[next][r - k];
      const Rational bound(gcd_cap - degree_sum - extra, r - 1);
      if (bound >= best_) {
        possible = true;
        break;
      }
    }
    return possible;
  }

  void descend(int next, std::vector<int>& chosen, std::optional<Monomial> g,
               long long degree_sum) {
    const int k = static_cast<int>(chosen.size());
    if (k >= 2 && k <= m_ - 1) {
      record(chosen, Rational(g->degree() - degree_sum, k - 1));
    }
    if (k + 1 > m_ - 1) return;
    if (k >= 1 && !can_beat_best(next, chosen, g, degree_sum)) return;
    for (int i = next; i < m_; ++i) {
      chosen.push_back(i);
      std::optional<Monomial> g2 = g ? gcd(*g, v_.at(i)) : v_.at(i);
      descend(i + 1, chosen, std::move(g2), degree_sum + degrees_[i]);
      chosen.pop_back();
    }
  }

  const MonomialSet& v_;
  int m_;
  std::vector<long long> degrees_;
  std::vector<std::vector<long long>> suffix_sorted_;
  bool found_ = false;
  Rational best_;
  std::vector<std::vector<int>> argmax_;
};

/// Subset data mapped onto the colon scale: the maximum of
/// (|I|-1)/(d - deg gcd_I) over subsets of size 2..m-1 whose gcd is
/// nontrivial, 0 when there is none. Once a branch's gcd collapses to 1 it
/// can never recover, so the whole subtree is skipped.
Rational colon_scale_subset_extremal(const MonomialSet& nv) {
  const int m = nv.size();
  const int d = *nv.uniform_degree();
  Rational best = 0;
  const auto descend = [&](auto&& self, int next, int k,
                           const std::optional<Monomial>& g) -> void {
    if (g && g->is_unit()) return;
    if (k >= 2 && k <= m - 1) {
      const Rational value(k - 1, d - g->degree());
      if (value > best) best = value;
    }
    if (k + 1 > m - 1) return;
    for (int i = next; i < m; ++i) {
      std::optional<Monomial> g2 = g ? gcd(*g, nv.at(i)) : nv.at(i);
      self(self, i + 1, k + 1, g2);
    }
  };
  descend(descend, 0, 0, std::nullopt);
  return best;
}

}  // namespace

Verdict check_mixed(const MonomialSet& u, const MixedOptions& opts) {
  if (u.size() < 2) {
    throw std::domain_error("check_mixed: need at least 2 monomials");
  }
  if (u.size() > opts.subset_budget) {
    throw ResourceError("check_mixed: " + std::to_string(u.size()) +
                        " monomials exceed the subset budget of " +
                        std::to_string(opts.subset_budget));
  }

  Verdict verdict;
  const MonomialSet nv = strip_common_factor(u, verdict.normalized_by);
  const int m = nv.size();
  long long degree_sum = 0;
  for (const Monomial& w : nv.monomials()) degree_sum += w.degree();
  verdict.reference_slope = Rational(-degree_sum, m - 1);

  if (m == 2) {
    // The comparison ranges over subsets of size 2..m-1, which is empty.
    verdict.status = Status::Stable;
    return verdict;
  }

  SubsetScanner scanner(nv);
  scanner.run();
  verdict.extremal_value = scanner.best();
  for (const std::vector<int>& subset : scanner.argmax()) {
    Witness w;
    w.kind = Witness::Kind::Subset;
    for (int i : subset) w.subset.push_back(i + 1);
    w.lhs = scanner.best();
    verdict.witnesses.push_back(std::move(w));
  }
  std::sort(verdict.witnesses.begin(), verdict.witnesses.end(),
            [](const Witness& a, const Witness& b) {
              if (a.subset.size() != b.subset.size()) {
                return a.subset.size() < b.subset.size();
              }
              return a.subset < b.subset;
            });
  verdict.status = status_from(scanner.best(), verdict.reference_slope);
  return verdict;
}

bool cross_check(const MonomialSet& v, const MixedOptions& opts) {
  const Verdict eq = check_equal_degree(v);
  const Verdict mx = check_mixed(v, opts);
  if (eq.status != mx.status) return false;

  std::optional<Monomial> removed;
  const MonomialSet nv = strip_common_factor(v, removed);
  if (*nv.uniform_degree() <= 1) {
    // Both routes are vacuous below degree 2; statuses already agreed.
    return true;
  }
  return *eq.extremal_value == colon_scale_subset_extremal(nv);
}

BigInt bpf_subset_count(int n, int d, int m) {
  const BigInt total = numerator(eval_p(n, Rational(d)));
  const BigInt optional_count = total - (n + 1);
  if (optional_count > 1000000000) {
    throw ResourceError("bpf_subset_count: degree space too large to enumerate");
  }
  const long long choose_from = optional_count.convert_to<long long>();
  return binomial(choose_from, m - (n + 1));
}

std::vector<std::pair<MonomialSet, Verdict>> exhaustive_classify(
    int n, int d, int m, const ExhaustiveOptions& opts) {
  if (n < 1 || d < 1) {
    throw std::domain_error("exhaustive_classify: need n >= 1 and d >= 1");
  }
  const MonomialSet all = enumerate_monomials(n, d);
  if (m < n + 1 || m > all.size()) {
    throw std::domain_error("exhaustive_classify: m outside [n+1, P_n(d)]");
  }
  const BigInt count = bpf_subset_count(n, d, m);
  if (count > opts.guard) {
    throw ResourceError("exhaustive_classify: " + count.str() +
                        " base-point-free subsets exceed the guard of " +
                        opts.guard.str());
  }

  std::vector<Monomial> pure;
  std::vector<Monomial> rest;
  for (const Monomial& w : all.monomials()) {
    bool is_pure = false;
    for (int i = 0; i <= n; ++i) {
      if (w == Monomial::pure_power(n, i, d)) {
        is_pure = true;
        break;
      }
    }
    (is_pure ? pure : rest).push_back(w);
  }

  std::vector<std::pair<MonomialSet, Verdict>> results;
  const int pick = m - (n + 1);
  std::vector<int> idx(pick);
  const auto emit = [&]() {
    std::vector<Monomial> members = pure;
    for (int i : idx) members.push_back(rest[static_cast<size_t>(i)]);
    MonomialSet set(n, std::move(members));
    Verdict verdict = check_equal_degree(set);
    results.emplace_back(std::move(set), std::move(verdict));
  };
  const auto rec = [&](auto&& self, int pos, int start) -> void {
    if (pos == pick) {
      emit();
      return;
    }
    for (int i = start; i <= static_cast<int>(rest.size()) - (pick - pos); ++i) {
      idx[static_cast<size_t>(pos)] = i;
      self(self, pos + 1, i + 1);
    }
  };
  rec(rec, 0, 0);
  return results;
}

}  // namespace syzstab
