// Acceptance suite: every released criterion of the library, run end to end
// with exact arithmetic. One PASS/FAIL line per criterion; the process exits
// nonzero if any criterion fails.

#include "syzstab/bounds.hpp"
#include "syzstab/construct.hpp"
#include "syzstab/criterion.hpp"
#include "syzstab/exterior.hpp"
#include "syzstab/secant.hpp"

#include "testutil.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace syzstab;

namespace {

int g_failures = 0;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void require(bool ok, const std::string& detail) {
    if (!ok) {
      failed_ = true;
      if (!first_detail_.empty()) first_detail_ += "; ";
      first_detail_ += detail;
    }
  }

  void note(const std::string& text) { notes_ = text; }

  ~Criterion() {
    if (failed_) {
      ++g_failures;
      std::cout << "[FAIL] " << name_ << ": " << first_detail_ << "\n";
    } else {
      std::cout << "[PASS] " << name_;
      if (!notes_.empty()) std::cout << " (" << notes_ << ")";
      std::cout << "\n";
    }
  }

 private:
  std::string name_;
  std::string notes_;
  std::string first_detail_;
  bool failed_ = false;
};

long long p_dim(int n, int d) {
  return numerator(eval_p(n, Rational(d))).convert_to<long long>();
}

std::string spot(int n, int d, int m) {
  std::ostringstream os;
  os << "(n=" << n << ", d=" << d << ", m=" << m << ")";
  return os.str();
}

// 1. Every admissible (n, d, m) with 2 <= n <= 4, 1 <= d <= 6 admits a
//    strictly stable construction, except exactly (2,2,5): refused strict,
//    semistable nonstrict.
void criterion_construction_sweep() {
  Criterion c("criterion 1: construction sweep over 2<=n<=4, 1<=d<=6");
  const auto start = std::chrono::steady_clock::now();
  int built = 0;
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= 6; ++d) {
      const long long top = p_dim(n, d);
      for (int m = n + 1; m <= top; ++m) {
        if (n == 2 && d == 2 && m == 5) {
          bool refused = false;
          try {
            construct(n, d, m, Strictness::Strict);
          } catch (const ImpossibleConstructionError&) {
            refused = true;
          }
          c.require(refused, "(2,2,5) strict was not refused");
          try {
            const Construction fallback = construct(n, d, m, Strictness::NonStrict);
            c.require(fallback.verdict.status == Status::StrictlySemistable,
                      "(2,2,5) nonstrict is not semistable");
          } catch (const std::exception& e) {
            c.require(false, std::string("(2,2,5) nonstrict failed: ") + e.what());
          }
          continue;
        }
        try {
          const Construction built_one = construct(n, d, m, Strictness::Strict);
          ++built;
          c.require(built_one.verdict.status == Status::Stable,
                    spot(n, d, m) + " is not stable");
          c.require(built_one.set.size() == m && is_bpf(built_one.set),
                    spot(n, d, m) + " shape is wrong");
        } catch (const std::exception& e) {
          c.require(false, spot(n, d, m) + " failed: " + e.what());
        }
      }
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  c.require(elapsed.count() < 60000, "sweep exceeded one minute");
  c.note(std::to_string(built) + " families built and verified in " +
         std::to_string(elapsed.count()) + " ms");
}

// 2. The fixed published families verify Stable: the 7-element cubic family
//    and the m = d+1 families for d = 2..5.
void criterion_fixed_families() {
  Criterion c("criterion 2: fixed families verify stable");
  const MonomialSet seven(2, {Monomial({3, 0, 0}), Monomial({1, 2, 0}),
                              Monomial({0, 3, 0}), Monomial({2, 0, 1}),
                              Monomial({1, 1, 1}), Monomial({0, 1, 2}),
                              Monomial({0, 0, 3})});
  c.require(check_equal_degree(seven).status == Status::Stable,
            "7-element cubic family is not stable");

  const std::vector<MonomialSet> small = {
      MonomialSet(2, {Monomial({2, 0, 0}), Monomial({0, 2, 0}),
                      Monomial({0, 0, 2})}),
      MonomialSet(2, {Monomial({3, 0, 0}), Monomial({0, 3, 0}),
                      Monomial({0, 0, 3}), Monomial({1, 1, 1})}),
      MonomialSet(2, {Monomial({4, 0, 0}), Monomial({0, 4, 0}),
                      Monomial({2, 2, 0}), Monomial({0, 0, 4}),
                      Monomial({1, 1, 2})}),
      MonomialSet(2, {Monomial({5, 0, 0}), Monomial({0, 5, 0}),
                      Monomial({2, 3, 0}), Monomial({0, 0, 5}),
                      Monomial({2, 0, 3}), Monomial({1, 2, 2})}),
  };
  for (size_t i = 0; i < small.size(); ++i) {
    const int d = static_cast<int>(i) + 2;
    const Verdict v = check_equal_degree(small[i]);
    c.require(v.status == Status::Stable,
              "m = d+1 family for d = " + std::to_string(d) + " is not stable");
    c.require(small[i].size() == d + 1 && is_bpf(small[i]),
              "m = d+1 family for d = " + std::to_string(d) + " is malformed");
  }
}

// 3. All 3 base-point-free 5-subsets of the quadrics in three variables are
//    strictly semistable, none stable, by brute force, under one second.
void criterion_exceptional_exhaustive() {
  Criterion c("criterion 3: exhaustive (2,2,5) classification");
  const auto start = std::chrono::steady_clock::now();
  const auto results = exhaustive_classify(2, 2, 5);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  c.require(results.size() == 3,
            "expected 3 subsets, found " + std::to_string(results.size()));
  for (const auto& [set, verdict] : results) {
    c.require(verdict.status == Status::StrictlySemistable,
              "a 5-subset is not strictly semistable");
  }
  c.require(elapsed.count() < 1000, "classification took over one second");
  c.note("3 subsets in " + std::to_string(elapsed.count()) + " ms");
}

// 4. The colon route and the subset route agree in status and extremal value
//    on every base-point-free equal-degree family with n = 2, d <= 3, m <= 7,
//    and on 500 random families with n = 3, d <= 3.
void criterion_cross_validation() {
  Criterion c("criterion 4: colon/subset criterion cross-validation");
  int exhaustive_count = 0;
  for (int d = 1; d <= 3; ++d) {
    const long long top = p_dim(2, d);
    for (int m = 3; m <= std::min<long long>(7, top); ++m) {
      for (const auto& [set, verdict] : exhaustive_classify(2, d, m)) {
        ++exhaustive_count;
        if (!cross_check(set)) {
          c.require(false, "cross-check failed on an exhaustive (2," +
                               std::to_string(d) + "," + std::to_string(m) +
                               ") set");
        }
      }
    }
  }
  auto rng = testutil::make_rng(20260810);
  int random_count = 0;
  while (random_count < 500) {
    const int d = testutil::rand_int(rng, 2, 3);
    const long long top = p_dim(3, d);
    const int m =
        testutil::rand_int(rng, 4, static_cast<int>(std::min<long long>(top, 16)));
    const MonomialSet v = testutil::random_bpf_set(rng, 3, d, m);
    ++random_count;
    if (!cross_check(v)) {
      c.require(false, "cross-check failed on a random " + spot(3, d, m) + " set");
    }
  }
  c.note(std::to_string(exhaustive_count) + " exhaustive + " +
         std::to_string(random_count) + " random families");
}

// 5. 1000+ random base-point-free families above the threshold all verify
//    Stable, and the threshold at (2,2) equals 5 exactly.
void criterion_threshold_consistency() {
  Criterion c("criterion 5: threshold consistency");
  c.require(stability_threshold(2, 2) == 5, "threshold(2,2) is not 5");
  auto rng = testutil::make_rng(90125);
  int verified = 0;
  for (int n = 2; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const Rational threshold = stability_threshold(n, d);
      const long long top = p_dim(n, d);
      const int m_min = static_cast<int>(floor_rational(threshold)) + 1;
      for (int trial = 0; trial < 170; ++trial) {
        const int m = testutil::rand_int(rng, m_min, static_cast<int>(top));
        const Verdict v = check_equal_degree(testutil::random_bpf_set(rng, n, d, m));
        ++verified;
        if (v.status != Status::Stable) {
          c.require(false, "above-threshold family " + spot(n, d, m) +
                               " verified " + to_string(v.status));
        }
      }
    }
  }
  c.require(verified >= 1000, "fewer than 1000 samples");
  c.note(std::to_string(verified) + " above-threshold families all stable");
}

// 6. Exterior suite: the differential squares to zero, the 5-cycle element
//    is closed yet indecomposable, and family extraction meets all three of
//    its conclusions on 200+ generated closed decomposables.
void criterion_exterior_suite() {
  Criterion c("criterion 6: exterior algebra suite");
  auto rng = testutil::make_rng(271828);

  for (int trial = 0; trial < 100; ++trial) {
    const int m = testutil::rand_int(rng, 3, 8);
    const int r = testutil::rand_int(rng, 2, std::min(m, 5));
    ExteriorElement w(m, r);
    const int terms = testutil::rand_int(rng, 1, 6);
    for (int t = 0; t < terms; ++t) {
      std::set<int> key;
      while (static_cast<int>(key.size()) < r) key.insert(testutil::rand_int(rng, 1, m));
      w.add_term(IndexTuple(key.begin(), key.end()),
                 testutil::rand_rational(rng, 5, 3));
    }
    if (w.is_zero()) continue;
    if (!koszul_delta(koszul_delta(w)).is_zero()) {
      c.require(false, "differential does not square to zero");
    }
  }

  ExteriorElement cycle(5, 2);
  cycle.add_term({1, 2}, 1);
  cycle.add_term({2, 3}, 1);
  cycle.add_term({3, 4}, 1);
  cycle.add_term({4, 5}, 1);
  cycle.add_term({1, 5}, -1);
  c.require(koszul_delta(cycle).is_zero(), "cycle element is not closed");
  c.require(!is_decomposable(cycle), "cycle element passed the quadric test");

  int extracted = 0;
  while (extracted < 200) {
    const int m = testutil::rand_int(rng, 4, 8);
    const int r = testutil::rand_int(rng, 2, std::min(m - 2, 4));
    std::vector<std::vector<Rational>> vs;
    for (int i = 0; i < r; ++i) {
      std::vector<Rational> v(static_cast<size_t>(m));
      Rational sum = 0;
      for (Rational& x : v) {
        x = testutil::rand_rational(rng, 4, 3);
        sum += x;
      }
      v.back() -= sum;
      vs.push_back(std::move(v));
    }
    const ExteriorElement w = wedge_of_vectors(m, vs);
    if (w.is_zero()) continue;
    ++extracted;
    const IndexFamilies fams = extract_index_families(w);
    std::set<int> seen;
    int size_sum = 0;
    bool disjoint = true;
    for (const std::vector<int>& family : fams.families) {
      if (family.size() < 2) c.require(false, "family of size < 2");
      size_sum += static_cast<int>(family.size());
      for (int i : family) {
        if (seen.count(i)) disjoint = false;
        seen.insert(i);
      }
    }
    c.require(disjoint, "families are not disjoint");
    c.require(size_sum == w.r() + static_cast<int>(fams.families.size()),
              "family sizes do not sum to r + s");
    ExteriorElement product = ExteriorElement::one(m);
    for (const std::vector<int>& family : fams.families) {
      product = wedge(product,
                      koszul_delta(ExteriorElement::wedge_monomial(m, family)));
    }
    bool contained = true;
    for (const auto& [key, coeff] : product.terms()) {
      if (w.coeff(key) == 0) contained = false;
    }
    c.require(contained, "support inclusion fails");
  }
  c.note("100 differential squares, the cycle regression, and " +
         std::to_string(extracted) + " extractions verified by expansion");
}

// 7. The catalecticant-rank test agrees with the linear-factor oracle on 500
//    random rank-5 subspaces and on all 3 monomial complements.
void criterion_secant_oracle() {
  Criterion c("criterion 7: secant test against the linear-factor oracle");
  auto rng = testutil::make_rng(314159);
  int done = 0;
  while (done < 500) {
    RationalMatrix v(5, RationalVector(kQuadricDim));
    for (auto& row : v) {
      for (auto& x : row) x = testutil::rand_int(rng, -9, 9);
    }
    QuadricFunctional lambda;
    try {
      lambda = functional_from_subspace(v);
    } catch (const std::domain_error&) {
      continue;
    }
    ++done;
    const SecantStatus status = secant_stability_test(lambda);
    const bool has_factor = find_linear_factor(v).has_value();
    if ((status == SecantStatus::Stable) == has_factor) {
      c.require(false, "rank test and factor oracle disagree");
    }
  }
  for (int slot : {1, 2, 4}) {
    RationalMatrix rows;
    for (int i = 0; i < kQuadricDim; ++i) {
      if (i == slot) continue;
      RationalVector row(kQuadricDim, 0);
      row[static_cast<size_t>(i)] = 1;
      rows.push_back(std::move(row));
    }
    const SecantStatus status = secant_stability_test(functional_from_subspace(rows));
    c.require(status == SecantStatus::NotStable,
              "a monomial complement is not NotStable");
    c.require(find_linear_factor(rows).has_value(),
              "a monomial complement has no linear factor");
  }
  c.note(std::to_string(done) + " random subspaces + 3 monomial complements");
}

// 8. The gap inequality fails exactly at (n,d,c) = (2,2,1) on the grid
//    2 <= n <= 4, 2 <= d <= 6, 1 <= c <= n-1.
void criterion_gap_grid() {
  Criterion c("criterion 8: gap inequality grid");
  for (int n = 2; n <= 4; ++n) {
    for (int d = 2; d <= 6; ++d) {
      for (int cc = 1; cc <= n - 1; ++cc) {
        const bool holds = flenner_gap_holds(n, d, cc);
        const bool expected = !(n == 2 && d == 2 && cc == 1);
        if (holds != expected) {
          c.require(false, "unexpected value at (n=" + std::to_string(n) +
                               ", d=" + std::to_string(d) +
                               ", c=" + std::to_string(cc) + ")");
        }
      }
    }
  }
}

}  // namespace

int main() {
  criterion_construction_sweep();
  criterion_fixed_families();
  criterion_exceptional_exhaustive();
  criterion_cross_validation();
  criterion_threshold_consistency();
  criterion_exterior_suite();
  criterion_secant_oracle();
  criterion_gap_grid();
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
