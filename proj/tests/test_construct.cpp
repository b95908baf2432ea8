#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syzstab/bounds.hpp"
#include "syzstab/construct.hpp"
#include "testutil.hpp"

#include <functional>

using namespace syzstab;

namespace {

long long p_dim(int n, int d) {
  return numerator(eval_p(n, Rational(d))).convert_to<long long>();
}

/// Largest colon ratio over every divisor monomial, by full sweep.
Rational colon_extremal(const MonomialSet& v) {
  const Verdict verdict = check_equal_degree(v, ColonSearch::FullSweep);
  REQUIRE(verdict.extremal_value.has_value());
  return *verdict.extremal_value;
}

void walk_traces(const ConstructionTrace& t,
                 const std::function<void(const ConstructionTrace&)>& visit) {
  visit(t);
  for (const ConstructionTrace& c : t.children) walk_traces(c, visit);
}

}  // namespace

TEST_CASE("ladder families") {
  CHECK(construct_n1(4, 3, 2) ==
        MonomialSet(1, {Monomial({4, 0}), Monomial({0, 4}), Monomial({2, 2})}));
  CHECK(construct_n1(5, 2, 5) == MonomialSet(1, {Monomial({5, 0}), Monomial({0, 5})}));
  CHECK_THROWS_AS(construct_n1(4, 6, 1), std::domain_error);
  CHECK_THROWS_AS(construct_n1(4, 3, 3), std::domain_error);
  CHECK_THROWS_AS(construct_n1(4, 3, 0), std::domain_error);
}

TEST_CASE("ladder colon ratios are bounded by 1/c") {
  const MonomialSet v = construct_n1(6, 4, 2);
  CHECK(colon_dim(v, Monomial({2, 0})) == 3);
  CHECK(colon_extremal(v) == Rational(1, 2));

  for (int d = 2; d <= 8; ++d) {
    for (int m = 2; m <= d + 1; ++m) {
      for (int c = 1; (m - 1) * c <= d; ++c) {
        const MonomialSet ladder = construct_n1(d, m, c);
        CHECK(ladder.size() == m);
        CHECK(is_bpf(ladder));
        CHECK(colon_extremal(ladder) <= Rational(1, c));
      }
    }
  }
}

TEST_CASE("plane constructions match the fixed families") {
  const Construction seven = construct_n2(3, 7, Strictness::Strict);
  CHECK(seven.set ==
        MonomialSet(2, {Monomial({3, 0, 0}), Monomial({1, 2, 0}),
                        Monomial({0, 3, 0}), Monomial({2, 0, 1}),
                        Monomial({1, 1, 1}), Monomial({0, 1, 2}),
                        Monomial({0, 0, 3})}));
  CHECK(seven.verdict.status == Status::Stable);

  const Construction squares = construct_n2(2, 3, Strictness::Strict);
  CHECK(squares.set == MonomialSet(2, {Monomial({2, 0, 0}), Monomial({0, 2, 0}),
                                       Monomial({0, 0, 2})}));
  CHECK(squares.verdict.status == Status::Stable);
}

TEST_CASE("the m = d+1 strict families for small degrees") {
  const std::vector<MonomialSet> expected = {
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
  for (int d = 2; d <= 5; ++d) {
    const Construction c = construct_n2(d, d + 1, Strictness::Strict);
    CHECK(c.set == expected[static_cast<size_t>(d - 2)]);
    CHECK(c.verdict.status == Status::Stable);
  }
  // the split-insert shape takes over from d = 6
  const Construction big = construct_n2(6, 7, Strictness::Strict);
  CHECK(big.trace.rule == "insert");
  CHECK(big.trace.params.at("a") == 3);
  CHECK(big.trace.params.at("b") == 3);
  CHECK(big.set.contains(Monomial({0, 3, 3})));
}

TEST_CASE("the exceptional plane case") {
  CHECK_THROWS_AS(construct_n2(2, 5, Strictness::Strict),
                  ImpossibleConstructionError);
  const Construction c = construct_n2(2, 5, Strictness::NonStrict);
  CHECK(c.verdict.status == Status::StrictlySemistable);
  CHECK(c.trace.variant == "exceptional-semistable");
}

TEST_CASE("plane dispatch covers both strictness levels") {
  for (int d = 1; d <= 6; ++d) {
    const long long top = p_dim(2, d);
    for (int m = 3; m <= top; ++m) {
      const Construction loose = construct_n2(d, m, Strictness::NonStrict);
      CHECK(loose.set.size() == m);
      CHECK(is_bpf(loose.set));
      CHECK(loose.verdict.status != Status::Unstable);

      if (d == 2 && m == 5) continue;
      const Construction strict = construct_n2(d, m, Strictness::Strict);
      CHECK(strict.set.size() == m);
      CHECK(strict.verdict.status == Status::Stable);
    }
  }
  CHECK_THROWS_AS(construct_n2(2, 7, Strictness::Strict), std::domain_error);
  CHECK_THROWS_AS(construct_n2(3, 2, Strictness::Strict), std::domain_error);
}

TEST_CASE("glued parameter relations hold on every dispatch") {
  for (int d = 1; d <= 6; ++d) {
    const long long top = p_dim(2, d);
    for (int m = 3; m <= top; ++m) {
      for (const Strictness req : {Strictness::NonStrict, Strictness::Strict}) {
        if (req == Strictness::Strict && d == 2 && m == 5) continue;
        const Construction c = construct_n2(d, m, req);
        walk_traces(c.trace, [](const ConstructionTrace& t) {
          if (t.rule != "glued") return;
          const long long td = t.params.at("d");
          const long long tm = t.params.at("m");
          const long long m1 = t.params.at("m1");
          const long long m2 = t.params.at("m2");
          const long long c1 = t.params.at("c1");
          const long long c2 = t.params.at("c2");
          CHECK(tm - 1 == (m1 - 1) + (m2 - 1));
          const Rational lower(td, tm - 1);
          CHECK(lower <= c1);
          CHECK(Rational(c1) <= Rational(td, m1 - 1));
          CHECK(lower <= c2);
          CHECK(Rational(c2) <= Rational(td, m2 - 1));
          if (t.variant.rfind("strict", 0) == 0) {
            const bool rel3 = lower < c1 && Rational(c1) < Rational(td, m1 - 1) &&
                              lower < c2 && Rational(c2) <= Rational(td, m2 - 1);
            const bool rel4 = lower < c1 && Rational(c1) <= Rational(td, m1 - 1) &&
                              lower < c2 && Rational(c2) < Rational(td, m2 - 1);
            CHECK((rel3 || rel4));
          }
        });
      }
    }
  }
}

TEST_CASE("the recursive dispatcher reaches the named families") {
  const Construction a = construct(3, 2, 4, Strictness::Strict);
  CHECK(a.set == MonomialSet(3, {Monomial({2, 0, 0, 0}), Monomial({0, 2, 0, 0}),
                                 Monomial({0, 0, 2, 0}), Monomial({0, 0, 0, 2})}));
  CHECK(a.trace.rule == "apex");

  // m = P_2(2) + 2 lands in the tail case with l = 2
  const Construction b = construct(3, 2, 8, Strictness::Strict);
  CHECK(b.trace.rule == "tail");
  CHECK(b.trace.params.at("l") == 2);
  std::vector<Monomial> expected;
  const MonomialSet plane_quadrics = enumerate_monomials(2, 2);
  for (const Monomial& w : plane_quadrics.monomials()) {
    std::vector<int> exps = w.exponents();
    exps.push_back(0);
    expected.emplace_back(std::move(exps));
  }
  expected.push_back(Monomial({0, 0, 1, 1}));
  expected.push_back(Monomial({0, 0, 0, 2}));
  CHECK(b.set == MonomialSet(3, std::move(expected)));

  const Construction c = construct(3, 3, 20, Strictness::Strict);
  CHECK(c.set == enumerate_monomials(3, 3));
  CHECK(c.verdict.status == Status::Stable);
}

TEST_CASE("dispatcher domain errors") {
  CHECK_THROWS_AS(construct(3, 2, 3, Strictness::Strict), std::domain_error);
  CHECK_THROWS_AS(construct(3, 2, 11, Strictness::Strict), std::domain_error);
  CHECK_THROWS_AS(construct(0, 2, 3, Strictness::Strict), std::domain_error);
  CHECK_THROWS_AS(construct(2, 0, 3, Strictness::Strict), std::domain_error);
}

TEST_CASE("one-dimensional wrapper picks the largest step") {
  const Construction c = construct(1, 7, 3, Strictness::Strict);
  CHECK(c.trace.params.at("c") == 3);
  CHECK(c.set.size() == 3);
  CHECK(is_bpf(c.set));
  CHECK(colon_extremal(c.set) <= Rational(1, 3));
}

TEST_CASE("trace replay reproduces every construction") {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= 4; ++d) {
      const long long top = p_dim(n, d);
      for (int m = n + 1; m <= top; ++m) {
        if (n == 2 && d == 2 && m == 5) {
          const Construction c = construct(n, d, m, Strictness::NonStrict);
          CHECK(replay_trace(c.trace) == c.set);
          continue;
        }
        const Construction c = construct(n, d, m, Strictness::Strict);
        CHECK(replay_trace(c.trace) == c.set);
        CHECK(c.verdict.status == Status::Stable);
        CHECK(is_bpf(c.set));
      }
    }
  }
}

TEST_CASE("replay rejects malformed traces") {
  ConstructionTrace t;
  t.rule = "nonsense";
  CHECK_THROWS_AS(replay_trace(t), std::invalid_argument);
  t.rule = "ladder";
  CHECK_THROWS_AS(replay_trace(t), std::invalid_argument);
}
