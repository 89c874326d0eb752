#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "cpc18/distribution.hpp"
#include "cpc18/errors.hpp"
#include "cpc18/generator.hpp"
#include "cpc18/problem_io.hpp"
#include "doctest.h"

using namespace cpc18;

namespace {

OptionSpec sure(int v) { return {v, v, 1.0, 1, LotShape::kNone}; }

OptionSpec two_outcome(int low, int high, double p_high) {
  return {low, high, p_high, 1, LotShape::kNone};
}

ChoiceProblem make_problem(OptionSpec a, OptionSpec b, bool amb = false, int corr = 0) {
  return {"t", a, b, amb, corr};
}

}  // namespace

TEST_CASE("expand_lottery degenerate, symmetric and skewed shapes") {
  const auto deg = expand_lottery(10, 1, LotShape::kNone);
  REQUIRE(deg.size() == 1);
  CHECK(deg.support()[0].payoff == 10.0);
  CHECK(deg.support()[0].prob == 1.0);

  // Symm, lot_num 3: {9: 1/4, 10: 1/2, 11: 1/4}.
  const auto symm = expand_lottery(10, 3, LotShape::kSymm);
  REQUIRE(symm.size() == 3);
  CHECK(symm.support()[0].payoff == 9.0);
  CHECK(symm.support()[0].prob == 0.25);
  CHECK(symm.support()[1].payoff == 10.0);
  CHECK(symm.support()[1].prob == 0.5);
  CHECK(symm.support()[2].payoff == 11.0);
  CHECK(symm.support()[2].prob == 0.25);

  // R-skew, lot_num 2: C = -3, outcomes {9, 11}, last mass bumped to 1/2.
  const auto rskew = expand_lottery(10, 2, LotShape::kRSkew);
  REQUIRE(rskew.size() == 2);
  CHECK(rskew.support()[0].payoff == 9.0);
  CHECK(rskew.support()[0].prob == 0.5);
  CHECK(rskew.support()[1].payoff == 11.0);
  CHECK(rskew.support()[1].prob == 0.5);
  CHECK(rskew.mean() == 10.0);

  CHECK_THROWS_AS(expand_lottery(10, 1, LotShape::kSymm), ValidationError);
  CHECK_THROWS_AS(expand_lottery(10, 3, LotShape::kNone), ValidationError);
  CHECK_THROWS_AS(expand_lottery(10, 0, LotShape::kSymm), ValidationError);
}

TEST_CASE("expand_lottery preserves the expected value exactly across the space") {
  for (LotShape shape : {LotShape::kSymm, LotShape::kRSkew, LotShape::kLSkew}) {
    for (int n = 2; n <= 10; ++n) {
      for (double ev : {-50.0, -7.0, 0.0, 13.0, 256.0}) {
        const auto d = expand_lottery(ev, n, shape);
        CHECK(std::abs(d.total_prob() - 1.0) <= 1e-12);
        CHECK(std::abs(d.mean() - ev) <= 1e-9);
      }
    }
  }
}

TEST_CASE("option_distribution mixes the lottery with the low branch") {
  const auto sure10 = option_distribution(OptionSpec{0, 10, 1.0, 1, LotShape::kNone});
  REQUIRE(sure10.size() == 1);
  CHECK(sure10.support()[0].payoff == 10.0);

  const auto coin = option_distribution(two_outcome(0, 20, 0.5));
  REQUIRE(coin.size() == 2);
  CHECK(coin.support()[0].payoff == 0.0);
  CHECK(coin.support()[0].prob == 0.5);
  CHECK(coin.support()[1].payoff == 20.0);
  CHECK(coin.mean() == 10.0);

  // Coincident payoff 9 merges: lottery {9,10,11} at pH=.5 plus L=9 at .5.
  const auto merged = option_distribution(OptionSpec{9, 10, 0.5, 3, LotShape::kSymm});
  REQUIRE(merged.size() == 3);
  CHECK(merged.support()[0].payoff == 9.0);
  CHECK(merged.support()[0].prob == doctest::Approx(0.625).epsilon(1e-12));
  CHECK(merged.support()[1].prob == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(merged.support()[2].prob == doctest::Approx(0.125).epsilon(1e-12));
  CHECK(merged.mean() == doctest::Approx(9.5).epsilon(1e-12));
}

TEST_CASE("dist_stats exact moments") {
  const auto s1 = dist_stats(OutcomeDistribution::point_mass(10));
  CHECK(s1.mean == 10.0);
  CHECK(s1.sd == 0.0);
  CHECK(s1.min == 10.0);
  CHECK(s1.max == 10.0);

  const auto s2 = dist_stats(option_distribution(two_outcome(0, 20, 0.5)));
  CHECK(s2.mean == 10.0);
  CHECK(s2.sd == 10.0);
  CHECK(s2.min == 0.0);
  CHECK(s2.max == 20.0);

  const auto s3 = dist_stats(option_distribution(two_outcome(-1, 9, 0.1)));
  CHECK(s3.mean == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s3.sd == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(s3.min == -1.0);
  CHECK(s3.max == 9.0);
}

TEST_CASE("sample_joint couplings") {
  // Comonotone coupling of identical options is the diagonal.
  auto p = make_problem(two_outcome(0, 20, 0.5), two_outcome(0, 20, 0.5), false, 1);
  for (double u : {0.0, 0.2, 0.5, 0.7, 0.99}) {
    const auto s = sample_joint(p, u);
    CHECK(s.payoff_a == s.payoff_b);
  }

  // Antithetic coupling: A={1,3}, B={2,4} pairs as (1,4) and (3,2).
  auto q = make_problem(two_outcome(1, 3, 0.5), two_outcome(2, 4, 0.5), false, -1);
  const auto s1 = sample_joint(q, 0.2);
  CHECK(s1.payoff_a == 1.0);
  CHECK(s1.payoff_b == 4.0);
  const auto s2 = sample_joint(q, 0.7);
  CHECK(s2.payoff_a == 3.0);
  CHECK(s2.payoff_b == 2.0);

  // Independent draws use separate quantiles.
  auto r = make_problem(two_outcome(0, 20, 0.5), two_outcome(0, 20, 0.5), false, 0);
  const auto s3 = sample_joint(r, 0.2, 0.9);
  CHECK(s3.payoff_a == 0.0);
  CHECK(s3.payoff_b == 20.0);

  // Correlated coupling with a zero-variance option mirrors rejection rule d.
  auto bad = make_problem(sure(5), two_outcome(0, 20, 0.5), false, 1);
  CHECK_THROWS_AS(sample_joint(bad, 0.3), ValidationError);
}

TEST_CASE("joint_support marginals match option distributions exactly") {
  Rng rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    ChoiceProblem p = generate_problem(rng);
    const auto da = option_distribution(p.a);
    const auto db = option_distribution(p.b);
    const auto joint = joint_support(da, db, p.corr);

    std::map<double, double> ma, mb;
    double total = 0.0;
    for (const auto& j : joint) {
      ma[j.payoff_a] += j.prob;
      mb[j.payoff_b] += j.prob;
      total += j.prob;
    }
    CHECK(std::abs(total - 1.0) <= 1e-9);
    REQUIRE(ma.size() == da.size());
    REQUIRE(mb.size() == db.size());
    for (const auto& o : da.support())
      CHECK(ma.at(o.payoff) == doctest::Approx(o.prob).epsilon(1e-9));
    for (const auto& o : db.support())
      CHECK(mb.at(o.payoff) == doctest::Approx(o.prob).epsilon(1e-9));
  }
}

TEST_CASE("validate_problem flags each rejection rule") {
  Rng rng(7);
  const ChoiceProblem good = generate_problem(rng);
  CHECK(validate_problem(good).ok);

  // (a) payoff out of range.
  auto a = make_problem(sure(300), sure(5));
  const auto va = validate_problem(a);
  CHECK_FALSE(va.ok);
  REQUIRE(va.violations.size() == 1);
  CHECK(va.violations[0] == RejectionRule::kPayoffRange);

  // (b) indistinguishable options.
  auto b = make_problem(two_outcome(0, 10, 0.5), two_outcome(0, 10, 0.5));
  CHECK(validate_problem(b).violations[0] == RejectionRule::kIndistinguishable);
  // ...but identical distributions under ambiguity are fine (rule c aside).
  auto b_amb = make_problem(two_outcome(0, 10, 0.5), two_outcome(0, 10, 0.5), true);
  CHECK(validate_problem(b_amb).ok);

  // (c) ambiguous with a degenerate Option B.
  auto c = make_problem(two_outcome(0, 10, 0.5), sure(5), true);
  CHECK(validate_problem(c).violations[0] == RejectionRule::kAmbiguousDegenerate);

  // (d) correlation with a zero-variance option.
  auto d = make_problem(sure(10), two_outcome(0, 10, 0.5), false, 1);
  CHECK(validate_problem(d).violations[0] == RejectionRule::kCorrelatedNoVariance);

  // Type invariants.
  ChoiceProblem bad = good;
  bad.a.p_high = 1.5;
  CHECK(validate_problem(bad).violations[0] == RejectionRule::kBadSpec);
}

TEST_CASE("generator marginals and round-trip validity") {
  const std::size_t n = 4000;
  const auto problems = generate_problems(n, 20260809);

  std::size_t amb = 0, corr_zero = 0, corr_pos = 0, corr_neg = 0;
  std::set<double> p_high_seen;
  for (const auto& p : problems) {
    CHECK(validate_problem(p).ok);
    amb += p.amb;
    corr_zero += p.corr == 0;
    corr_pos += p.corr == 1;
    corr_neg += p.corr == -1;
    p_high_seen.insert(p.a.p_high);
    p_high_seen.insert(p.b.p_high);
  }
  const auto& allowed = admissible_p_high();
  for (double v : p_high_seen)
    CHECK(std::count(allowed.begin(), allowed.end(), v) == 1);

  auto within = [n](std::size_t count, double p) {
    const double sigma = std::sqrt(p * (1 - p) * n);
    return std::abs(static_cast<double>(count) - p * n) <= 3 * sigma;
  };
  CHECK(within(amb, 0.2));
  CHECK(within(corr_zero, 0.8));
  CHECK(within(corr_pos, 0.1));
  CHECK(within(corr_neg, 0.1));
}

TEST_CASE("generator is reproducible and parallel-safe") {
  const auto once = generate_problems(64, 5);
  const auto twice = generate_problems(64, 5);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) {
    CHECK(once[i].a == twice[i].a);
    CHECK(once[i].b == twice[i].b);
    CHECK(once[i].amb == twice[i].amb);
    CHECK(once[i].corr == twice[i].corr);
  }
}

TEST_CASE("problem CSV round-trips") {
  const auto problems = generate_problems(25, 11);
  const std::string path = "test_problems_roundtrip.csv";
  write_problems_csv(path, problems);
  const auto back = read_problems_csv(path);
  REQUIRE(back.size() == problems.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].id == problems[i].id);
    CHECK(back[i].a == problems[i].a);
    CHECK(back[i].b == problems[i].b);
    CHECK(back[i].amb == problems[i].amb);
    CHECK(back[i].corr == problems[i].corr);
  }
  std::remove(path.c_str());
}
