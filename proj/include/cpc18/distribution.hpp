#pragma once

#include <vector>

#include "cpc18/option.hpp"
#include "cpc18/rng.hpp"

namespace cpc18 {

struct Outcome {
  double payoff = 0.0;
  double prob = 0.0;
};

// Finite payoff distribution: support sorted ascending, payoffs distinct,
// probabilities positive and summing to 1.
class OutcomeDistribution {
 public:
  OutcomeDistribution() = default;

  static OutcomeDistribution point_mass(double payoff);
  // Merges coincident payoffs, drops zero-probability entries, sorts.
  static OutcomeDistribution from_outcomes(std::vector<Outcome> raw);

  const std::vector<Outcome>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }
  bool degenerate() const { return support_.size() == 1; }

  double mean() const;
  double variance() const;
  double min() const { return support_.front().payoff; }
  double max() const { return support_.back().payoff; }

  double total_prob() const;
  // P(X <= x), P(X < x), P(X > x), and the mass at exactly x.
  double cdf(double x) const;
  double prob_below(double x) const;
  double prob_above(double x) const;
  double mass_at(double x) const;

  // Left-continuous inverse CDF: smallest payoff with CDF >= u.
  double quantile(double u) const;

  double sample(Rng& rng) const { return quantile(rng.uniform()); }

  bool operator==(const OutcomeDistribution& other) const;

 private:
  std::vector<Outcome> support_;
};

struct DistStats {
  double mean = 0.0;
  double sd = 0.0;
  double min = 0.0;
  double max = 0.0;
};

DistStats dist_stats(const OutcomeDistribution& d);

// Expands a lottery with expected value `ev` into its outcome distribution.
// kSymm: outcomes ev - k/2 .. ev + k/2 (k = lot_num - 1) with Binomial(k, 1/2)
// masses. kRSkew: ev + C + 2^i for i = 1..n, C = -n - 1, truncated geometric
// masses (1/2)^i with the last term bumped to (1/2)^(n-1). kLSkew mirrored.
// The mean equals ev exactly in every case.
OutcomeDistribution expand_lottery(double ev, int lot_num, LotShape shape);

// Mixture of the expanded lottery (weight p_high) and the sure amount `low`
// (weight 1 - p_high), with coincident payoffs merged.
OutcomeDistribution option_distribution(const OptionSpec& opt);

struct JointSample {
  double payoff_a = 0.0;
  double payoff_b = 0.0;
};

struct JointOutcome {
  double payoff_a = 0.0;
  double payoff_b = 0.0;
  double prob = 0.0;
};

// Exact enumeration of the joint payoff distribution under the problem's
// coupling: independent product for corr = 0, rank coupling for corr = +1,
// antithetic rank coupling for corr = -1.
std::vector<JointOutcome> joint_support(const OutcomeDistribution& a,
                                        const OutcomeDistribution& b, int corr);

// Correlated sampling through a single uniform draw (corr != 0 only).
JointSample sample_joint(const ChoiceProblem& p, double u);
// Independent sampling through two uniform draws (corr == 0 only).
JointSample sample_joint(const ChoiceProblem& p, double u_a, double u_b);

JointSample sample_joint(const OutcomeDistribution& a, const OutcomeDistribution& b,
                         int corr, Rng& rng);

}  // namespace cpc18
