#pragma once

#include <optional>

#include "cpc18/distribution.hpp"
#include "cpc18/option.hpp"

namespace cpc18::models {

// How a model treats Option B when its probabilities are hidden (amb = 1):
// kStrict rejects the problem, kUniform substitutes equal probabilities over
// B's listed outcomes.
enum class AmbiguityPolicy { kStrict, kUniform };

// Equal-probability reading of an option's outcomes, for kUniform.
OutcomeDistribution ambiguous_uniform(const OptionSpec& opt);

// Distribution Option B is evaluated under, given the policy.
OutcomeDistribution effective_b(const ChoiceProblem& p, AmbiguityPolicy policy);

struct CptParams {
  double alpha = 0.88;   // diminishing sensitivity
  double gamma = 0.89;   // probability sensitivity
  double delta = 0.9;    // weighting elevation
  double lambda = 1.2;   // loss aversion
  std::optional<double> mu;  // logit sensitivity; present iff stochastic

  void validate() const;
};

// Shipped parameter sets (grid-search fits on the public training data).
CptParams default_deterministic_cpt();  // alpha .88, gamma .89, delta .9, lambda 1.2
CptParams default_stochastic_cpt();     // alpha .91, gamma .84, delta .83, lambda 1.14, mu .25

// u(x) = x^alpha for gains, -lambda * (-x)^alpha for losses.
double cpt_utility(double x, double alpha, double lambda);

// w(p) = delta p^gamma / (delta p^gamma + (1-p)^gamma).
double cpt_weight(double p, double gamma, double delta);

// Rank-dependent weighted value: losses weighted cumulatively from the worst
// outcome, gains decumulatively from the best.
double cpt_weighted_value(const OutcomeDistribution& prospect, const CptParams& params);

enum class CptMode { kDeterministic, kStochastic };

// P(choose B). Deterministic: 1 / 0 / 0.5 by weighted-value comparison.
// Stochastic: logistic in mu * (WV(B) - WV(A)), computed overflow-free.
// The prediction is constant across blocks.
double cpt_predict(const ChoiceProblem& p, const CptParams& params, CptMode mode,
                   AmbiguityPolicy policy = AmbiguityPolicy::kStrict);

}  // namespace cpc18::models
