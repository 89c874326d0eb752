#pragma once

#include <cstdint>
#include <vector>

#include "cpc18/cpt.hpp"
#include "cpc18/option.hpp"

namespace cpc18::models {

// Long-term-memory context for decision-by-sampling comparisons: empirical
// value lists for the two attribute kinds.
struct DbsContext {
  std::vector<double> amounts;
  std::vector<double> probabilities;

  // Synthetic default: log-normal amount quantiles (median 20, sigma 1) and
  // the probability grid .01...99.
  static DbsContext synthetic_default();
  // Converts a pound-denominated amount list at 4.5 shekels per pound.
  static std::vector<double> shekels_from_pounds(const std::vector<double>& pounds);

  void validate() const;
};

struct DbsParams {
  double outcome_threshold = 1.0;  // favorable if amount exceeds by more than this
  double prob_threshold = 0.1;    // same, for probabilities
  int choice_threshold = 1;       // net favorable-tally lead needed to decide
  DbsContext context = DbsContext::synthetic_default();

  void validate() const;
};

// Monte Carlo estimate of P(choose B) by tallied ordinal comparisons: each
// step samples a target attribute value (amount or probability) of a random
// option and a comparison value from the alternative option or the context
// (equal odds); a comparison favors the target option when the target value
// exceeds the comparison value by more than the matching threshold, and the
// first option whose tally leads by choice_threshold is chosen. Deterministic
// given the seed.
double dbs_predict(const ChoiceProblem& p, const DbsParams& params, std::uint64_t seed,
                   int n_sim, AmbiguityPolicy policy = AmbiguityPolicy::kStrict);

}  // namespace cpc18::models
