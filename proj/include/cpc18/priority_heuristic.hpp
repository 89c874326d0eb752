#pragma once

#include "cpc18/cpt.hpp"
#include "cpc18/option.hpp"

namespace cpc18::models {

// Nearest value in the prominent-number sequence {1, 2, 5} x 10^k; exact
// midpoints round up. Returns 0 for x = 0.
double prominent_round(double x);

// Lexicographic priority heuristic, preceded by an expected-value screen:
// when both EVs are nonzero with equal sign and max|EV|/min|EV| > 2, the
// higher-EV option is chosen outright. Otherwise compares minimum outcomes,
// their probabilities (0.1 step), maximum outcomes, then their probabilities;
// all four inconclusive -> 0.5. Output is in {0, 0.5, 1}, constant across
// blocks.
double priority_heuristic_predict(const ChoiceProblem& p,
                                  AmbiguityPolicy policy = AmbiguityPolicy::kStrict);

}  // namespace cpc18::models
