#pragma once

#include <string>
#include <vector>

#include "cpc18/distribution.hpp"
#include "cpc18/option.hpp"
#include "cpc18/rng.hpp"

namespace cpc18 {

// Reasons a candidate problem is rejected. kPayoffRange..kCorrelatedNoVariance
// are the generator's technical rejection rules; kBadSpec covers violated
// type invariants on ingested data.
enum class RejectionRule {
  kPayoffRange,          // (a) some outcome outside [-50, 256]
  kIndistinguishable,    // (b) identical distributions with amb = 0
  kAmbiguousDegenerate,  // (c) amb = 1 but Option B has one possible outcome
  kCorrelatedNoVariance, // (d) corr != 0 with a zero-variance option
  kBadSpec,              // violated OptionSpec/ChoiceProblem invariants
};

std::string to_string(RejectionRule rule);

struct Validity {
  bool ok = true;
  std::vector<RejectionRule> violations;
};

// Pure check of the rejection rules and type invariants; violations are data.
Validity validate_problem(const ChoiceProblem& p);

// The 14 admissible p_high values for generated problems.
const std::vector<double>& admissible_p_high();

// Payoff bounds enforced by rejection rule (a).
inline constexpr double kMinPayoff = -50.0;
inline constexpr double kMaxPayoff = 256.0;

// Draws one problem by the selection algorithm (restart on any rejection).
// Throws after max_restarts failed attempts.
ChoiceProblem generate_problem(Rng& rng, int max_restarts = 10000);

// Batch helper: problem i is drawn from substream (seed, i), so generation
// parallelizes and is reproducible at any thread count. Ids are "p0001"...
std::vector<ChoiceProblem> generate_problems(std::size_t n, std::uint64_t seed,
                                             int max_restarts = 10000);

}  // namespace cpc18
