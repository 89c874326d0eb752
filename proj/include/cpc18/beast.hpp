#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "cpc18/dataset.hpp"
#include "cpc18/distribution.hpp"
#include "cpc18/grid_fit.hpp"
#include "cpc18/option.hpp"
#include "cpc18/rng.hpp"

namespace cpc18::beast {

struct BeastParams {
  double sigma = 2.0;  // EV-estimation noise scale (money units)
  int kappa = 5;       // mental-sample size per trial
  // Sampling-tool weights: unbiased, uniform, sign, pessimism.
  std::array<double, 4> tool_probs{0.4, 0.2, 0.2, 0.2};
  double w_amb = 0.3;     // pessimism weight in the ambiguous-EV prior
  int t_learn = 15;       // feedback-learning horizon (trials)
  int t_learn_amb = 8;    // faster horizon for ambiguous problems
  double psi_trivial = 0.25;  // noise multiplier on subjectively dominant problems
  double psi_complex = 1.5;   // noise multiplier on complex problems
  int n_agents = 4000;

  void validate() const;
};

enum class Verdict { kA, kB, kNone };

enum class Tool { kUnbiased, kUniform, kSign, kPessimism };

// Prior over an ambiguous option's outcomes: weight w_amb on the worst
// outcome, the rest spread uniformly over the listed outcomes.
OutcomeDistribution ambiguous_prior(const OutcomeDistribution& d, double w_amb);

// The option favored by both the EV rule and the equal-weighting rule, when
// choosing it can never produce immediate regret under the problem's
// coupling. Ambiguous Option B is evaluated under the w_amb prior.
Verdict subjective_dominance(const ChoiceProblem& p, double w_amb = 0.3);

// One option has >= 2 possible outcomes and the other >= 3.
bool is_complex(const ChoiceProblem& p);

// Observed (payoff_a, payoff_b) pairs from completed feedback trials.
struct ExperienceBuffer {
  std::vector<JointSample> trials;

  bool empty() const { return trials.empty(); }
  double mean_b() const;
};

// Per-problem precomputation shared by every agent.
struct ProblemView {
  ChoiceProblem problem;
  OutcomeDistribution dist_a;
  OutcomeDistribution dist_b;
  OutcomeDistribution prior_b;  // equals dist_b when amb = 0
  double bev_a = 0.0;
  double prior_mean_b = 0.0;
  double sign_magnitude = 0.0;  // max |payoff| across both options
  double min_a = 0.0;
  double min_b = 0.0;
  double psi = 1.0;  // noise multiplier from dominance/complexity
  int horizon = 1;

  ProblemView(const ChoiceProblem& p, const BeastParams& params);
};

// One mental draw for both options under shared randomness. `from_experience`
// replays a uniformly drawn buffer pair for the unbiased/sign tools;
// `pre_feedback` switches ambiguous Option B to its prior distribution.
JointSample mental_draw(const ProblemView& view, Tool tool, const ExperienceBuffer& buffer,
                        bool from_experience, bool pre_feedback, Rng& rng);

// 25 choices (1 = Option B) of one simulated agent.
std::array<std::uint8_t, 25> simulate_agent(const ProblemView& view,
                                            const BeastParams& params, Rng& rng);

// Mean B-choice rate per 5-trial block over params.n_agents independent
// agents; bit-reproducible for a given seed at any thread count.
BlockRates predict(const ChoiceProblem& p, const BeastParams& params, std::uint64_t seed);

// Grid-fit adapter; axis names: sigma, kappa, w_amb, t_learn, t_learn_amb,
// psi_trivial, psi_complex, p_unbiased, p_uniform, p_sign, p_pessimism
// (tool weights renormalized).
models::PredictorFactory beast_factory(BeastParams base, std::uint64_t seed, int n_agents);

models::FitGrid default_beast_grid();

}  // namespace cpc18::beast
