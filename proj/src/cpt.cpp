#include "cpc18/cpt.hpp"

#include <cmath>

#include "cpc18/errors.hpp"

namespace cpc18::models {

OutcomeDistribution ambiguous_uniform(const OptionSpec& opt) {
  const OutcomeDistribution d = option_distribution(opt);
  std::vector<Outcome> out;
  out.reserve(d.size());
  const double p = 1.0 / static_cast<double>(d.size());
  for (const Outcome& o : d.support()) out.push_back({o.payoff, p});
  return OutcomeDistribution::from_outcomes(std::move(out));
}

OutcomeDistribution effective_b(const ChoiceProblem& p, AmbiguityPolicy policy) {
  if (!p.amb) return option_distribution(p.b);
  if (policy == AmbiguityPolicy::kStrict)
    throw UnsupportedInput("problem " + p.id + " is ambiguous; model handles described risk only");
  return ambiguous_uniform(p.b);
}

void CptParams::validate() const {
  if (alpha <= 0 || gamma <= 0 || delta <= 0 || lambda <= 0)
    throw ValidationError("CPT parameters must be positive");
  if (mu && *mu < 0) throw ValidationError("CPT mu must be >= 0");
}

CptParams default_deterministic_cpt() { return {0.88, 0.89, 0.9, 1.2, std::nullopt}; }

CptParams default_stochastic_cpt() { return {0.91, 0.84, 0.83, 1.14, 0.25}; }

double cpt_utility(double x, double alpha, double lambda) {
  if (x >= 0.0) return std::pow(x, alpha);
  return -lambda * std::pow(-x, alpha);
}

double cpt_weight(double p, double gamma, double delta) {
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  const double num = delta * std::pow(p, gamma);
  return num / (num + std::pow(1.0 - p, gamma));
}

double cpt_weighted_value(const OutcomeDistribution& prospect, const CptParams& params) {
  params.validate();
  const auto& sup = prospect.support();
  const std::size_t n = sup.size();

  // Losses are x < 0; x = 0 may sit on either side since u(0) = 0.
  std::size_t k = 0;
  while (k < n && sup[k].payoff < 0.0) ++k;

  double wv = 0.0;
  // pi_i^- = w(p_1 + .. + p_i) - w(p_1 + .. + p_{i-1}), cumulative from worst.
  double cum = 0.0, w_prev = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    cum += sup[i].prob;
    const double w_cur = cpt_weight(cum, params.gamma, params.delta);
    wv += (w_cur - w_prev) * cpt_utility(sup[i].payoff, params.alpha, params.lambda);
    w_prev = w_cur;
  }
  // pi_j^+ = w(p_j + .. + p_n) - w(p_{j+1} + .. + p_n), decumulative from best.
  double decum = 0.0;
  w_prev = 0.0;
  for (std::size_t j = n; j-- > k;) {
    decum += sup[j].prob;
    const double w_cur = cpt_weight(decum, params.gamma, params.delta);
    wv += (w_cur - w_prev) * cpt_utility(sup[j].payoff, params.alpha, params.lambda);
    w_prev = w_cur;
  }
  return wv;
}

double cpt_predict(const ChoiceProblem& p, const CptParams& params, CptMode mode,
                   AmbiguityPolicy policy) {
  params.validate();
  const double wv_a = cpt_weighted_value(option_distribution(p.a), params);
  const double wv_b = cpt_weighted_value(effective_b(p, policy), params);
  if (mode == CptMode::kDeterministic) {
    if (wv_b > wv_a) return 1.0;
    if (wv_b < wv_a) return 0.0;
    return 0.5;
  }
  if (!params.mu) throw ValidationError("stochastic CPT requires mu");
  // 1 / (1 + e^{-mu (WV(B) - WV(A))}): the logit form without overflow.
  return 1.0 / (1.0 + std::exp(-*params.mu * (wv_b - wv_a)));
}

}  // namespace cpc18::models
