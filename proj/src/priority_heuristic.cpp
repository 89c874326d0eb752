#include "cpc18/priority_heuristic.hpp"

#include <cmath>

#include "cpc18/distribution.hpp"

namespace cpc18::models {

namespace {
// "Exceeds 0.1" on probabilities, robust to representation noise so that
// differences that are exactly 0.1 in decimal never fire.
constexpr double kProbStep = 0.1 + 1e-9;
}  // namespace

double prominent_round(double x) {
  if (x <= 0.0) return 0.0;
  double best = 1.0;
  double best_dist = std::abs(x - 1.0);
  double base = 1.0;
  while (base <= x * 10.0) {
    for (double m : {1.0, 2.0, 5.0}) {
      const double candidate = m * base;
      const double dist = std::abs(x - candidate);
      if (dist < best_dist || (dist == best_dist && candidate > best)) {
        best = candidate;
        best_dist = dist;
      }
    }
    base *= 10.0;
  }
  return best;
}

double priority_heuristic_predict(const ChoiceProblem& p, AmbiguityPolicy policy) {
  const OutcomeDistribution da = option_distribution(p.a);
  const OutcomeDistribution db = effective_b(p, policy);

  // EV-ratio screen: only defined when both EVs are nonzero with equal sign.
  const double ev_a = da.mean();
  const double ev_b = db.mean();
  if (ev_a != 0.0 && ev_b != 0.0 && (ev_a > 0) == (ev_b > 0)) {
    const double hi = std::max(std::abs(ev_a), std::abs(ev_b));
    const double lo = std::min(std::abs(ev_a), std::abs(ev_b));
    if (hi / lo > 2.0) return ev_b > ev_a ? 1.0 : 0.0;
  }

  const double max_abs = std::max({std::abs(da.min()), std::abs(da.max()),
                                   std::abs(db.min()), std::abs(db.max())});
  const double aspiration = prominent_round(max_abs / 10.0);

  // 1. Minimum outcomes.
  if (std::abs(db.min() - da.min()) > aspiration) return db.min() > da.min() ? 1.0 : 0.0;
  // 2. Probabilities of the minimum outcomes (lower is better).
  const double p_min_a = da.mass_at(da.min());
  const double p_min_b = db.mass_at(db.min());
  if (std::abs(p_min_b - p_min_a) > kProbStep) return p_min_b < p_min_a ? 1.0 : 0.0;
  // 3. Maximum outcomes.
  if (std::abs(db.max() - da.max()) > aspiration) return db.max() > da.max() ? 1.0 : 0.0;
  // 4. Probabilities of the maximum outcomes (higher is better).
  const double p_max_a = da.mass_at(da.max());
  const double p_max_b = db.mass_at(db.max());
  if (std::abs(p_max_b - p_max_a) > kProbStep) return p_max_b > p_max_a ? 1.0 : 0.0;
  return 0.5;
}

}  // namespace cpc18::models
