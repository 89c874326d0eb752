#include "cpc18/dbs.hpp"

#include <cmath>

#include "cpc18/distribution.hpp"
#include "cpc18/errors.hpp"
#include "cpc18/rng.hpp"

namespace cpc18::models {

namespace {

// Acklam's rational approximation of the inverse normal CDF (|error| ~ 1e-9).
double inverse_normal_cdf(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

struct AttributeList {
  std::vector<double> values;
};

// One option's attribute values as sampled by the model: each support entry
// contributes its payoff to the amount list and its probability to the
// probability list, all entries equally likely.
struct OptionAttributes {
  std::vector<double> amounts;
  std::vector<double> probs;

  explicit OptionAttributes(const OutcomeDistribution& d) {
    amounts.reserve(d.size());
    probs.reserve(d.size());
    for (const Outcome& o : d.support()) {
      amounts.push_back(o.payoff);
      probs.push_back(o.prob);
    }
  }
};

constexpr int kMaxComparisons = 10000;

}  // namespace

DbsContext DbsContext::synthetic_default() {
  DbsContext ctx;
  // Log-normal amount quantiles, median 20 shekels, sigma 1.
  const int n = 100;
  ctx.amounts.reserve(n);
  const double mu = std::log(20.0);
  for (int i = 0; i < n; ++i) {
    const double p = (i + 0.5) / n;
    ctx.amounts.push_back(std::exp(mu + inverse_normal_cdf(p)));
  }
  ctx.probabilities.reserve(99);
  for (int i = 1; i <= 99; ++i) ctx.probabilities.push_back(i / 100.0);
  return ctx;
}

std::vector<double> DbsContext::shekels_from_pounds(const std::vector<double>& pounds) {
  std::vector<double> out;
  out.reserve(pounds.size());
  for (double v : pounds) out.push_back(v * 4.5);
  return out;
}

void DbsContext::validate() const {
  if (amounts.empty() || probabilities.empty())
    throw ValidationError("DbS context lists must be non-empty");
}

void DbsParams::validate() const {
  if (outcome_threshold < 0 || prob_threshold < 0)
    throw ValidationError("DbS thresholds must be >= 0");
  if (choice_threshold < 1) throw ValidationError("DbS choice threshold must be >= 1");
  context.validate();
}

double dbs_predict(const ChoiceProblem& p, const DbsParams& params, std::uint64_t seed,
                   int n_sim, AmbiguityPolicy policy) {
  params.validate();
  if (n_sim < 1) throw ValidationError("dbs_predict: n_sim must be >= 1");

  const OptionAttributes attrs[2] = {OptionAttributes(option_distribution(p.a)),
                                     OptionAttributes(effective_b(p, policy))};
  Rng rng = Rng::substream(seed, {Rng::key("dbs"), fnv1a64(p.id)});

  int wins_b = 0;
  for (int sim = 0; sim < n_sim; ++sim) {
    int tally[2] = {0, 0};
    int chosen = -1;
    for (int step = 0; step < kMaxComparisons; ++step) {
      const std::size_t target = rng.index(2);
      const bool amount_attr = rng.index(2) == 0;
      const auto& target_list = amount_attr ? attrs[target].amounts : attrs[target].probs;
      const double target_value = target_list[rng.index(target_list.size())];

      double comparison_value;
      if (rng.index(2) == 0) {
        const auto& alt = amount_attr ? attrs[1 - target].amounts : attrs[1 - target].probs;
        comparison_value = alt[rng.index(alt.size())];
      } else {
        const auto& mem = amount_attr ? params.context.amounts : params.context.probabilities;
        comparison_value = mem[rng.index(mem.size())];
      }

      const double threshold = amount_attr ? params.outcome_threshold : params.prob_threshold;
      if (target_value - comparison_value > threshold) ++tally[target];
      if (tally[target] - tally[1 - target] >= params.choice_threshold) {
        chosen = static_cast<int>(target);
        break;
      }
    }
    if (chosen < 0) {  // no decision within the cap: current leader, coin on tie
      if (tally[0] != tally[1]) chosen = tally[1] > tally[0] ? 1 : 0;
      else chosen = static_cast<int>(rng.index(2));
    }
    wins_b += chosen;
  }
  return static_cast<double>(wins_b) / n_sim;
}

}  // namespace cpc18::models
