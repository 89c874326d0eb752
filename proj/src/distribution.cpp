#include "cpc18/distribution.hpp"

#include <algorithm>
#include <cmath>

#include "cpc18/errors.hpp"

namespace cpc18 {

OutcomeDistribution OutcomeDistribution::point_mass(double payoff) {
  OutcomeDistribution d;
  d.support_.push_back({payoff, 1.0});
  return d;
}

OutcomeDistribution OutcomeDistribution::from_outcomes(std::vector<Outcome> raw) {
  for (const Outcome& o : raw) {
    if (o.prob < 0.0 || !std::isfinite(o.prob) || !std::isfinite(o.payoff))
      throw ValidationError("distribution entries must be finite with prob >= 0");
  }
  std::sort(raw.begin(), raw.end(), [](const Outcome& x, const Outcome& y) {
    return x.payoff < y.payoff;
  });
  OutcomeDistribution d;
  for (const Outcome& o : raw) {
    if (o.prob == 0.0) continue;
    if (!d.support_.empty() && d.support_.back().payoff == o.payoff) {
      d.support_.back().prob += o.prob;
    } else {
      d.support_.push_back(o);
    }
  }
  if (d.support_.empty()) throw ValidationError("distribution has no positive-probability outcome");
  return d;
}

double OutcomeDistribution::mean() const {
  double m = 0.0;
  for (const Outcome& o : support_) m += o.payoff * o.prob;
  return m;
}

double OutcomeDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (const Outcome& o : support_) v += (o.payoff - m) * (o.payoff - m) * o.prob;
  return v;
}

double OutcomeDistribution::total_prob() const {
  double t = 0.0;
  for (const Outcome& o : support_) t += o.prob;
  return t;
}

double OutcomeDistribution::cdf(double x) const {
  double c = 0.0;
  for (const Outcome& o : support_) {
    if (o.payoff > x) break;
    c += o.prob;
  }
  return c;
}

double OutcomeDistribution::prob_below(double x) const {
  double c = 0.0;
  for (const Outcome& o : support_) {
    if (o.payoff >= x) break;
    c += o.prob;
  }
  return c;
}

double OutcomeDistribution::prob_above(double x) const {
  double c = 0.0;
  for (auto it = support_.rbegin(); it != support_.rend(); ++it) {
    if (it->payoff <= x) break;
    c += it->prob;
  }
  return c;
}

double OutcomeDistribution::mass_at(double x) const {
  for (const Outcome& o : support_) {
    if (o.payoff == x) return o.prob;
    if (o.payoff > x) break;
  }
  return 0.0;
}

double OutcomeDistribution::quantile(double u) const {
  double c = 0.0;
  for (const Outcome& o : support_) {
    c += o.prob;
    if (c >= u) return o.payoff;
  }
  return support_.back().payoff;  // u above total mass (rounding slack)
}

bool OutcomeDistribution::operator==(const OutcomeDistribution& other) const {
  if (support_.size() != other.support_.size()) return false;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].payoff != other.support_[i].payoff) return false;
    if (std::abs(support_[i].prob - other.support_[i].prob) > 1e-12) return false;
  }
  return true;
}

DistStats dist_stats(const OutcomeDistribution& d) {
  DistStats s;
  s.mean = d.mean();
  s.sd = std::sqrt(d.variance());
  s.min = d.min();
  s.max = d.max();
  return s;
}

OutcomeDistribution expand_lottery(double ev, int lot_num, LotShape shape) {
  if (lot_num < 1) throw ValidationError("expand_lottery: lot_num must be >= 1");
  if ((shape == LotShape::kNone) != (lot_num == 1))
    throw ValidationError("expand_lottery: lot_shape is '-' iff lot_num == 1");

  std::vector<Outcome> out;
  switch (shape) {
    case LotShape::kNone:
      out.push_back({ev, 1.0});
      break;
    case LotShape::kSymm: {
      const int k = lot_num - 1;
      // Binomial(k, 1/2) masses; exact dyadics so the mean is exactly ev.
      double coeff = 1.0;
      const double scale = std::ldexp(1.0, -k);
      for (int i = 0; i <= k; ++i) {
        out.push_back({ev - k / 2.0 + i, coeff * scale});
        coeff = coeff * (k - i) / (i + 1);
      }
      break;
    }
    case LotShape::kRSkew:
    case LotShape::kLSkew: {
      const int n = lot_num;
      const double sign = shape == LotShape::kRSkew ? 1.0 : -1.0;
      const double c = sign * -(n + 1);
      for (int i = 1; i <= n; ++i) {
        const double mass = i < n ? std::ldexp(1.0, -i) : std::ldexp(1.0, -(n - 1));
        out.push_back({ev + c + sign * std::ldexp(1.0, i), mass});
      }
      break;
    }
  }
  return OutcomeDistribution::from_outcomes(std::move(out));
}

OutcomeDistribution option_distribution(const OptionSpec& opt) {
  if (opt.p_high <= 0.0 || opt.p_high > 1.0)
    throw ValidationError("option_distribution: p_high must be in (0, 1]");
  const OutcomeDistribution lottery = expand_lottery(opt.high, opt.lot_num, opt.lot_shape);
  std::vector<Outcome> out;
  out.reserve(lottery.size() + 1);
  for (const Outcome& o : lottery.support()) out.push_back({o.payoff, o.prob * opt.p_high});
  if (opt.p_high < 1.0) out.push_back({static_cast<double>(opt.low), 1.0 - opt.p_high});
  return OutcomeDistribution::from_outcomes(std::move(out));
}

std::vector<JointOutcome> joint_support(const OutcomeDistribution& a,
                                        const OutcomeDistribution& b, int corr) {
  std::vector<JointOutcome> joint;
  if (corr == 0) {
    joint.reserve(a.size() * b.size());
    for (const Outcome& oa : a.support())
      for (const Outcome& ob : b.support())
        joint.push_back({oa.payoff, ob.payoff, oa.prob * ob.prob});
    return joint;
  }
  // Rank coupling: partition [0,1] at both options' CDF levels and map each
  // cell through the quantile functions (B through 1-u when corr = -1).
  std::vector<double> cuts{0.0, 1.0};
  double c = 0.0;
  for (const Outcome& o : a.support()) {
    c += o.prob;
    cuts.push_back(std::min(c, 1.0));
  }
  c = 0.0;
  for (const Outcome& o : b.support()) {
    c += o.prob;
    cuts.push_back(corr > 0 ? std::min(c, 1.0) : std::max(1.0 - c, 0.0));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (hi - lo <= 0.0) continue;
    const double mid = 0.5 * (lo + hi);
    joint.push_back({a.quantile(mid), b.quantile(corr > 0 ? mid : 1.0 - mid), hi - lo});
  }
  return joint;
}

JointSample sample_joint(const ChoiceProblem& p, double u) {
  if (p.corr == 0)
    throw ValidationError("sample_joint: corr = 0 problems need two independent draws");
  const OutcomeDistribution a = option_distribution(p.a);
  const OutcomeDistribution b = option_distribution(p.b);
  if (a.degenerate() || b.degenerate())
    throw ValidationError("sample_joint: correlated coupling needs variance in both options");
  return {a.quantile(u), b.quantile(p.corr > 0 ? u : 1.0 - u)};
}

JointSample sample_joint(const ChoiceProblem& p, double u_a, double u_b) {
  if (p.corr != 0)
    throw ValidationError("sample_joint: correlated problems use a single shared draw");
  const OutcomeDistribution a = option_distribution(p.a);
  const OutcomeDistribution b = option_distribution(p.b);
  return {a.quantile(u_a), b.quantile(u_b)};
}

JointSample sample_joint(const OutcomeDistribution& a, const OutcomeDistribution& b,
                         int corr, Rng& rng) {
  if (corr == 0) {
    const double ua = rng.uniform();
    const double ub = rng.uniform();
    return {a.quantile(ua), b.quantile(ub)};
  }
  const double u = rng.uniform();
  return {a.quantile(u), b.quantile(corr > 0 ? u : 1.0 - u)};
}

}  // namespace cpc18
