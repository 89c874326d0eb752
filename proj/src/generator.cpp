#include "cpc18/generator.hpp"

#include <cmath>
#include <cstdio>

#include "cpc18/errors.hpp"
#include "cpc18/parallel.hpp"

namespace cpc18 {

namespace {

// Triangular(min, mode, max) by inverse CDF.
double triangular(Rng& rng, double lo, double mode, double hi) {
  const double u = rng.uniform();
  const double cut = (mode - lo) / (hi - lo);
  if (u < cut) return lo + std::sqrt(u * (hi - lo) * (mode - lo));
  return hi - std::sqrt((1.0 - u) * (hi - lo) * (hi - mode));
}

long round_half_away(double x) { return std::llround(x); }

// Shared lottery-payoff construction for steps 2.2.2 and 5.2: split the
// target expected value into (low, high) around the rounded triangular draw.
void split_payoffs(Rng& rng, double target_ev, double p_high, int& low, int& high) {
  const double temp = triangular(rng, kMinPayoff, target_ev, 120.0);
  const long rounded = round_half_away(temp);
  if (static_cast<double>(rounded) > target_ev) {
    high = static_cast<int>(rounded);
    low = static_cast<int>(round_half_away((target_ev - high * p_high) / (1.0 - p_high)));
  } else if (static_cast<double>(rounded) < target_ev) {
    low = static_cast<int>(rounded);
    high = static_cast<int>(round_half_away((target_ev - low * (1.0 - p_high)) / p_high));
  } else {
    low = high = static_cast<int>(rounded);
  }
}

// Lottery-shape draw shared by both options; p_degenerate differs (A: .6, B: .5).
void draw_lottery(Rng& rng, double p_degenerate, int& lot_num, LotShape& shape) {
  const double u = rng.uniform();
  if (u < p_degenerate) {
    lot_num = 1;
    shape = LotShape::kNone;
    return;
  }
  const double p_skew = (1.0 - p_degenerate) / 2.0;
  if (u < p_degenerate + p_skew) {
    // temp uniform on {-7..-2, 2..8}: positive -> R-skew, negative -> L-skew.
    static const int kSkewSet[] = {-7, -6, -5, -4, -3, -2, 2, 3, 4, 5, 6, 7, 8};
    const int temp = kSkewSet[rng.index(13)];
    lot_num = std::abs(temp);
    shape = temp > 0 ? LotShape::kRSkew : LotShape::kLSkew;
    return;
  }
  static const int kSymmSet[] = {3, 5, 7, 9};
  lot_num = kSymmSet[rng.index(4)];
  shape = LotShape::kSymm;
}

// One pass of selection steps 1-6; returns false when step 4.1 restarts.
bool draw_options(Rng& rng, ChoiceProblem& p) {
  const auto& p_high_set = admissible_p_high();

  // Step 1: EV'_A ~ discrete Uni(-10, 30).
  const int ev_a_target = static_cast<int>(rng.uniform_int(-10, 30));

  // Step 2: Option A.
  OptionSpec a;
  if (rng.uniform() < 0.4) {
    a = {ev_a_target, ev_a_target, 1.0, 1, LotShape::kNone};
  } else {
    a.p_high = p_high_set[rng.index(p_high_set.size())];
    if (a.p_high == 1.0) {
      a.low = a.high = ev_a_target;
    } else {
      split_payoffs(rng, ev_a_target, a.p_high, a.low, a.high);
    }
    draw_lottery(rng, 0.6, a.lot_num, a.lot_shape);
  }

  // Step 3: DEV = mean of five Uni[-20, 20] draws.
  double dev = 0.0;
  for (int i = 0; i < 5; ++i) dev += rng.uniform(-20.0, 20.0);
  dev /= 5.0;

  // Step 4: target EV for B uses Option A's realized expected value.
  const double ev_a = a.p_high * a.high + (1.0 - a.p_high) * a.low;
  const double ev_b_target = ev_a + dev;
  if (ev_b_target < kMinPayoff) return false;  // 4.1: start over

  // Steps 5-6: Option B.
  OptionSpec b;
  b.p_high = p_high_set[rng.index(p_high_set.size())];
  if (b.p_high == 1.0) {
    b.low = b.high = static_cast<int>(round_half_away(ev_b_target));
  } else {
    split_payoffs(rng, ev_b_target, b.p_high, b.low, b.high);
  }
  draw_lottery(rng, 0.5, b.lot_num, b.lot_shape);

  p.a = a;
  p.b = b;
  return true;
}

Validity check_option(const OptionSpec& o) {
  Validity v;
  auto bad = [&] {
    v.ok = false;
    if (v.violations.empty()) v.violations.push_back(RejectionRule::kBadSpec);
  };
  if (o.lot_num < 1) bad();
  if ((o.lot_shape == LotShape::kNone) != (o.lot_num == 1)) bad();
  if (!(o.p_high > 0.0 && o.p_high <= 1.0)) bad();
  return v;
}

}  // namespace

std::string to_string(RejectionRule rule) {
  switch (rule) {
    case RejectionRule::kPayoffRange:
      return "payoff_range";
    case RejectionRule::kIndistinguishable:
      return "indistinguishable_options";
    case RejectionRule::kAmbiguousDegenerate:
      return "ambiguous_degenerate";
    case RejectionRule::kCorrelatedNoVariance:
      return "correlated_no_variance";
    case RejectionRule::kBadSpec:
      return "bad_spec";
  }
  return "unknown";
}

const std::vector<double>& admissible_p_high() {
  static const std::vector<double> kSet = {.01, .05, .1, .2, .25, .4, .5,
                                           .6,  .75, .8, .9, .95, .99, 1.0};
  return kSet;
}

Validity validate_problem(const ChoiceProblem& p) {
  Validity v;
  const Validity va = check_option(p.a);
  const Validity vb = check_option(p.b);
  if (!va.ok || !vb.ok) {
    v.ok = false;
    v.violations.push_back(RejectionRule::kBadSpec);
    return v;  // distributions may be unbuildable past this point
  }
  const OutcomeDistribution da = option_distribution(p.a);
  const OutcomeDistribution db = option_distribution(p.b);

  auto in_range = [](const OutcomeDistribution& d) {
    return d.min() >= kMinPayoff && d.max() <= kMaxPayoff;
  };
  if (!in_range(da) || !in_range(db)) {
    v.ok = false;
    v.violations.push_back(RejectionRule::kPayoffRange);
  }
  if (!p.amb && da == db) {
    v.ok = false;
    v.violations.push_back(RejectionRule::kIndistinguishable);
  }
  if (p.amb && db.degenerate()) {
    v.ok = false;
    v.violations.push_back(RejectionRule::kAmbiguousDegenerate);
  }
  if (p.corr != 0 && (da.degenerate() || db.degenerate())) {
    v.ok = false;
    v.violations.push_back(RejectionRule::kCorrelatedNoVariance);
  }
  if (p.corr < -1 || p.corr > 1) {
    v.ok = false;
    v.violations.push_back(RejectionRule::kBadSpec);
  }
  return v;
}

ChoiceProblem generate_problem(Rng& rng, int max_restarts) {
  ChoiceProblem p;
  bool dims_drawn = false;
  for (int attempt = 0; attempt < max_restarts; ++attempt) {
    if (!draw_options(rng, p)) continue;
    if (!dims_drawn) {
      // Step 7: Corr in {0: .8, +1: .1, -1: .1}.
      const double uc = rng.uniform();
      p.corr = uc < 0.8 ? 0 : (uc < 0.9 ? 1 : -1);
      // Step 8: Amb in {0: .8, 1: .2}.
      p.amb = rng.uniform() >= 0.8;
      // Rules (a)-(d) depend on the options, so rejections resample only
      // steps 1-6; Corr and Amb keep their drawn values and so their
      // marginal frequencies.
      dims_drawn = true;
    }
    if (validate_problem(p).ok) return p;
  }
  throw ValidationError("generate_problem: no valid problem after " +
                        std::to_string(max_restarts) + " restarts");
}

std::vector<ChoiceProblem> generate_problems(std::size_t n, std::uint64_t seed,
                                             int max_restarts) {
  std::vector<ChoiceProblem> out(n);
  parallel_for(n, [&](std::size_t i) {
    Rng rng = Rng::substream(seed, {Rng::key("problem"), i});
    out[i] = generate_problem(rng, max_restarts);
    char buf[16];
    std::snprintf(buf, sizeof(buf), "p%04zu", i + 1);
    out[i].id = buf;
  });
  return out;
}

}  // namespace cpc18
