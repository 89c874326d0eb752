#include "cpc18/grid_fit.hpp"

#include <cmath>

#include "cpc18/errors.hpp"
#include "cpc18/parallel.hpp"

namespace cpc18::models {

std::size_t FitGrid::size() const {
  std::size_t n = 1;
  for (const auto& [name, values] : axes) n *= values.size();
  return n;
}

ParamMap FitGrid::at(std::size_t index) const {
  ParamMap params;
  for (std::size_t a = axes.size(); a-- > 0;) {
    const auto& [name, values] = axes[a];
    params[name] = values[index % values.size()];
    index /= values.size();
  }
  return params;
}

void FitGrid::validate() const {
  if (axes.empty()) throw ValidationError("fit grid has no axes");
  for (const auto& [name, values] : axes) {
    if (values.empty()) throw ValidationError("fit grid axis '" + name + "' is empty");
    for (double v : values)
      if (!std::isfinite(v))
        throw ValidationError("fit grid axis '" + name + "' has a non-finite value");
  }
}

GridFitResult fit_grid(const PredictorFactory& factory, const FitGrid& grid,
                       const Dataset& train) {
  grid.validate();
  if (train.size() == 0 || train.rates.size() != train.problems.size())
    throw ValidationError("fit_grid: training set needs aligned problems and rates");

  const std::size_t n_points = grid.size();
  std::vector<double> mse(n_points, 0.0);
  parallel_for(n_points, [&](std::size_t g) {
    const BlockPredictor predict = factory(grid.at(g));
    double sum = 0.0;
    for (std::size_t i = 0; i < train.size(); ++i) {
      BlockRates pred;
      try {
        pred = predict(train.problems[i]);
      } catch (const std::exception& e) {
        throw ValidationError("fit_grid: prediction failed on problem " +
                              train.problems[i].id + ": " + e.what());
      }
      for (int b = 0; b < 5; ++b) {
        const double err = pred[b] - train.rates[i][b];
        sum += err * err;
      }
    }
    mse[g] = sum / (5.0 * train.size());
  });

  GridFitResult best{grid.at(0), mse[0], 0};
  for (std::size_t g = 1; g < n_points; ++g) {
    if (mse[g] < best.mse) best = {grid.at(g), mse[g], g};
  }
  return best;
}

PredictorFactory cpt_factory(CptMode mode, AmbiguityPolicy policy) {
  return [mode, policy](const ParamMap& params) -> BlockPredictor {
    CptParams cpt = mode == CptMode::kStochastic ? default_stochastic_cpt()
                                                 : default_deterministic_cpt();
    if (auto it = params.find("alpha"); it != params.end()) cpt.alpha = it->second;
    if (auto it = params.find("gamma"); it != params.end()) cpt.gamma = it->second;
    if (auto it = params.find("delta"); it != params.end()) cpt.delta = it->second;
    if (auto it = params.find("lambda"); it != params.end()) cpt.lambda = it->second;
    if (auto it = params.find("mu"); it != params.end()) cpt.mu = it->second;
    return [cpt, mode, policy](const ChoiceProblem& p) {
      const double rate = cpt_predict(p, cpt, mode, policy);
      return BlockRates{rate, rate, rate, rate, rate};
    };
  };
}

PredictorFactory dbs_factory(DbsContext context, std::uint64_t seed, int n_sim,
                             AmbiguityPolicy policy) {
  return [context = std::move(context), seed, n_sim, policy](const ParamMap& params) -> BlockPredictor {
    DbsParams dbs;
    dbs.context = context;
    if (auto it = params.find("outcome_threshold"); it != params.end())
      dbs.outcome_threshold = it->second;
    if (auto it = params.find("prob_threshold"); it != params.end())
      dbs.prob_threshold = it->second;
    if (auto it = params.find("choice_threshold"); it != params.end())
      dbs.choice_threshold = static_cast<int>(it->second);
    return [dbs, seed, n_sim, policy](const ChoiceProblem& p) {
      const double rate = dbs_predict(p, dbs, seed, n_sim, policy);
      return BlockRates{rate, rate, rate, rate, rate};
    };
  };
}

FitGrid default_cpt_grid(CptMode mode) {
  FitGrid grid;
  grid.axes = {
      {"alpha", {0.7, 0.8, 0.9, 1.0}},
      {"gamma", {0.7, 0.85, 1.0}},
      {"delta", {0.7, 0.85, 1.0}},
      {"lambda", {1.0, 1.2, 1.5}},
  };
  if (mode == CptMode::kStochastic) grid.axes.push_back({"mu", {0.1, 0.25, 0.5}});
  return grid;
}

FitGrid default_dbs_grid() {
  FitGrid grid;
  grid.axes = {
      {"outcome_threshold", {0.5, 1.0, 2.0}},
      {"prob_threshold", {0.05, 0.1, 0.2}},
      {"choice_threshold", {1.0, 2.0, 3.0}},
  };
  return grid;
}

}  // namespace cpc18::models
