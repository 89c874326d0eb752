#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cpc18/dataset.hpp"
#include "cpc18/dbs.hpp"

namespace cpc18::models {

using ParamMap = std::map<std::string, double>;
using BlockPredictor = std::function<BlockRates(const ChoiceProblem&)>;
using PredictorFactory = std::function<BlockPredictor(const ParamMap&)>;

// Per-parameter candidate lists; the Cartesian product is evaluated in
// declared-axis order with the first axis varying slowest.
struct FitGrid {
  std::vector<std::pair<std::string, std::vector<double>>> axes;

  std::size_t size() const;
  ParamMap at(std::size_t index) const;
  void validate() const;
};

struct GridFitResult {
  ParamMap params;
  double mse = 0.0;
  std::size_t index = 0;
};

// Exhaustive scan: argmin of training MSE over the grid. Ties keep the
// earliest grid point. Prediction failures propagate with the problem id.
GridFitResult fit_grid(const PredictorFactory& factory, const FitGrid& grid,
                       const Dataset& train);

// Factories over the toolkit's models. Unlisted parameters keep defaults.
PredictorFactory cpt_factory(CptMode mode, AmbiguityPolicy policy);
PredictorFactory dbs_factory(DbsContext context, std::uint64_t seed, int n_sim,
                             AmbiguityPolicy policy);

// Default grids around the shipped parameter sets.
FitGrid default_cpt_grid(CptMode mode);
FitGrid default_dbs_grid();

}  // namespace cpc18::models
