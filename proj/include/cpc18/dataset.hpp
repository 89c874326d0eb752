#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cpc18/option.hpp"

namespace cpc18 {

// Per-block B-choice rates, the prediction target (5 blocks of 5 trials).
using BlockRates = std::array<double, 5>;

inline double mean_rate(const BlockRates& r) {
  return (r[0] + r[1] + r[2] + r[3] + r[4]) / 5.0;
}

// Problems with aligned observed (or simulated) block rates.
struct Dataset {
  std::vector<ChoiceProblem> problems;
  std::vector<BlockRates> rates;

  std::size_t size() const { return problems.size(); }
};

// Decisions-under-risk subset: drops ambiguous problems.
Dataset filter_risk(const Dataset& data);

// Row subranges, for train/test splits.
Dataset slice(const Dataset& data, std::size_t begin, std::size_t end);

}  // namespace cpc18
