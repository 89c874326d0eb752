#include "cpc18/dataset.hpp"

#include "cpc18/errors.hpp"

namespace cpc18 {

Dataset filter_risk(const Dataset& data) {
  Dataset out;
  for (std::size_t i = 0; i < data.size(); ++i) {
    if (data.problems[i].amb) continue;
    out.problems.push_back(data.problems[i]);
    if (i < data.rates.size()) out.rates.push_back(data.rates[i]);
  }
  return out;
}

Dataset slice(const Dataset& data, std::size_t begin, std::size_t end) {
  if (begin > end || end > data.size())
    throw ValidationError("slice: range out of bounds");
  Dataset out;
  out.problems.assign(data.problems.begin() + begin, data.problems.begin() + end);
  if (data.rates.size() == data.problems.size())
    out.rates.assign(data.rates.begin() + begin, data.rates.begin() + end);
  return out;
}

}  // namespace cpc18
