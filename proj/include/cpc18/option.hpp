#pragma once

#include <string>
#include <string_view>

namespace cpc18 {

// Shape of the lottery around its expected value. kNone means the lottery is
// a single outcome (lot_num == 1).
enum class LotShape { kNone, kSymm, kRSkew, kLSkew };

// CSV literals: "-", "Symm", "R-skew", "L-skew".
std::string to_string(LotShape shape);
LotShape lot_shape_from_string(std::string_view text, std::size_t line = 0);

// One monetary prospect: the lottery (expected value `high`, expanded by
// lot_num/lot_shape) with probability p_high, otherwise the sure amount `low`.
struct OptionSpec {
  int low = 0;
  int high = 0;
  double p_high = 1.0;
  int lot_num = 1;
  LotShape lot_shape = LotShape::kNone;
};

bool operator==(const OptionSpec& a, const OptionSpec& b);

// A binary choice problem: the 12 static dimensions plus an opaque id.
// corr couples the options' payoffs (-1, 0, +1); amb hides Option B's
// probabilities from the decision maker (not from this toolkit).
struct ChoiceProblem {
  std::string id;
  OptionSpec a;
  OptionSpec b;
  bool amb = false;
  int corr = 0;
};

// A <-> B mirror of the problem (corr sign is preserved: swapping the
// options leaves the coupling direction unchanged).
ChoiceProblem swap_options(const ChoiceProblem& p);

}  // namespace cpc18
