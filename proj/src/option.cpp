#include "cpc18/option.hpp"

#include "cpc18/errors.hpp"

namespace cpc18 {

std::string to_string(LotShape shape) {
  switch (shape) {
    case LotShape::kNone:
      return "-";
    case LotShape::kSymm:
      return "Symm";
    case LotShape::kRSkew:
      return "R-skew";
    case LotShape::kLSkew:
      return "L-skew";
  }
  return "-";
}

LotShape lot_shape_from_string(std::string_view text, std::size_t line) {
  if (text == "-" || text.empty()) return LotShape::kNone;
  if (text == "Symm") return LotShape::kSymm;
  if (text == "R-skew") return LotShape::kRSkew;
  if (text == "L-skew") return LotShape::kLSkew;
  throw ParseError("unknown LotShape literal \"" + std::string(text) + "\"", line);
}

bool operator==(const OptionSpec& a, const OptionSpec& b) {
  return a.low == b.low && a.high == b.high && a.p_high == b.p_high &&
         a.lot_num == b.lot_num && a.lot_shape == b.lot_shape;
}

ChoiceProblem swap_options(const ChoiceProblem& p) {
  ChoiceProblem out = p;
  out.a = p.b;
  out.b = p.a;
  return out;
}

}  // namespace cpc18
