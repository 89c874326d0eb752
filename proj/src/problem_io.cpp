#include "cpc18/problem_io.hpp"

#include <fstream>

#include "cpc18/csv.hpp"
#include "cpc18/errors.hpp"

namespace cpc18 {

namespace {

void check_header(const std::vector<std::string>& got,
                  const std::vector<std::string>& expected, std::size_t line) {
  if (got != expected) {
    std::string msg = "unexpected header; expected:";
    for (const auto& h : expected) msg += " " + h;
    throw ParseError(msg, line);
  }
}

OptionSpec parse_option(const std::vector<std::string>& f, std::size_t base,
                        std::size_t line) {
  OptionSpec o;
  o.low = static_cast<int>(parse_long(f[base], line, "L"));
  o.high = static_cast<int>(parse_long(f[base + 1], line, "H"));
  o.p_high = parse_double(f[base + 2], line, "pH");
  if (o.p_high <= 0.0 || o.p_high > 1.0)
    throw ParseError("field pH: value " + f[base + 2] + " outside (0, 1]", line);
  o.lot_num = static_cast<int>(parse_long(f[base + 3], line, "LotNum"));
  o.lot_shape = lot_shape_from_string(f[base + 4], line);
  return o;
}

}  // namespace

std::vector<std::string> problem_csv_header() {
  return {"id", "LA", "HA", "pHA", "LotNumA", "LotShapeA",
          "LB", "HB", "pHB", "LotNumB", "LotShapeB", "Amb", "Corr"};
}

std::vector<std::string> problem_csv_fields(const ChoiceProblem& p) {
  return {p.id,
          std::to_string(p.a.low),
          std::to_string(p.a.high),
          format_double(p.a.p_high),
          std::to_string(p.a.lot_num),
          to_string(p.a.lot_shape),
          std::to_string(p.b.low),
          std::to_string(p.b.high),
          format_double(p.b.p_high),
          std::to_string(p.b.lot_num),
          to_string(p.b.lot_shape),
          p.amb ? "1" : "0",
          std::to_string(p.corr)};
}

void write_problems_csv(const std::string& path, const std::vector<ChoiceProblem>& problems) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write file: " + path);
  write_csv_row(out, problem_csv_header());
  for (const ChoiceProblem& p : problems) write_csv_row(out, problem_csv_fields(p));
}

std::vector<ChoiceProblem> read_problems_csv(const std::string& path) {
  CsvReader reader(path);
  std::vector<std::string> f;
  if (!reader.next_row(f)) throw ParseError("empty problem file", 1);
  check_header(f, problem_csv_header(), reader.line());

  std::vector<ChoiceProblem> problems;
  while (reader.next_row(f)) {
    if (f.size() != 13)
      throw ParseError("expected 13 fields, got " + std::to_string(f.size()), reader.line());
    ChoiceProblem p;
    p.id = f[0];
    p.a = parse_option(f, 1, reader.line());
    p.b = parse_option(f, 6, reader.line());
    const long amb = parse_long(f[11], reader.line(), "Amb");
    if (amb != 0 && amb != 1) throw ParseError("field Amb: must be 0 or 1", reader.line());
    p.amb = amb == 1;
    const long corr = parse_long(f[12], reader.line(), "Corr");
    if (corr < -1 || corr > 1) throw ParseError("field Corr: must be -1, 0 or 1", reader.line());
    p.corr = static_cast<int>(corr);
    problems.push_back(std::move(p));
  }
  return problems;
}

}  // namespace cpc18
