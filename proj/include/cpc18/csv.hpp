#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cpc18 {

// Canonical float formatting for every CSV artifact: shortest decimal that
// round-trips (std::to_chars). Integral values print without a fraction.
std::string format_double(double value);

double parse_double(std::string_view text, std::size_t line, const char* field);
long parse_long(std::string_view text, std::size_t line, const char* field);

// Minimal CSV: comma separated, optional double-quoted fields, \r\n tolerant.
// Lines starting with '#' are exposed via comment() before the next row.
class CsvReader {
 public:
  explicit CsvReader(const std::string& path);
  ~CsvReader();
  CsvReader(const CsvReader&) = delete;
  CsvReader& operator=(const CsvReader&) = delete;

  // Fills `fields` with the next data row; false at end of file.
  bool next_row(std::vector<std::string>& fields);
  // 1-based line number of the row last returned.
  std::size_t line() const { return line_; }
  // Comment lines ("# ...") seen since the previous data row, stripped of "#".
  const std::vector<std::string>& comments() const { return comments_; }

 private:
  std::ifstream* in_;
  std::size_t line_ = 0;
  std::vector<std::string> comments_;
};

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace cpc18
