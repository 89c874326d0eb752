#include "cpc18/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "cpc18/errors.hpp"

namespace cpc18 {

std::string format_double(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::size_t line, const char* field) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end || !std::isfinite(value))
    throw ParseError(std::string("field ") + field + ": bad number \"" +
                         std::string(text) + "\"",
                     line);
  return value;
}

long parse_long(std::string_view text, std::size_t line, const char* field) {
  long value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto res = std::from_chars(begin, end, value);
  if (res.ec != std::errc() || res.ptr != end)
    throw ParseError(std::string("field ") + field + ": bad integer \"" +
                         std::string(text) + "\"",
                     line);
  return value;
}

CsvReader::CsvReader(const std::string& path) : in_(new std::ifstream(path)) {
  if (!*in_) throw ValidationError("cannot open file: " + path);
}

CsvReader::~CsvReader() { delete in_; }

bool CsvReader::next_row(std::vector<std::string>& fields) {
  comments_.clear();
  std::string raw;
  while (std::getline(*in_, raw)) {
    ++line_;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (raw[0] == '#') {
      std::size_t start = 1;
      while (start < raw.size() && raw[start] == ' ') ++start;
      comments_.push_back(raw.substr(start));
      continue;
    }
    fields.clear();
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      const char c = raw[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < raw.size() && raw[i + 1] == '"') {
            cell.push_back('"');
            ++i;
          } else {
            quoted = false;
          }
        } else {
          cell.push_back(c);
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(cell));
        cell.clear();
      } else {
        cell.push_back(c);
      }
    }
    if (quoted) throw ParseError("unterminated quoted field", line_);
    fields.push_back(std::move(cell));
    return true;
  }
  return false;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      out << '"';
      for (char c : f) {
        if (c == '"') out << "\"\"";
        else out << c;
      }
      out << '"';
    } else {
      out << f;
    }
  }
  out << '\n';
}

}  // namespace cpc18
