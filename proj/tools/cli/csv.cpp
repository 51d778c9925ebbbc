#include "cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "cli/errors.hpp"

namespace otto::cli {

std::string format_number(double value) {
  if (value == 0.0) return "0";
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

std::string format_number(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string();
}

double parse_number(std::string_view text) {
  if (text == "nan") return std::nan("");
  if (text == "inf") return HUGE_VAL;
  if (text == "-inf") return -HUGE_VAL;
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty())
    throw UsageError("not a number: '" + std::string(text) + "'");
  return v;
}

std::size_t CsvDocument::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return i;
  throw std::out_of_range("no column '" + std::string(name) + "'");
}

namespace {

void write_fields(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i].find_first_of(",\r\n") != std::string::npos)
      throw std::invalid_argument("CSV field contains a separator: " + fields[i]);
    if (i) out << ',';
    out << fields[i];
  }
  out << '\n';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const CsvDocument& doc) {
  for (const auto& m : doc.metadata) {
    if (m.find_first_of("\r\n") != std::string::npos) throw std::invalid_argument("multi-line metadata");
    out << "# " << m << '\n';
  }
  write_fields(out, doc.header);
  for (const auto& row : doc.rows) write_fields(out, row);
}

std::string to_csv_string(const CsvDocument& doc) {
  std::ostringstream os;
  write_csv(os, doc);
  return os.str();
}

CsvDocument read_csv(std::istream& in) {
  CsvDocument doc;
  std::string line;
  bool haveHeader = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') {
      doc.metadata.push_back(line.rfind("# ", 0) == 0 ? line.substr(2) : line.substr(1));
      continue;
    }
    if (line.empty()) continue;
    auto fields = split(line);
    if (!haveHeader) {
      doc.header = std::move(fields);
      haveHeader = true;
    } else {
      if (fields.size() != doc.header.size())
        throw UsageError("CSV row has " + std::to_string(fields.size()) + " fields, header has " +
                         std::to_string(doc.header.size()));
      doc.rows.push_back(std::move(fields));
    }
  }
  return doc;
}

CsvDocument read_csv_string(const std::string& text) {
  std::istringstream is(text);
  return read_csv(is);
}

}  // namespace otto::cli
