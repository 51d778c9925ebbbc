#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otto::cli {

inline constexpr std::string_view kToolVersion = "1.0.0";

/// 12 significant digits, shortest of fixed/scientific, "." separator,
/// independent of the global locale. -0 prints as 0.
std::string format_number(double value);
/// Empty string for nullopt.
std::string format_number(const std::optional<double>& value);

/// Inverse of format_number. Throws UsageError on malformed input.
double parse_number(std::string_view text);

struct CsvDocument {
  std::vector<std::string> metadata;  ///< written as "# <line>"
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

/// Fields must not contain ',' or line breaks; std::invalid_argument otherwise.
void write_csv(std::ostream& out, const CsvDocument& doc);
std::string to_csv_string(const CsvDocument& doc);

/// Reads what write_csv produced; "#" lines anywhere are metadata. Rows with a different field count than the
/// header raise UsageError.
CsvDocument read_csv(std::istream& in);
CsvDocument read_csv_string(const std::string& text);

}  // namespace otto::cli
