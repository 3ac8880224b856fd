#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qps::cli {

enum class OutputFormat { kPlain, kRows };

/// One output record: a key followed by whitespace-free fields.
struct Row {
  std::string key;
  std::vector<std::string> fields;
  friend bool operator==(const Row&, const Row&) = default;
};

struct Report {
  /// "name value" pairs printed before the rows (seed, field, ...).
  std::vector<Row> header;
  std::vector<Row> rows;
  /// Human-oriented lines shown instead of the rows in plain format, when present.
  std::vector<std::string> summary;

  void add(std::string key, std::vector<std::string> fields);
  void note(std::string key, std::string value);
  friend bool operator==(const Report&, const Report&) = default;
};

/// "# key field..." header lines, then "key field..." lines.
std::string emit_rows(const Report& report);
/// Inverse of emit_rows; the summary is not part of the rows format. Throws ParseError.
Report parse_rows(std::string_view text);

std::string emit_plain(const Report& report);
std::string render(const Report& report, OutputFormat format);

}  // namespace qps::cli
