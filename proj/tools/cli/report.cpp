#include "report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qps/errors.hpp"

namespace qps::cli {

namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

void check_token(std::string_view s) {
  if (s.empty() || has_space(s)) throw Error("report token must be nonempty and without whitespace: '" + std::string(s) + "'");
}

void write_row(std::ostringstream& out, const Row& row) {
  check_token(row.key);
  out << row.key;
  for (const auto& f : row.fields) {
    check_token(f);
    out << ' ' << f;
  }
  out << '\n';
}

Row read_row(std::string_view line) {
  std::istringstream in{std::string(line)};
  Row row;
  in >> row.key;
  for (std::string f; in >> f;) row.fields.push_back(f);
  return row;
}

}  // namespace

void Report::add(std::string key, std::vector<std::string> fields) { rows.push_back({std::move(key), std::move(fields)}); }

void Report::note(std::string key, std::string value) { header.push_back({std::move(key), {std::move(value)}}); }

std::string emit_rows(const Report& report) {
  std::ostringstream out;
  for (const auto& h : report.header) {
    out << "# ";
    write_row(out, h);
  }
  for (const auto& r : report.rows) {
    if (r.key.starts_with('#')) throw Error("row key may not start with '#'");
    write_row(out, r);
  }
  return out.str();
}

Report parse_rows(std::string_view text) {
  Report report;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line.front() == '#') {
      line.remove_prefix(1);
      Row h = read_row(line);
      if (h.key.empty()) throw ParseError(line_no, "empty header line");
      report.header.push_back(std::move(h));
    } else if (std::isspace(static_cast<unsigned char>(line.front()))) {
      throw ParseError(line_no, "row must start with its key");
    } else {
      report.rows.push_back(read_row(line));
    }
  }
  return report;
}

std::string emit_plain(const Report& report) {
  std::ostringstream out;
  for (const auto& h : report.header) {
    out << h.key << ':';
    for (const auto& f : h.fields) out << ' ' << f;
    out << '\n';
  }
  if (!report.summary.empty()) {
    for (const auto& s : report.summary) out << s << '\n';
    return out.str();
  }
  std::size_t width = 0;
  for (const auto& r : report.rows) width = std::max(width, r.key.size());
  for (const auto& r : report.rows) {
    out << r.key;
    if (!r.fields.empty()) out << std::string(width - r.key.size() + 2, ' ');
    for (std::size_t i = 0; i < r.fields.size(); ++i) out << (i ? " " : "") << r.fields[i];
    out << '\n';
  }
  return out.str();
}

std::string render(const Report& report, OutputFormat format) {
  return format == OutputFormat::kRows ? emit_rows(report) : emit_plain(report);
}

}  // namespace qps::cli
