#include "report.hpp"

#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace hdist::cli {

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

std::string scalar_text(const Field& f, int digits, bool json) {
  struct Visitor {
    int digits;
    bool json;
    std::string operator()(std::monostate) const { return json ? "null" : ""; }
    std::string operator()(double x) const {
      if (json && !std::isfinite(x)) return "null";
      return format_double(x, digits);
    }
    std::string operator()(long long n) const { return std::to_string(n); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return json ? quote(s) : s; }
    std::string operator()(const std::vector<Record>&) const { return ""; }
  };
  return std::visit(Visitor{digits, json}, f);
}

bool is_table(const Field& f) { return std::holds_alternative<std::vector<Record>>(f); }

void json_object(std::ostream& out, const Record& r) {
  out << '{';
  bool first = true;
  for (const auto& [key, value] : r.fields) {
    if (!first) out << ',';
    first = false;
    out << quote(key) << ':';
    if (is_table(value)) {
      out << '[';
      const auto& rows = std::get<std::vector<Record>>(value);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << ',';
        json_object(out, rows[i]);
      }
      out << ']';
    } else {
      out << scalar_text(value, 17, true);
    }
  }
  out << '}';
}

void csv_rows(std::ostream& out, const std::vector<Record>& rows) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, value] : rows.front().fields) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.fields) {
      out << (first ? "" : ",") << scalar_text(value, 17, false);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace

Record& Record::set(std::string key, Field value) {
  fields.emplace_back(std::move(key), std::move(value));
  return *this;
}

Record& Record::set(std::string key, std::optional<double> value) {
  return value ? set(std::move(key), Field{*value}) : set(std::move(key), Field{});
}

Record& Record::set(std::string key, const char* value) {
  return set(std::move(key), Field{std::string(value)});
}

Record& Record::set(std::string key, double value) {
  return set(std::move(key), Field{value});
}

Record& Record::set(std::string key, int value) {
  return set(std::move(key), Field{static_cast<long long>(value)});
}

Record& Record::set(std::string key, long long value) {
  return set(std::move(key), Field{value});
}

Record& Record::set(std::string key, bool value) {
  return set(std::move(key), Field{value});
}

Record& Record::set(std::string key, std::string value) {
  return set(std::move(key), Field{std::move(value)});
}

std::string format_double(double x, int significant) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

void write_json(std::ostream& out, const Record& r) {
  json_object(out, r);
  out << '\n';
}

void write_human(std::ostream& out, const Record& r) {
  std::size_t width = 0;
  for (const auto& [key, value] : r.fields) {
    if (!is_table(value)) width = std::max(width, key.size());
  }
  for (const auto& [key, value] : r.fields) {
    if (is_table(value)) continue;
    const std::string text = scalar_text(value, 9, false);
    out << std::left << std::setw(static_cast<int>(width)) << key << "  "
        << (text.empty() ? "-" : text) << '\n';
  }
  for (const auto& [key, value] : r.fields) {
    if (!is_table(value)) continue;
    const auto& rows = std::get<std::vector<Record>>(value);
    out << '\n' << key << ":\n";
    if (rows.empty()) continue;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> widths;
    std::vector<std::string> header;
    for (const auto& f : rows.front().fields) header.push_back(f.first);
    cells.push_back(header);
    for (const auto& row : rows) {
      std::vector<std::string> line;
      for (const auto& f : row.fields) {
        const std::string text = scalar_text(f.second, 9, false);
        line.push_back(text.empty() ? "-" : text);
      }
      cells.push_back(std::move(line));
    }
    for (const auto& line : cells) {
      if (widths.size() < line.size()) widths.resize(line.size(), 0);
      for (std::size_t i = 0; i < line.size(); ++i) {
        widths[i] = std::max(widths[i], line[i].size());
      }
    }
    for (const auto& line : cells) {
      out << "  ";
      for (std::size_t i = 0; i < line.size(); ++i) {
        out << std::left << std::setw(static_cast<int>(widths[i])) << line[i]
            << (i + 1 < line.size() ? "  " : "");
      }
      out << '\n';
    }
  }
}

void write_csv(std::ostream& out, const Record& r) {
  const std::vector<Record>* table = nullptr;
  for (const auto& [key, value] : r.fields) {
    if (is_table(value)) {
      table = &std::get<std::vector<Record>>(value);
      break;
    }
  }
  if (table) {
    for (const auto& [key, value] : r.fields) {
      if (!is_table(value)) out << "# " << key << '=' << scalar_text(value, 17, false) << '\n';
    }
    csv_rows(out, *table);
    return;
  }
  csv_rows(out, {r});
}

void write(std::ostream& out, const Record& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::JSON:
      write_json(out, r);
      break;
    case OutputFormat::CSV:
      write_csv(out, r);
      break;
    case OutputFormat::Human:
      write_human(out, r);
      break;
  }
}

}  // namespace hdist::cli
