#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hdist::cli {

enum class OutputFormat { Human, JSON, CSV };

struct Record;

/// Scalar or nested table. std::monostate prints as null.
using Field = std::variant<std::monostate, double, long long, bool, std::string,
                           std::vector<Record>>;

/// Ordered key/value report; keys keep insertion order in every format.
struct Record {
  std::vector<std::pair<std::string, Field>> fields;

  Record& set(std::string key, Field value);
  Record& set(std::string key, std::optional<double> value);
  Record& set(std::string key, const char* value);
  Record& set(std::string key, double value);
  Record& set(std::string key, int value);
  Record& set(std::string key, long long value);
  Record& set(std::string key, bool value);
  Record& set(std::string key, std::string value);
};

/// Shortest text for x with the given number of significant digits; "nan",
/// "inf" and "-inf" for non-finite values.
std::string format_double(double x, int significant);

/// Writes a record as a flat JSON object (17 digits, non-finite as null),
/// nested tables becoming arrays of objects.
void write_json(std::ostream& out, const Record& r);

/// key: value lines, 9 digits; nested tables as aligned rows.
void write_human(std::ostream& out, const Record& r);

/// Scalars as "# key=value" comments; the first nested table (if any) as a
/// header line plus rows. Without a table, one header and one data row.
void write_csv(std::ostream& out, const Record& r);

void write(std::ostream& out, const Record& r, OutputFormat format);

}  // namespace hdist::cli
