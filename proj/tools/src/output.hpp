#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace turan::cli {

using Field = std::variant<std::string, double, long long, bool>;

/// One flat, self-describing row.
struct OutputRecord {
  std::vector<std::pair<std::string, Field>> fields;

  OutputRecord& add(std::string key, Field value) {
    fields.emplace_back(std::move(key), std::move(value));
    return *this;
  }
};

enum class Format { csv, json };

/// 17 significant digits ("%.17g"); "nan", "inf" and "-inf" otherwise.
std::string format_number(double value);

/// Header is the union of keys in first-seen order; absent fields stay empty.
/// Comma separator, '\n' line endings, RFC 4180 quoting for strings.
void write_csv(const std::vector<OutputRecord>& records, std::ostream& out);

/// A JSON array of objects; non-finite numbers become null.
void write_json(const std::vector<OutputRecord>& records, std::ostream& out);

void write_records(const std::vector<OutputRecord>& records, Format format, std::ostream& out);

/// Splits one CSV line produced by write_csv back into cells.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace turan::cli
