#pragma once

// Deterministic, locale-independent serialization for the CLI.
//
// Floats are rendered by std::to_chars with 17 significant digits (enough to
// round-trip any double exactly), rationals as exact "p/q" strings, and keys
// keep their insertion order — identical argv must produce byte-identical
// output, so nothing here consults locales, time, or hash ordering.

#include <string>
#include <vector>

namespace stirlab {

/// 17-significant-digit decimal rendering; '.' decimal point always.
std::string format_double(double v);

/// One typed cell: JSON emits Number bare and Text quoted.
struct Cell {
  enum class Kind { Number, Integer, Text } kind = Kind::Text;
  std::string rendered;

  static Cell number(double v);
  static Cell integer(long long v);
  static Cell text(std::string s);
};

/// The one machine-readable result shape every subcommand emits:
/// schema_version + command + echoed inputs + a list of rows, where each row
/// is an ordered (column -> cell) map.  Rows may carry different column sets;
/// CSV takes the union of columns in first-appearance order.
struct OutputRecord {
  std::string schema_version = "1";
  std::string command;
  std::vector<std::pair<std::string, Cell>> inputs;
  std::vector<std::vector<std::pair<std::string, Cell>>> rows;

  std::string to_json() const;
  std::string to_csv() const;
  std::string to_text() const;

  /// Dispatch on "json" | "csv" | "text"; throws std::domain_error otherwise.
  std::string serialize(const std::string& format) const;
};

}  // namespace stirlab
