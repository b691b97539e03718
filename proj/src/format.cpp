#include "stirlab/format.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace stirlab {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Cell Cell::number(double v) { return {Kind::Number, format_double(v)}; }

Cell Cell::integer(long long v) { return {Kind::Integer, std::to_string(v)}; }

Cell Cell::text(std::string s) { return {Kind::Text, std::move(s)}; }

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void append_json_value(std::string& out, const Cell& cell) {
  if (cell.kind == Cell::Kind::Text) {
    out += '"';
    out += json_escape(cell.rendered);
    out += '"';
  } else {
    out += cell.rendered;  // Number and Integer are already valid JSON tokens
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

// Union of row columns in first-appearance order.
std::vector<std::string> column_order(
    const std::vector<std::vector<std::pair<std::string, Cell>>>& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [name, cell] : row)
      if (std::find(cols.begin(), cols.end(), name) == cols.end()) cols.push_back(name);
  return cols;
}

const Cell* find_cell(const std::vector<std::pair<std::string, Cell>>& row,
                      const std::string& name) {
  for (const auto& [n, c] : row)
    if (n == name) return &c;
  return nullptr;
}

}  // namespace

std::string OutputRecord::to_json() const {
  std::string out = "{\"schema_version\":\"";
  out += json_escape(schema_version);
  out += "\",\"command\":\"";
  out += json_escape(command);
  out += "\",\"inputs\":{";
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i > 0) out += ',';
    out += '"';
    out += json_escape(inputs[i].first);
    out += "\":";
    append_json_value(out, inputs[i].second);
  }
  out += "},\"results\":[";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r > 0) out += ',';
    out += '{';
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (i > 0) out += ',';
      out += '"';
      out += json_escape(rows[r][i].first);
      out += "\":";
      append_json_value(out, rows[r][i].second);
    }
    out += '}';
  }
  out += "]}\n";
  return out;
}

std::string OutputRecord::to_csv() const {
  const std::vector<std::string> cols = column_order(rows);
  std::string out;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(cols[i]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (i > 0) out += ',';
      if (const Cell* c = find_cell(row, cols[i])) out += csv_escape(c->rendered);
    }
    out += '\n';
  }
  return out;
}

std::string OutputRecord::to_text() const {
  const std::vector<std::string> cols = column_order(rows);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t i = 0; i < cols.size(); ++i) width[i] = cols[i].size();
  for (const auto& row : rows)
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (const Cell* c = find_cell(row, cols[i]))
        width[i] = std::max(width[i], c->rendered.size());

  std::string out = "# ";
  out += command;
  for (const auto& [name, cell] : inputs) {
    out += ' ';
    out += name;
    out += '=';
    out += cell.rendered;
  }
  out += '\n';
  auto pad = [](std::string& line, const std::string& s, std::size_t w, bool last) {
    line += s;
    if (!last) line.append(w - s.size() + 2, ' ');
  };
  {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i)
      pad(line, cols[i], width[i], i + 1 == cols.size());
    out += line;
    out += '\n';
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const Cell* c = find_cell(row, cols[i]);
      pad(line, c ? c->rendered : std::string(), width[i], i + 1 == cols.size());
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string OutputRecord::serialize(const std::string& format) const {
  if (format == "json") return to_json();
  if (format == "csv") return to_csv();
  if (format == "text") return to_text();
  throw std::domain_error("unknown format '" + format + "' (expected json, csv, or text)");
}

}  // namespace stirlab
