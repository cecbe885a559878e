#include "ssdiv/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ssdiv::csv {

std::string format_double(double v) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, v);
  if (ec != std::errc{}) throw std::runtime_error("csv: cannot format double");
  return std::string(buffer, end);
}

void Writer::header(std::initializer_list<std::string_view> columns) {
  for (auto c : columns) field(c);
  end_row();
}

void Writer::separator() {
  if (!first_in_row_) out_ << ',';
  first_in_row_ = false;
}

Writer& Writer::field(std::string_view text) {
  separator();
  out_ << text;
  return *this;
}

Writer& Writer::field(double v) { return field(std::string_view(format_double(v))); }

Writer& Writer::field(std::int64_t v) {
  separator();
  out_ << v;
  return *this;
}

void Writer::end_row() {
  out_ << '\n';
  first_in_row_ = true;
}

std::size_t Table::column(std::string_view name) const {
  for (std::size_t k = 0; k < columns.size(); ++k)
    if (columns[k] == name) return k;
  throw std::out_of_range("csv: missing column '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

Table read(std::istream& in) {
  Table table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!have_header) {
      table.columns = split_line(line);
      have_header = true;
    } else {
      table.rows.push_back(split_line(line));
      if (table.rows.back().size() != table.columns.size())
        throw std::runtime_error("csv: row width does not match header");
    }
  }
  if (!have_header) throw std::runtime_error("csv: missing header");
  return table;
}

Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("csv: cannot open '" + path + "'");
  return read(in);
}

}  // namespace ssdiv::csv
