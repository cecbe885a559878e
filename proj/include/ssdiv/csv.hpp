#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ssdiv::csv {

/// Shortest round-trip decimal representation ('.' separator, no locale).
std::string format_double(double v);

/// Comma-separated writer with LF line endings.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void header(std::initializer_list<std::string_view> columns);

  Writer& field(std::string_view text);
  Writer& field(double v);
  Writer& field(std::int64_t v);
  Writer& field(int v) { return field(static_cast<std::int64_t>(v)); }
  void end_row();

 private:
  void separator();

  std::ostream& out_;
  bool first_in_row_ = true;
};

/// Minimal reader for the files this project writes: no quoting.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  /// Index of `name` in columns; throws std::out_of_range if absent.
  std::size_t column(std::string_view name) const;
};

Table read(std::istream& in);
Table read_file(const std::string& path);

}  // namespace ssdiv::csv
