#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

namespace lexintel {

// Sequential line reader with 1-based line numbers. A trailing '\r' is dropped.
class LineReader {
 public:
  explicit LineReader(const std::filesystem::path& path);

  bool next(std::string& line);
  std::size_t line_number() const noexcept { return line_number_; }
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ifstream in_;
  std::size_t line_number_ = 0;
};

std::size_t count_lines(const std::filesystem::path& path);

// Splits on a single-character separator, keeping empty fields.
std::vector<std::string_view> split(std::string_view text, char sep);

std::string_view trim(std::string_view text) noexcept;

// Quotes a CSV field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

// Shortest round-trip decimal representation of a double.
std::string format_double(double value);
// Fixed-point representation with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

}  // namespace lexintel
