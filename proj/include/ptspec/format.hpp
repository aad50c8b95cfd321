#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace ptspec {

/// Locale-independent decimal text. `significant` digits, general notation.
std::string format_significant(double value, int significant = 11);

/// Shortest text that parses back to the same double.
std::string format_shortest(double value);

/// Strict full-string parse; false on trailing garbage or an empty field.
bool parse_double(std::string_view text, double& out);

class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(std::vector<std::string> row);
  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<std::string>>& rows() const noexcept { return rows_; }

  /// Comma separated, LF line endings, header first.
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never see a partial file. Throws Error(io).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace ptspec
