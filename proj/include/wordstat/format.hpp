#ifndef WORDSTAT_FORMAT_HPP
#define WORDSTAT_FORMAT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wordstat/bigcomb.hpp"

namespace wordstat {

/// Shortest decimal text that parses back to exactly x; "inf", "-inf" and
/// "nan" for the non-finite values.
std::string format_real(double x);

std::string format_big(const BigInt& v);

/// One cell of an output table. Integers that may exceed 64 bits are carried
/// as decimal text.
struct BigText {
  std::string digits;
};
using Cell = std::variant<std::monostate, bool, long long, double, BigText, std::string>;

/// Header plus rows; renders to CSV (LF line endings, header first) or to a
/// JSON array of row objects. Empty cells become "" in CSV and null in JSON.
class Table {
 public:
  explicit Table(std::vector<std::string> header);

  void add_row(std::vector<Cell> row);
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string to_csv() const;
  nlohmann::json to_json() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> rows_;
};

/// Non-finite reals become null, so the output stays valid JSON.
nlohmann::json json_real(double x);

/// Writes content to a sibling temporary file, then renames it over path.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace wordstat

#endif  // WORDSTAT_FORMAT_HPP
