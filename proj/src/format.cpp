#include "wordstat/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace wordstat {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (res.ec != std::errc{}) throw std::logic_error("format_real: buffer too small");
  return std::string(buf.data(), res.ptr);
}

std::string format_big(const BigInt& v) { return v.str(); }

Table::Table(std::vector<std::string> header) : header_(std::move(header)) {}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != header_.size()) throw std::logic_error("Table: row width does not match header");
  rows_.push_back(std::move(row));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string csv_field(const Cell& c) {
  return std::visit(overloaded{[](std::monostate) { return std::string(); },
                               [](bool b) { return std::string(b ? "true" : "false"); },
                               [](long long v) { return std::to_string(v); },
                               [](double v) { return format_real(v); },
                               [](const BigText& b) { return b.digits; },
                               [](const std::string& s) { return s; }},
                    c);
}

nlohmann::json json_field(const Cell& c) {
  return std::visit(overloaded{[](std::monostate) { return nlohmann::json(nullptr); },
                               [](bool b) { return nlohmann::json(b); },
                               [](long long v) { return nlohmann::json(v); },
                               [](double v) { return json_real(v); },
                               [](const BigText& b) { return nlohmann::json(b.digits); },
                               [](const std::string& s) { return nlohmann::json(s); }},
                    c);
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  const auto line = [&out](const auto& cells, auto&& text) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += text(cells[i]);
    }
    out += '\n';
  };
  line(header_, [](const std::string& s) { return s; });
  for (const auto& row : rows_) line(row, csv_field);
  return out;
}

nlohmann::json Table::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows_) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < header_.size(); ++i) obj[header_[i]] = json_field(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr;
}

nlohmann::json json_real(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place: " + path.string() + ": " + ec.message());
  }
}

}  // namespace wordstat
