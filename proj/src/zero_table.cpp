#include "zetareg/zero_table.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace zetareg {

namespace {

constexpr char kCacheMagic[4] = {'Z', 'R', 'T', '1'};
constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

void put_u64_le(std::ostream& os, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

std::uint64_t get_u64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

// Fractional digits present in a text token, e.g. "14.134725142" -> 9.
int fractional_digits(std::string_view tok) {
  const auto dot = tok.find('.');
  if (dot == std::string_view::npos) return 0;
  int n = 0;
  for (std::size_t i = dot + 1; i < tok.size(); ++i) {
    const char c = tok[i];
    if (c < '0' || c > '9') break;  // exponent part etc.
    ++n;
  }
  return n;
}

ZeroTable finish_table(std::vector<double> vals, const std::string& source,
                       int digits, std::size_t limit) {
  if (vals.empty())
    throw std::runtime_error(source + ": no ordinates found");
  std::sort(vals.begin(), vals.end());
  for (std::size_t i = 1; i < vals.size(); ++i)
    if (vals[i] == vals[i - 1])
      throw std::runtime_error(source + ": duplicate ordinate " +
                               std::to_string(vals[i]));
  if (limit != 0 && limit < vals.size()) vals.resize(limit);
  Eigen::VectorXd v(static_cast<Eigen::Index>(vals.size()));
  std::copy(vals.begin(), vals.end(), v.data());
  return ZeroTable(std::move(v), source, digits);
}

ZeroTable load_text(std::ifstream& in, const std::string& path,
                    std::size_t limit) {
  std::vector<double> vals;
  std::string line;
  int digits = 0;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();  // CRLF
    std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') continue;
    std::size_t end = line.find_first_of(" \t#", begin);
    if (end == std::string::npos) end = line.size();
    const char* first = line.data() + begin;
    const char* last = line.data() + end;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unparsable ordinate '" +
                               std::string(first, last) + "'");
    if (!std::isfinite(v) || v <= 0.0)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": ordinate out of range");
    digits = std::max(digits, fractional_digits({first, static_cast<std::size_t>(last - first)}));
    vals.push_back(v);
  }
  return finish_table(std::move(vals), path, digits, limit);
}

ZeroTable load_cache(std::ifstream& in, const std::string& path,
                     std::size_t limit) {
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0)
    throw std::runtime_error(path + ": bad cache magic");
  const std::uint64_t count = get_u64_le(in);
  if (!in) throw std::runtime_error(path + ": truncated cache header");
  std::size_t want = static_cast<std::size_t>(count);
  if (limit != 0) want = std::min(want, limit);
  std::vector<double> vals(want);
  for (std::size_t i = 0; i < want; ++i) {
    const std::uint64_t bits = get_u64_le(in);
    if (!in)
      throw std::runtime_error(path + ": truncated cache payload at entry " +
                               std::to_string(i));
    vals[i] = std::bit_cast<double>(bits);
    if (!std::isfinite(vals[i]) || vals[i] <= 0.0)
      throw std::runtime_error(path + ": corrupt cache entry " +
                               std::to_string(i));
  }
  // binary64 resolves ~12 fractional digits at the heights involved
  return finish_table(std::move(vals), path, 12, limit);
}

}  // namespace

ZeroTable ZeroTable::prefix(std::size_t n) const {
  const auto m = static_cast<Eigen::Index>(std::min(n, size()));
  return ZeroTable(ordinates_.head(m), source_, decimal_digits_);
}

double counting_estimate(double T) {
  if (!(T > kTwoPiE))
    throw std::domain_error("counting_estimate: requires T > 2*pi*e");
  const double x = T / (2.0 * std::numbers::pi);
  return x * std::log(x) - x + 0.875;
}

ZeroTable load_zero_table(const std::string& path, std::size_t limit) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open");
  char magic[4] = {0, 0, 0, 0};
  in.read(magic, 4);
  const bool has_magic =
      in.gcount() == 4 && std::memcmp(magic, kCacheMagic, 4) == 0;
  in.clear();
  in.seekg(0);
  if (has_magic) return load_cache(in, path, limit);
  return load_text(in, path, limit);
}

void write_zero_cache(const ZeroTable& table, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out.write(kCacheMagic, 4);
  put_u64_le(out, table.size());
  for (std::size_t i = 0; i < table.size(); ++i)
    put_u64_le(out, std::bit_cast<std::uint64_t>(table[i]));
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

ValidationReport validate(const ZeroTable& table) {
  ValidationReport rep;
  if (table.empty()) return rep;

  rep.monotone_ok = true;
  const double dup_eps =
      0.5 * std::pow(10.0, -std::min(table.decimal_digits(), 15));
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (table[i] <= table[i - 1]) rep.monotone_ok = false;
    if (std::abs(table[i] - table[i - 1]) < dup_eps) ++rep.duplicate_count;
  }
  rep.first_zero_ok = table.front() > 14.13 && table.front() < 14.14;

  // counting agreement at deciles, midpoint between adjacent ordinates
  const std::size_t n = table.size();
  for (int d = 1; d <= 10; ++d) {
    std::size_t k = (n * static_cast<std::size_t>(d)) / 10;
    k = std::min(std::max<std::size_t>(k, 1), n - 1);
    const double mid = 0.5 * (table[k - 1] + table[k]);
    if (!(mid > kTwoPiE * (1.0 + 1e-12))) continue;
    const double dev = std::abs(static_cast<double>(k) - counting_estimate(mid));
    rep.max_counting_deviation = std::max(rep.max_counting_deviation, dev);
  }
  return rep;
}

}  // namespace zetareg
