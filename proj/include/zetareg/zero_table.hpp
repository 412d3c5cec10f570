#ifndef ZETAREG_ZERO_TABLE_HPP
#define ZETAREG_ZERO_TABLE_HPP

// Storage and validation of tables of nontrivial zeta zero ordinates
// (the positive imaginary parts tau_n of rho_n = 1/2 + i*tau_n, assuming
// all zeros lie on the critical line, which holds for every published
// table in reach of this code).
//
// Two on-disk forms are understood:
//   * plain text: one ordinate per line, '#' starts a comment, blank
//     lines ignored, LF or CRLF endings;
//   * binary cache: magic "ZRT1", u64 little-endian count, then count
//     IEEE binary64 little-endian ordinates.

#include <Eigen/Dense>
#include <cstddef>
#include <string>

namespace zetareg {

class ZeroTable {
 public:
  ZeroTable() = default;
  ZeroTable(Eigen::VectorXd ordinates, std::string source, int decimal_digits)
      : ordinates_(std::move(ordinates)),
        source_(std::move(source)),
        decimal_digits_(decimal_digits) {}

  std::size_t size() const { return static_cast<std::size_t>(ordinates_.size()); }
  bool empty() const { return ordinates_.size() == 0; }
  double operator[](std::size_t i) const { return ordinates_[static_cast<Eigen::Index>(i)]; }
  double front() const { return ordinates_[0]; }
  double back() const { return ordinates_[ordinates_.size() - 1]; }
  const Eigen::VectorXd& ordinates() const { return ordinates_; }
  const std::string& source() const { return source_; }
  // Count of reliable digits after the decimal point in the source data.
  int decimal_digits() const { return decimal_digits_; }

  // Copy of the first n ordinates (n clamped to size); source tag kept.
  ZeroTable prefix(std::size_t n) const;

 private:
  Eigen::VectorXd ordinates_;
  std::string source_;
  int decimal_digits_ = 0;
};

struct ValidationReport {
  bool monotone_ok = false;       // strictly increasing
  bool first_zero_ok = false;     // first ordinate inside (14.13, 14.14)
  double max_counting_deviation = 0.0;  // worst |count - estimate| at deciles
  std::size_t duplicate_count = 0;      // adjacent pairs equal within precision

  bool passed() const {
    return monotone_ok && first_zero_ok && duplicate_count == 0 &&
           max_counting_deviation <= 2.0;
  }
};

// Riemann-von Mangoldt first terms: (T/2pi) log(T/2pi) - T/2pi + 7/8.
// Domain: T > 2*pi*e (strictly increasing there); throws std::domain_error.
double counting_estimate(double T);

// Load text or ZRT1 cache (sniffed by magic). limit = 0 loads everything,
// otherwise the first `limit` ordinates after sorting. Rejects unreadable
// files, unparsable lines (with line number), nonpositive or non-finite
// values, exact duplicate ordinates, and empty tables.
ZeroTable load_zero_table(const std::string& path, std::size_t limit = 0);

// Write the ZRT1 binary cache form.
void write_zero_cache(const ZeroTable& table, const std::string& path);

// Health checks; never throws on bad data, reports it instead. Counting
// deviations are measured at table deciles, at the midpoint between the
// decile ordinate and its predecessor (skipped below the 2*pi*e domain
// edge of counting_estimate).
ValidationReport validate(const ZeroTable& table);

}  // namespace zetareg

#endif  // ZETAREG_ZERO_TABLE_HPP
