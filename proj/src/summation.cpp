#include "zetareg/summation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetareg {

cplx log1p_cplx(cplx u) {
  const double x = u.real(), y = u.imag();
  // |1+u|^2 - 1 = 2x + x^2 + y^2, fed to real log1p; imaginary part exact.
  const double r2m1 = x * (2.0 + x) + y * y;
  return {0.5 * std::log1p(r2m1), std::atan2(y, 1.0 + x)};
}

cplx expm1_cplx(cplx w) {
  const double x = w.real(), y = w.imag();
  const double ex = std::expm1(x);
  const double cy = std::cos(y), sy = std::sin(y);
  const double half = std::sin(0.5 * y);
  // e^x cos y - 1 = expm1(x) cos y - 2 sin^2(y/2): no cancellation near 0.
  return {ex * cy - 2.0 * half * half, (1.0 + ex) * sy};
}

double density_tail(double a, double T) {
  if (!(a > 0.0)) throw std::domain_error("density_tail: requires a > 0");
  if (!(T >= 14.0))
    throw std::domain_error("density_tail: requires T at or above tau_1");
  return std::exp(-a * T) * std::log(T) / (std::numbers::pi * a);
}

namespace {

// Tail for a table with no entries at all. The smooth density bound alone
// is not safe from T = 14: the first zero sits at 14.1347, bare 0.13 above,
// and around a ~ 1 its single term already exceeds the integral estimate.
// Cover the first three zeros termwise (at floor heights, so each piece
// dominates its true term) and hand the rest to the density bound from 25.
double empty_table_tail(double a) {
  return std::exp(-14.0 * a) + std::exp(-21.0 * a) + std::exp(-25.0 * a) +
         density_tail(a, 25.0);
}

}  // namespace

BoundedValue exp_sum(const ZeroTable& table, cplx a) {
  if (!(a.real() > 0.0))
    throw std::domain_error("exp_sum: requires Re(a) > 0");
  if (table.empty()) return {cplx{0.0, 0.0}, empty_table_tail(a.real())};

  KbnSumC acc;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i)
    acc.add(std::exp(-a * table[i]));
  const cplx v = acc.value();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::overflow_error("exp_sum: non-finite accumulation");
  return {v, density_tail(a.real(), table.back())};
}

BoundedValue log_one_minus_sum(const ZeroTable& table, cplx c, double a) {
  if (!(a > 0.0))
    throw std::domain_error("log_one_minus_sum: requires a > 0");
  if (table.empty()) {
    const double q0 = std::abs(c) * std::exp(-a * 14.0);
    if (!(q0 < 1.0))
      throw std::domain_error(
          "log_one_minus_sum: requires |c| e^{-a tau_1} < 1");
    return {cplx{0.0, 0.0},
            empty_table_tail(a) * std::abs(c) / (1.0 - q0)};
  }
  const double q = std::abs(c) * std::exp(-a * table.front());
  if (!(q < 1.0))
    throw std::domain_error(
        "log_one_minus_sum: requires |c| e^{-a tau_1} < 1");
  if (c == cplx{0.0, 0.0}) return {cplx{0.0, 0.0}, 0.0};

  KbnSumC acc;
  const std::size_t n = table.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double damp = std::exp(-a * table[i]);
    acc.add(log1p_cplx(-c * damp));
  }
  const cplx v = acc.value();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw std::overflow_error("log_one_minus_sum: non-finite accumulation");
  // |log(1-u)| <= |u|/(1-|u|) termwise, so the dropped tail is bounded by
  // |c|/(1-q) times the exponential tail of the density.
  const double tail =
      density_tail(a, table.back()) * std::abs(c) / (1.0 - q);
  return {v, tail};
}

}  // namespace zetareg
