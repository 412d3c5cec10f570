#include "zetareg/cramer.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zetareg {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};
// gamma + log 2pi - i pi/2, the residue constant of Cramer's model
const cplx kCramerC{kEulerGamma + kLog2Pi, -kPi / 2.0};
}  // namespace

BoundedValue phi(const ZeroTable& table, cplx s) {
  if (!(s.real() > 0.0)) throw std::domain_error("phi: requires Re(s) > 0");
  return exp_sum(table, s);
}

BoundedValue v_func(const ZeroTable& table, cplx s) {
  if (!(s.imag() > 0.0)) throw std::domain_error("v_func: requires Im(s) > 0");
  // e^{s rho} = e^{s/2} e^{-(-is) tau}; -i*(i z) reproduces z exactly, so
  // v_func(i z) and e^{iz/2} phi(z) share every arithmetic step.
  const cplx pref = std::exp(s / 2.0);
  const BoundedValue e = exp_sum(table, -kI * s);
  return {pref * e.value, std::abs(pref) * e.tail_bound};
}

cplx cramer_singular(cplx s) {
  if (std::abs(s) < 1e-300)
    throw std::domain_error("cramer_singular: s = 0 is the singular point");
  // poles of 1/(1 - e^{-s}) at s = 2 pi i k, k != 0
  const double k = std::round(s.imag() / (2.0 * kPi));
  if (k != 0.0 && std::abs(s - cplx{0.0, 2.0 * kPi * k}) <=
                      1e-9 * (1.0 + std::abs(s)))
    throw std::domain_error("cramer_singular: pole at s = 2 pi i k");
  const cplx denom = 1.0 - std::exp(-s);
  return (std::log(s) / denom + kCramerC / s) / (2.0 * kPi * kI);
}

BoundedValue cramer_remainder(const ZeroTable& table, cplx s) {
  const BoundedValue v = v_func(table, s);
  return {v.value - cramer_singular(s), v.tail_bound};
}

PhiSingularParts phi_singular_model(double alpha, double s) {
  if (!(alpha > 0.0) || !(s > 0.0))
    throw std::domain_error("phi_singular_model: requires alpha > 0, s > 0");
  if (!(alpha * s < 2.0 * kPi))
    throw std::domain_error(
        "phi_singular_model: alpha*s must stay below the first 2 pi pole");
  const cplx ias = kI * (alpha * s);
  const cplx rot = std::exp(-ias / 2.0);
  const cplx denom = 1.0 - std::exp(-ias);
  const cplx two_pi_i = 2.0 * kPi * kI;
  PhiSingularParts parts;
  parts.log_part = rot / (two_pi_i * denom);
  parts.mero_singular =
      rot * (std::log(kI * alpha) / denom + kCramerC / ias) / two_pi_i;
  return parts;
}

std::vector<double> default_laurent_grid(const ZeroTable& table, double alpha) {
  if (table.empty() || !(alpha > 0.0))
    throw std::domain_error("default_laurent_grid: empty table or alpha <= 0");
  // alpha*s spans 8 halvings; the smallest point keeps alpha*s*tau_max >= 35
  // so the summation tails sit at the e^{-35} level, below fit resolution.
  const double x_small = 35.2 / table.back();
  const double x0 = std::max(0.064, x_small * 128.0);
  // a small table pushes x0 up toward the alpha*s = 2*pi pole of the
  // log-part model, where the 1/s + const + s + s^2 fit stops making sense
  if (x0 >= 0.9 * 2.0 * kPi)
    throw std::domain_error("default_laurent_grid: insufficient truncation range");
  std::vector<double> grid(8);
  for (int j = 0; j < 8; ++j)
    grid[j] = x0 / (alpha * static_cast<double>(1 << j));
  return grid;
}

LaurentCoeffs extract_laurent_coeffs(const ZeroTable& table, double alpha,
                                     std::vector<double> s_grid) {
  if (s_grid.empty()) s_grid = default_laurent_grid(table, alpha);
  if (s_grid.size() < 6)
    throw std::domain_error("extract_laurent_coeffs: grid needs >= 6 points");
  for (std::size_t i = 1; i < s_grid.size(); ++i)
    if (!(s_grid[i] < s_grid[i - 1]))
      throw std::domain_error(
          "extract_laurent_coeffs: grid must be strictly decreasing");
  if (table.empty() ||
      !(alpha * s_grid.back() * table.back() >= 35.0 * (1.0 - 1e-12)))
    throw std::domain_error(
        "extract_laurent_coeffs: insufficient truncation range");
  if (!(alpha * s_grid.front() < 2.0 * kPi))
    throw std::domain_error(
        "extract_laurent_coeffs: grid crosses the alpha*s = 2*pi model pole");

  const auto n = static_cast<Eigen::Index>(s_grid.size());
  Eigen::MatrixXd design(n, 4);
  Eigen::VectorXd rhs_re(n), rhs_im(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const double s = s_grid[static_cast<std::size_t>(j)];
    const PhiSingularParts parts = phi_singular_model(alpha, s);
    const cplx p = phi(table, cplx{alpha * s, 0.0}).value -
                   parts.log_part * std::log(s);
    design(j, 0) = 1.0 / s;
    design(j, 1) = 1.0;
    design(j, 2) = s;
    design(j, 3) = s * s;
    rhs_re(j) = p.real();
    rhs_im(j) = p.imag();
  }
  const auto qr = design.colPivHouseholderQr();
  if (qr.rank() < 4)
    throw std::runtime_error("extract_laurent_coeffs: ill-conditioned fit");
  const Eigen::VectorXd x_re = qr.solve(rhs_re);
  const Eigen::VectorXd x_im = qr.solve(rhs_im);

  LaurentCoeffs out;
  out.c_minus1 = {x_re(0), x_im(0)};
  out.c0 = {x_re(1), x_im(1)};
  out.c1 = {x_re(2), x_im(2)};
  const double res2 = (design * x_re - rhs_re).squaredNorm() +
                      (design * x_im - rhs_im).squaredNorm();
  out.residual_norm = std::sqrt(res2);
  out.s_grid = std::move(s_grid);
  return out;
}

std::vector<RaySample> remainder_ray_scan(const ZeroTable& table, double angle,
                                          const std::vector<double>& radii) {
  if (!(angle > 0.0) || !(angle < kPi))
    throw std::domain_error(
        "remainder_ray_scan: ray must point into the upper half-plane");
  std::vector<RaySample> out;
  out.reserve(radii.size());
  const cplx dir{std::cos(angle), std::sin(angle)};
  for (const double r : radii) {
    if (!(r > 0.0))
      throw std::domain_error("remainder_ray_scan: radii must be positive");
    const BoundedValue rem = cramer_remainder(table, r * dir);
    out.push_back({r, rem.value, rem.tail_bound});
  }
  return out;
}

double ray_scan_slope(const std::vector<RaySample>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("ray_scan_slope: needs >= 2 samples");
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& smp = samples[static_cast<std::size_t>(i)];
    design(i, 0) = 1.0;
    design(i, 1) = std::log(smp.r);
    // |remainder| itself, not its log: a bounded remainder gives a flat fit,
    // while leftover 1/s or log s singular terms blow the slope past 1.
    rhs(i) = std::abs(smp.remainder);
  }
  const Eigen::Vector2d fit =
      design.colPivHouseholderQr().solve(rhs);
  return fit(1);
}

}  // namespace zetareg
