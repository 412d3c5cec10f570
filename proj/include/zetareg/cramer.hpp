#ifndef ZETAREG_CRAMER_HPP
#define ZETAREG_CRAMER_HPP

// Cramer's functions over the zeros and the structure of their singularity
// at the origin:
//
//   phi(s) = sum_n e^{-s tau_n}            (Re s > 0)
//   V(s)   = sum_{Im rho > 0} e^{s rho}    (Im s > 0), V(iz) = e^{iz/2} phi(z)
//
// V(s) minus the singular model
//   (1/2pi i) ( log s / (1 - e^{-s}) + (gamma + log 2pi - i pi/2)/s )
// extends holomorphically over s = 0 (principal log). For real s > 0 the
// substitution s -> i*alpha*s splits phi(alpha s) into log_part(s)*log(s)
// plus a meromorphic part c_{-1}/s + c_0 + c_1 s + ..., whose leading
// coefficients have the closed forms
//   c_{-1} = -(gamma + log(2 pi alpha)) / (2 pi alpha),   c_0 = 7/8,
// while c_1 has no closed form and is recovered numerically by the
// least-squares fit in extract_laurent_coeffs.

#include <utility>
#include <vector>

#include "zetareg/summation.hpp"
#include "zetareg/zero_table.hpp"

namespace zetareg {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLog2Pi = 1.83787706640934548356;

// phi(s) with Re(s) > 0.
BoundedValue phi(const ZeroTable& table, cplx s);

// V(s) with Im(s) > 0, computed as e^{s/2} * exp_sum(table, -i s) so that
// v_func(i z) shares every arithmetic step with e^{iz/2} * phi(z).
BoundedValue v_func(const ZeroTable& table, cplx s);

// The singular model above; principal log. Throws std::domain_error at
// s = 0 and at the nonzero poles s = 2 pi i k of 1/(1-e^{-s}).
cplx cramer_singular(cplx s);

// v_func minus cramer_singular; stays bounded as s -> 0 in the upper
// half-plane, which remainder-ray scans verify empirically.
BoundedValue cramer_remainder(const ZeroTable& table, cplx s);

// Pieces of the phi(alpha s) singularity at real s > 0:
//   log_part      = e^{-i alpha s/2} / (2 pi i (1 - e^{-i alpha s}))
//   mero_singular = e^{-i alpha s/2} (1/2pi i) ( log(i alpha)/(1-e^{-i alpha s})
//                                                + (gamma + log 2pi - i pi/2)/(i alpha s) )
// Requires alpha > 0, s > 0, alpha*s < 2*pi (below the first nonzero pole).
struct PhiSingularParts {
  cplx log_part;
  cplx mero_singular;
};
PhiSingularParts phi_singular_model(double alpha, double s);

struct LaurentCoeffs {
  cplx c_minus1;
  cplx c0;
  cplx c1;
  double residual_norm = 0.0;   // l2 misfit of the model on the grid
  std::vector<double> s_grid;   // strictly decreasing grid that was fit
};

// Geometric ratio-1/2 grid of length 8 with alpha*s*tau_max >= 35 kept at
// the small end (truncation tails below roundoff of the fitted values).
std::vector<double> default_laurent_grid(const ZeroTable& table, double alpha);

// Least-squares fit of phi(alpha s) - log_part(s) log(s) against
// c_{-1}/s + c_0 + c_1 s + c_2 s^2 on the grid (c_2 is a guard term and is
// not reported). Requires grid length >= 6, strictly decreasing, and
// alpha * s_min * tau_max >= 35; throws std::domain_error with
// "insufficient truncation range" otherwise.
LaurentCoeffs extract_laurent_coeffs(const ZeroTable& table, double alpha,
                                     std::vector<double> s_grid = {});

// Samples of cramer_remainder along the ray s = r e^{i angle}, 0 < angle < pi.
struct RaySample {
  double r;
  cplx remainder;
  double tail_bound;
};
std::vector<RaySample> remainder_ray_scan(const ZeroTable& table, double angle,
                                          const std::vector<double>& radii);

// Least-squares slope of |remainder| against log r; near zero when the
// remainder is holomorphic (bounded) across the origin, magnitude >= 1
// when a 1/s pole or log s term is left unsubtracted.
double ray_scan_slope(const std::vector<RaySample>& samples);

}  // namespace zetareg

#endif  // ZETAREG_CRAMER_HPP
