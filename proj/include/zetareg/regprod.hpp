#ifndef ZETAREG_REGPROD_HPP
#define ZETAREG_REGPROD_HPP

// Zeta-regularized trigonometric products over the zeros and the linear
// terms that normalize them.
//
// Sine family: for factors sin(alpha_k rho - z_k) the regularized product is
//   S = e^{-F} prod_k (e^{-2i z_k}; e^{-2i alpha_k})_zeta
// with the polynomial
//   F = -((gamma + log 2 pi alpha)/(4 pi alpha)) A^2 + (7/8) A + c_1(alpha),
//   A = n log(-2i) - i z + i alpha / 2,    alpha = sum alpha_k, z = sum z_k,
// log(-2i) principal (= log 2 - i pi/2). The 7/8 coefficient carries a
// documented sign ambiguity between the two source formulations; poly_F
// takes sign_c0 in {+1,-1} and the verify suite adjudicates numerically.
//
// Exponential family: factors (e^{-i(alpha_k rho - z_k)} - omega_k) give
//   S~ = e^{-F~} prod_k (omega_k e^{-i z_k}; e^{-i alpha_k})_zeta,
//   F~ like F with A~ = i alpha/2 - i z and no log(-2i) term.
//
// The linear terms themselves are observable: with the factorized branch
// convention, D(s) = e^{-sA'} L(s) - V(i alpha s) satisfies D(s)/s ->
// sum_k f(k) as s -> 0+, where f(k) is an explicit series/product over the
// zeros. lt_extract performs that limit by Richardson extrapolation and is
// the numerical referee for the closed forms.

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "zetareg/summation.hpp"
#include "zetareg/zero_table.hpp"

namespace zetareg {

// Parameter bundle for the sine family. Constraints (validate():
// std::invalid_argument): equal-length nonempty lists, alpha_k > 0,
// 0 <= Re(z_k) < 2 pi, Im(z_k) <= 0.
struct SineParams {
  std::vector<double> alphas;
  std::vector<cplx> zs;

  std::size_t size() const { return alphas.size(); }
  double alpha_sum() const;
  cplx z_sum() const;
  void validate() const;
  SineParams factor(std::size_t k) const;  // single-factor sub-problem
};

// Exponential family adds weights omega_k with |omega_k| <= 1.
struct ExpParams {
  std::vector<double> alphas;
  std::vector<cplx> zs;
  std::vector<cplx> omegas;

  std::size_t size() const { return alphas.size(); }
  double alpha_sum() const;
  cplx z_sum() const;
  void validate() const;
  ExpParams factor(std::size_t k) const;
};

// Handling of the constant c_1(alpha), which has no closed form. numeric
// mode resolves it through extract_laurent_coeffs (cached per alpha);
// omit mode drops it, leaving results well defined only modulo a constant,
// which downstream code flags.
class C1Mode {
 public:
  static C1Mode omit();
  // Resolve against a table bound now ...
  static C1Mode numeric(const ZeroTable& table);
  // ... or against whatever table the call site carries.
  static C1Mode numeric();

  bool is_omit() const { return omit_; }
  // c_1(alpha); call_table is used when no table was bound at construction.
  // Throws std::logic_error when numeric mode has no table either way.
  cplx c1(double alpha, const ZeroTable* call_table = nullptr) const;

 private:
  bool omit_ = true;
  const ZeroTable* table_ = nullptr;
  // cache lives behind a shared_ptr so C1Mode stays copyable
  std::shared_ptr<std::vector<std::pair<double, cplx>>> cache_;
};

inline cplx log_minus_2i() { return {0.6931471805599453094, -1.5707963267948966192}; }

// F and F~ above. sign_c0 must be +1 or -1 (std::invalid_argument). These
// are formal polynomials in z: only alpha_k > 0 and finiteness are checked
// here, so they can be probed at points (A = 0 roots, central differences)
// outside the half-plane where the products converge.
cplx poly_F(const SineParams& params, int sign_c0, const C1Mode& c1_mode,
            const ZeroTable* table = nullptr);
cplx poly_F_tilde(const ExpParams& params, int sign_c0, const C1Mode& c1_mode,
                  const ZeroTable* table = nullptr);

// Quadratic/linear coefficients of the earlier single-factor statement
// S_alpha(x) = e^{-(A_alpha x^2 + B_alpha x + C_alpha)} (...)_zeta:
//   A_alpha = alpha (gamma + log 2 pi alpha) / (4 pi)
//   B_alpha = ((gamma + log 2 pi alpha)/(2 pi i)) (i alpha/2 + log(-2i)) + 7 i alpha / 8
// Their relation to poly_F is sign-sensitive; see the adjudication checks.
struct KwCoefficients {
  cplx a_alpha;
  cplx b_alpha;
};
KwCoefficients kw_coefficients(double alpha);

// f(k) = sum_{m>=1} V(2 i m alpha_k) e^{-2 i m z_k} / m, truncated at
// m_trunc terms (0 = adaptive: geometric tail pushed below 1e-12).
// Identity exp(-f(k)) = prod_rho (1 - e^{2i(alpha_k rho - z_k)}) gives the
// product route below; the two agree within combined tail bounds.
BoundedValue f_series(const ZeroTable& table, double alpha_k, cplx z_k,
                      int m_trunc = 0);
BoundedValue f_product(const ZeroTable& table, double alpha_k, cplx z_k);

// Exponential-family analogue: f~(k) = sum_m omega_k^m e^{-i m z_k} V(i m alpha_k)/m.
BoundedValue f_tilde_series(const ZeroTable& table, double alpha_k, cplx z_k,
                            cplx omega_k, int m_trunc = 0);
BoundedValue f_tilde_product(const ZeroTable& table, double alpha_k, cplx z_k,
                             cplx omega_k);

// Assembly route for the regularized products: from the Pochhammer factors
// or from e^{-F - sum_k f(k)}; both must agree within bounds.
enum class Assembly { pochhammer, exp_f };

struct RegProduct {
  cplx value{0.0, 0.0};
  double tail_bound = 0.0;
  bool c1_omitted = false;  // omit-mode: value defined modulo e^{-c_1 terms}
};

RegProduct s_sine(const ZeroTable& table, const SineParams& params, int sign_c0,
                  const C1Mode& c1_mode, Assembly route = Assembly::pochhammer);
RegProduct s_exp(const ZeroTable& table, const ExpParams& params, int sign_c0,
                 const C1Mode& c1_mode, Assembly route = Assembly::pochhammer);

// Multiplicative anomaly of the linear terms: sum_k LT(factor k) - LT(combined).
// The f(k) parts cancel exactly, so this reduces to polynomial arithmetic in
// the per-factor and combined F values, which the report keeps verbatim
// (discrepancy is literally sum(per_factor) - combined of the stored fields).
struct DiscrepancyReport {
  std::vector<cplx> per_factor;
  cplx combined{0.0, 0.0};
  cplx discrepancy{0.0, 0.0};
  bool c1_omitted = false;  // n >= 2 in omit mode: constant-ambiguous
  std::string note;
};

DiscrepancyReport discrepancy_sine(const ZeroTable& table, const SineParams& params,
                                   int sign_c0, const C1Mode& c1_mode);
DiscrepancyReport discrepancy_exp(const ZeroTable& table, const ExpParams& params,
                                  int sign_c0, const C1Mode& c1_mode);

// Direct evaluation of L(s) = sum_rho prod_k sin(alpha_k rho - z_k)^{-s}
// at real s > 0. The branch is the factorized convention
//   sin(w)^{-s} := (-2i)^s e^{isw} (1 - e^{2iw})^{-s}
// with principal logs of (-2i) and (1 - e^{2iw}); this differs from the
// principal log of sin(w) itself at parameters where arg sin wraps, and is
// the normative choice here.
BoundedValue l_direct(const ZeroTable& table, const SineParams& params, double s);

// L~(s) = sum_rho prod_k (e^{-i(alpha_k rho - z_k)} - omega_k)^{-s}, branch
//   (...)^{-s} := e^{is(alpha_k rho - z_k)} (1 - omega_k e^{i(alpha_k rho - z_k)})^{-s}.
BoundedValue l_tilde_direct(const ZeroTable& table, const ExpParams& params, double s);

// Linear-term extraction: Phi = lim_{s->0+} D(s)/s by Richardson
// extrapolation on a ratio-2 geometric grid, where
//   sine: D(s) = e^{-s A'} L(s)  - V(i alpha s),  A' = -iz + n log(-2i)
//   exp:  D(s) = e^{ i s z} L~(s) - V(i alpha s)
// Evaluated zero-by-zero in the cancellation-free paired form
//   D(s) = sum_rho e^{i alpha s rho} expm1(-s sum_k log1p(-u_k(rho))),
// which is the same number in exact arithmetic (the branch prefactors
// cancel identically) but does not lose the O(s * f) signal to roundoff;
// it also makes the all-omega-zero case vanish identically. Phi converges
// to sum_k f(k) (resp. sum_k f~(k)).
struct LtResult {
  cplx phi{0.0, 0.0};             // extrapolated limit
  double extrap_error = 0.0;      // size of the last Richardson correction
  std::vector<cplx> d_over_s;     // raw D(s_j)/s_j per grid point
  bool converged = false;         // corrections shrank monotonically
};

// Grid requirements (std::domain_error otherwise): >= 3 points, strictly
// decreasing with ratio 1/2, and alpha_sum * s_min * tau_max >= 35
// ("insufficient truncation range" when the table is too short).
LtResult lt_extract(const ZeroTable& table, const SineParams& params,
                    const std::vector<double>& s_grid);
LtResult lt_extract(const ZeroTable& table, const ExpParams& params,
                    const std::vector<double>& s_grid);

// Default 5-point ratio-2 grid obeying the requirements for this table.
std::vector<double> lt_default_grid(const ZeroTable& table, double alpha_sum);

}  // namespace zetareg

#endif  // ZETAREG_REGPROD_HPP
