#include "zetareg/regprod.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "zetareg/cramer.hpp"
#include "zetareg/pochhammer.hpp"

namespace zetareg {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

void check_common(const std::vector<double>& alphas, const std::vector<cplx>& zs,
                  std::size_t n) {
  if (n == 0) throw std::invalid_argument("params: empty factor list");
  if (alphas.size() != n || zs.size() != n)
    throw std::invalid_argument("params: list lengths differ");
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(alphas[k]) || !(alphas[k] > 0.0))
      throw std::invalid_argument("params: alpha_k must be positive");
    const cplx z = zs[k];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw std::invalid_argument("params: z_k must be finite");
    if (!(z.real() >= 0.0) || !(z.real() < 2.0 * kPi))
      throw std::invalid_argument("params: Re(z_k) must lie in [0, 2 pi)");
    if (!(z.imag() <= 0.0))
      throw std::invalid_argument("params: Im(z_k) must be <= 0");
  }
}

double sum_alphas(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v;
  return s;
}

cplx sum_zs(const std::vector<cplx>& zs) {
  cplx s{0.0, 0.0};
  for (const cplx& z : zs) s += z;
  return s;
}

int check_sign(int sign_c0) {
  if (sign_c0 != 1 && sign_c0 != -1)
    throw std::invalid_argument("sign_c0 must be +1 or -1");
  return sign_c0;
}

// The F polynomials are formal in z (tests evaluate them at points like the
// A = 0 root that lie outside the product half-plane), so they only need the
// lists consistent and alpha positive.
void check_poly_domain(const std::vector<double>& alphas,
                       const std::vector<cplx>& zs, std::size_t n) {
  if (n == 0) throw std::invalid_argument("params: empty factor list");
  if (alphas.size() != n || zs.size() != n)
    throw std::invalid_argument("params: list lengths differ");
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(alphas[k]) || !(alphas[k] > 0.0))
      throw std::invalid_argument("params: alpha_k must be positive");
    if (!std::isfinite(zs[k].real()) || !std::isfinite(zs[k].imag()))
      throw std::invalid_argument("params: z_k must be finite");
  }
}
}  // namespace

double SineParams::alpha_sum() const { return sum_alphas(alphas); }
cplx SineParams::z_sum() const { return sum_zs(zs); }
void SineParams::validate() const { check_common(alphas, zs, size()); }
SineParams SineParams::factor(std::size_t k) const {
  return SineParams{{alphas.at(k)}, {zs.at(k)}};
}

double ExpParams::alpha_sum() const { return sum_alphas(alphas); }
cplx ExpParams::z_sum() const { return sum_zs(zs); }
void ExpParams::validate() const {
  check_common(alphas, zs, size());
  if (omegas.size() != size())
    throw std::invalid_argument("params: list lengths differ");
  for (const cplx& w : omegas) {
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) ||
        !(std::abs(w) <= 1.0))
      throw std::invalid_argument("params: |omega_k| must be <= 1");
  }
}
ExpParams ExpParams::factor(std::size_t k) const {
  return ExpParams{{alphas.at(k)}, {zs.at(k)}, {omegas.at(k)}};
}

// ---------------------------------------------------------------------------
// c_1 resolution

C1Mode C1Mode::omit() { return C1Mode{}; }

C1Mode C1Mode::numeric(const ZeroTable& table) {
  C1Mode m;
  m.omit_ = false;
  m.table_ = &table;
  m.cache_ = std::make_shared<std::vector<std::pair<double, cplx>>>();
  return m;
}

C1Mode C1Mode::numeric() {
  C1Mode m;
  m.omit_ = false;
  m.cache_ = std::make_shared<std::vector<std::pair<double, cplx>>>();
  return m;
}

cplx C1Mode::c1(double alpha, const ZeroTable* call_table) const {
  if (omit_) return {0.0, 0.0};
  const ZeroTable* t = table_ != nullptr ? table_ : call_table;
  if (t == nullptr)
    throw std::logic_error("C1Mode: numeric mode needs a zero table");
  for (const auto& [a, v] : *cache_)
    if (a == alpha) return v;
  const cplx v = extract_laurent_coeffs(*t, alpha).c1;
  cache_->emplace_back(alpha, v);
  return v;
}

// ---------------------------------------------------------------------------
// linear-term polynomials

cplx poly_F(const SineParams& params, int sign_c0, const C1Mode& c1_mode,
            const ZeroTable* table) {
  check_poly_domain(params.alphas, params.zs, params.size());
  check_sign(sign_c0);
  const double alpha = params.alpha_sum();
  const cplx z = params.z_sum();
  const double n = static_cast<double>(params.size());
  const cplx a_lin = n * log_minus_2i() - kI * z + kI * (alpha / 2.0);
  const double g = kEulerGamma + std::log(2.0 * kPi * alpha);
  return -(g / (4.0 * kPi * alpha)) * a_lin * a_lin +
         (static_cast<double>(sign_c0) * 0.875) * a_lin +
         c1_mode.c1(alpha, table);
}

cplx poly_F_tilde(const ExpParams& params, int sign_c0, const C1Mode& c1_mode,
                  const ZeroTable* table) {
  check_poly_domain(params.alphas, params.zs, params.size());
  if (params.omegas.size() != params.size())
    throw std::invalid_argument("params: list lengths differ");
  check_sign(sign_c0);
  const double alpha = params.alpha_sum();
  const cplx z = params.z_sum();
  const cplx a_lin = kI * (alpha / 2.0) - kI * z;
  const double g = kEulerGamma + std::log(2.0 * kPi * alpha);
  return -(g / (4.0 * kPi * alpha)) * a_lin * a_lin +
         (static_cast<double>(sign_c0) * 0.875) * a_lin +
         c1_mode.c1(alpha, table);
}

KwCoefficients kw_coefficients(double alpha) {
  if (!(alpha > 0.0))
    throw std::domain_error("kw_coefficients: requires alpha > 0");
  const double g = kEulerGamma + std::log(2.0 * kPi * alpha);
  KwCoefficients out;
  out.a_alpha = cplx{alpha * g / (4.0 * kPi), 0.0};
  // 1/(2 pi i) = -i/(2 pi)
  out.b_alpha = (-kI * g / (2.0 * kPi)) * (kI * (alpha / 2.0) + log_minus_2i()) +
                kI * (7.0 * alpha / 8.0);
  return out;
}

// ---------------------------------------------------------------------------
// f(k) and f~(k): series route and product route

namespace {

struct SeriesTerms {
  // |V(i m beta)| <= s_hat * q^{m-1}; |weight^m| = w^m
  double s_hat;  // bound on sum_n e^{-beta tau_n}, value plus tail
  double q;      // e^{-beta tau_1}
  double w;      // per-m weight magnitude
};

double m_tail_bound(const SeriesTerms& st, int m_trunc) {
  const double r = st.w * st.q;
  if (r <= 0.0) return 0.0;
  if (!(r < 1.0))
    throw std::domain_error("f_series: divergent weight, needs |r| < 1");
  return (st.s_hat / st.q) * std::pow(r, m_trunc + 1) /
         ((m_trunc + 1) * (1.0 - r));
}

int adaptive_m(const SeriesTerms& st) {
  for (int m = 1; m <= 512; ++m)
    if (m_tail_bound(st, m) < 1e-12) return m;
  return 512;
}

}  // namespace

BoundedValue f_series(const ZeroTable& table, double alpha_k, cplx z_k,
                      int m_trunc) {
  if (!(alpha_k > 0.0)) throw std::domain_error("f_series: alpha_k must be > 0");
  if (table.empty()) throw std::domain_error("f_series: empty table");
  const BoundedValue s1 = exp_sum(table, cplx{2.0 * alpha_k, 0.0});
  SeriesTerms st;
  st.s_hat = std::abs(s1.value) + s1.tail_bound;
  st.q = std::exp(-2.0 * alpha_k * table.front());
  st.w = std::exp(2.0 * z_k.imag());
  if (m_trunc <= 0) m_trunc = adaptive_m(st);

  KbnSumC acc;
  KbnSum tails;
  for (int m = 1; m <= m_trunc; ++m) {
    const BoundedValue v = v_func(table, cplx{0.0, 2.0 * m * alpha_k});
    const cplx weight = std::exp(-2.0 * kI * static_cast<double>(m) * z_k) /
                        static_cast<double>(m);
    acc.add(v.value * weight);
    tails.add(v.tail_bound * std::abs(weight));
  }
  return {acc.value(), tails.value() + m_tail_bound(st, m_trunc)};
}

BoundedValue f_product(const ZeroTable& table, double alpha_k, cplx z_k) {
  if (!(alpha_k > 0.0))
    throw std::domain_error("f_product: alpha_k must be > 0");
  // exp(-f) = prod (1 - e^{2i(alpha rho - z)}): c = e^{i(alpha - 2z)}, a = 2 alpha
  const cplx c = std::exp(kI * (alpha_k - 2.0 * z_k));
  const BoundedValue ls = log_one_minus_sum(table, c, 2.0 * alpha_k);
  return {-ls.value, ls.tail_bound};
}

BoundedValue f_tilde_series(const ZeroTable& table, double alpha_k, cplx z_k,
                            cplx omega_k, int m_trunc) {
  if (!(alpha_k > 0.0))
    throw std::domain_error("f_tilde_series: alpha_k must be > 0");
  if (table.empty()) throw std::domain_error("f_tilde_series: empty table");
  const BoundedValue s1 = exp_sum(table, cplx{alpha_k, 0.0});
  SeriesTerms st;
  st.s_hat = std::abs(s1.value) + s1.tail_bound;
  st.q = std::exp(-alpha_k * table.front());
  st.w = std::abs(omega_k) * std::exp(z_k.imag());
  if (m_trunc <= 0) m_trunc = adaptive_m(st);

  KbnSumC acc;
  KbnSum tails;
  cplx omega_pow{1.0, 0.0};
  for (int m = 1; m <= m_trunc; ++m) {
    omega_pow *= omega_k;
    const BoundedValue v = v_func(table, cplx{0.0, m * alpha_k});
    const cplx weight = omega_pow *
                        std::exp(-kI * static_cast<double>(m) * z_k) /
                        static_cast<double>(m);
    acc.add(v.value * weight);
    tails.add(v.tail_bound * std::abs(weight));
  }
  return {acc.value(), tails.value() + m_tail_bound(st, m_trunc)};
}

BoundedValue f_tilde_product(const ZeroTable& table, double alpha_k, cplx z_k,
                             cplx omega_k) {
  if (!(alpha_k > 0.0))
    throw std::domain_error("f_tilde_product: alpha_k must be > 0");
  // c = omega e^{i(alpha/2 - z)}, a = alpha
  const cplx c = omega_k * std::exp(kI * (alpha_k / 2.0 - z_k));
  const BoundedValue ls = log_one_minus_sum(table, c, alpha_k);
  return {-ls.value, ls.tail_bound};
}

// ---------------------------------------------------------------------------
// assembled products

namespace {

// combine per-factor relative bounds eps_k into prod(1+eps_k) - 1
double combine_relative(const std::vector<double>& eps) {
  double log_acc = 0.0;
  for (double e : eps) log_acc += std::log1p(e);
  return std::expm1(log_acc);
}

}  // namespace

RegProduct s_sine(const ZeroTable& table, const SineParams& params, int sign_c0,
                  const C1Mode& c1_mode, Assembly route) {
  params.validate();
  const cplx f_poly = poly_F(params, sign_c0, c1_mode, &table);
  RegProduct out;
  out.c1_omitted = c1_mode.is_omit();
  if (route == Assembly::pochhammer) {
    cplx value = std::exp(-f_poly);
    std::vector<double> eps;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const BoundedValue p = zeta_pochhammer(
          table, {std::exp(-2.0 * kI * params.zs[k]), 2.0 * params.alphas[k]});
      value *= p.value;
      eps.push_back(p.tail_bound / std::abs(p.value));
    }
    out.value = value;
    out.tail_bound = std::abs(value) * combine_relative(eps);
  } else {
    cplx f_total = f_poly;
    double log_tails = 0.0;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const BoundedValue f = f_product(table, params.alphas[k], params.zs[k]);
      f_total += f.value;
      log_tails += f.tail_bound;
    }
    out.value = std::exp(-f_total);
    out.tail_bound = std::abs(out.value) * std::expm1(log_tails);
  }
  return out;
}

RegProduct s_exp(const ZeroTable& table, const ExpParams& params, int sign_c0,
                 const C1Mode& c1_mode, Assembly route) {
  params.validate();
  const cplx f_poly = poly_F_tilde(params, sign_c0, c1_mode, &table);
  RegProduct out;
  out.c1_omitted = c1_mode.is_omit();
  if (route == Assembly::pochhammer) {
    cplx value = std::exp(-f_poly);
    std::vector<double> eps;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const BoundedValue p = zeta_pochhammer(
          table, {params.omegas[k] * std::exp(-kI * params.zs[k]),
                  params.alphas[k]});
      value *= p.value;
      eps.push_back(p.tail_bound / std::abs(p.value));
    }
    out.value = value;
    out.tail_bound = std::abs(value) * combine_relative(eps);
  } else {
    cplx f_total = f_poly;
    double log_tails = 0.0;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const BoundedValue f = f_tilde_product(table, params.alphas[k],
                                             params.zs[k], params.omegas[k]);
      f_total += f.value;
      log_tails += f.tail_bound;
    }
    out.value = std::exp(-f_total);
    out.tail_bound = std::abs(out.value) * std::expm1(log_tails);
  }
  return out;
}

// ---------------------------------------------------------------------------
// discrepancies (linear-term anomaly); the f(k) parts cancel identically

namespace {

template <typename Params, typename PolyFn>
DiscrepancyReport discrepancy_impl(const ZeroTable& table, const Params& params,
                                   int sign_c0, const C1Mode& c1_mode,
                                   PolyFn&& poly) {
  params.validate();
  DiscrepancyReport rep;
  rep.combined = poly(params, sign_c0, c1_mode, &table);
  for (std::size_t k = 0; k < params.size(); ++k)
    rep.per_factor.push_back(poly(params.factor(k), sign_c0, c1_mode, &table));
  cplx sum{0.0, 0.0};
  for (const cplx& v : rep.per_factor) sum += v;
  rep.discrepancy = sum - rep.combined;
  if (c1_mode.is_omit() && params.size() >= 2) {
    rep.c1_omitted = true;
    rep.note = "constant-ambiguous: c1(alpha) terms omitted";
  }
  return rep;
}

}  // namespace

DiscrepancyReport discrepancy_sine(const ZeroTable& table,
                                   const SineParams& params, int sign_c0,
                                   const C1Mode& c1_mode) {
  return discrepancy_impl(table, params, sign_c0, c1_mode,
                          [](const SineParams& p, int s, const C1Mode& m,
                             const ZeroTable* t) { return poly_F(p, s, m, t); });
}

DiscrepancyReport discrepancy_exp(const ZeroTable& table,
                                  const ExpParams& params, int sign_c0,
                                  const C1Mode& c1_mode) {
  return discrepancy_impl(
      table, params, sign_c0, c1_mode,
      [](const ExpParams& p, int s, const C1Mode& m, const ZeroTable* t) {
        return poly_F_tilde(p, s, m, t);
      });
}

// ---------------------------------------------------------------------------
// direct L-series and the linear-term limit

namespace {

// log of the product over factors at one zero: g(tau) = sum_k log1p(-u_k)
cplx sine_g(const SineParams& p, double tau) {
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < p.size(); ++k) {
    // u_k = e^{2i(alpha_k rho - z_k)}, rho = 1/2 + i tau
    const cplx u = std::exp(cplx{2.0 * p.zs[k].imag() - 2.0 * p.alphas[k] * tau,
                                 p.alphas[k] - 2.0 * p.zs[k].real()});
    acc += log1p_cplx(-u);
  }
  return acc;
}

cplx exp_g(const ExpParams& p, double tau) {
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < p.size(); ++k) {
    // u_k = omega_k e^{i(alpha_k rho - z_k)}
    const cplx u = p.omegas[k] *
                   std::exp(cplx{p.zs[k].imag() - p.alphas[k] * tau,
                                 p.alphas[k] / 2.0 - p.zs[k].real()});
    acc += log1p_cplx(-u);
  }
  return acc;
}

// sum_rho e^{i alpha s rho} e^{-s g(tau)}; weight e^{i alpha s rho} has
// real exponent -alpha s tau and phase alpha s / 2.
template <typename GFn>
cplx weighted_product_sum(const ZeroTable& table, double alpha, double s,
                          GFn&& g) {
  KbnSumC acc;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const double tau = table[i];
    acc.add(std::exp(cplx{-s * alpha * tau, s * alpha / 2.0} - s * g(tau)));
  }
  return acc.value();
}

void check_lt_grid(const ZeroTable& table, double alpha,
                   const std::vector<double>& grid) {
  if (grid.size() < 3)
    throw std::domain_error("lt_extract: grid needs >= 3 points");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0))
      throw std::domain_error("lt_extract: grid points must be positive");
    if (i > 0 && std::abs(grid[i] / grid[i - 1] - 0.5) > 1e-9)
      throw std::domain_error("lt_extract: grid must halve at each step");
  }
  if (table.empty() ||
      !(alpha * grid.back() * table.back() >= 35.0 * (1.0 - 1e-12)))
    throw std::domain_error("lt_extract: insufficient truncation range");
}

template <typename GFn>
LtResult lt_impl(const ZeroTable& table, double alpha,
                 const std::vector<double>& grid, GFn&& g) {
  LtResult out;
  // D(s)/s in the paired per-zero form; expm1 keeps the O(s f) signal
  for (const double s : grid) {
    KbnSumC acc;
    for (std::size_t i = 0; i < table.size(); ++i) {
      const double tau = table[i];
      const cplx gi = g(tau);
      acc.add(std::exp(cplx{-s * alpha * tau, s * alpha / 2.0}) *
              expm1_cplx(-s * gi));
    }
    out.d_over_s.push_back(acc.value() / s);
  }
  // Richardson on the halving grid: T[j][m] kills the s^m error term
  std::vector<cplx> prev = out.d_over_s;
  std::vector<cplx> diag{prev.front()};
  for (std::size_t m = 1; m < prev.size(); ++m) {
    std::vector<cplx> next(prev.size() - 1);
    const double w = std::pow(2.0, static_cast<double>(m));
    for (std::size_t j = 0; j < next.size(); ++j)
      next[j] = (w * prev[j + 1] - prev[j]) / (w - 1.0);
    diag.push_back(next.back());
    prev = std::move(next);
  }
  out.phi = diag.back();
  const std::size_t levels = diag.size();
  if (levels >= 2) {
    out.extrap_error = std::abs(diag[levels - 1] - diag[levels - 2]);
    const double first = std::abs(diag[1] - diag[0]);
    out.converged = out.extrap_error <= first ||
                    out.extrap_error <= 1e-10 * (1.0 + std::abs(out.phi));
  } else {
    out.converged = true;
  }
  return out;
}

}  // namespace

BoundedValue l_direct(const ZeroTable& table, const SineParams& params,
                      double s) {
  params.validate();
  if (!(s > 0.0)) throw std::domain_error("l_direct: requires s > 0");
  const double alpha = params.alpha_sum();
  const cplx pref =
      std::exp(static_cast<double>(params.size()) * s * log_minus_2i() -
               kI * s * params.z_sum());
  const cplx sum = weighted_product_sum(
      table, alpha, s, [&](double tau) { return sine_g(params, tau); });
  // termwise |(1-u_k)^{-s}| <= (1-|u_k|max)^{-s}
  double log_margin = 0.0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double umax = std::exp(2.0 * params.zs[k].imag() -
                                 2.0 * params.alphas[k] * table.front());
    log_margin -= s * std::log1p(-umax);
  }
  const double tail = std::abs(pref) * std::exp(log_margin) *
                      density_tail(s * alpha, table.back());
  return {pref * sum, tail};
}

BoundedValue l_tilde_direct(const ZeroTable& table, const ExpParams& params,
                            double s) {
  params.validate();
  if (!(s > 0.0)) throw std::domain_error("l_tilde_direct: requires s > 0");
  const double alpha = params.alpha_sum();
  const cplx pref = std::exp(-kI * s * params.z_sum());
  const cplx sum = weighted_product_sum(
      table, alpha, s, [&](double tau) { return exp_g(params, tau); });
  double log_margin = 0.0;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double umax = std::abs(params.omegas[k]) *
                        std::exp(params.zs[k].imag() -
                                 params.alphas[k] * table.front());
    log_margin -= s * std::log1p(-umax);
  }
  const double tail = std::abs(pref) * std::exp(log_margin) *
                      density_tail(s * alpha, table.back());
  return {pref * sum, tail};
}

LtResult lt_extract(const ZeroTable& table, const SineParams& params,
                    const std::vector<double>& s_grid) {
  params.validate();
  check_lt_grid(table, params.alpha_sum(), s_grid);
  return lt_impl(table, params.alpha_sum(), s_grid,
                 [&](double tau) { return sine_g(params, tau); });
}

LtResult lt_extract(const ZeroTable& table, const ExpParams& params,
                    const std::vector<double>& s_grid) {
  params.validate();
  check_lt_grid(table, params.alpha_sum(), s_grid);
  return lt_impl(table, params.alpha_sum(), s_grid,
                 [&](double tau) { return exp_g(params, tau); });
}

std::vector<double> lt_default_grid(const ZeroTable& table, double alpha_sum) {
  if (table.empty() || !(alpha_sum > 0.0))
    throw std::domain_error("lt_default_grid: empty table or alpha <= 0");
  const double s_min_floor = 35.2 / (alpha_sum * table.back());
  const double s0 = std::max(0.02 / alpha_sum, s_min_floor * 16.0);
  // Richardson extrapolation needs alpha*s0 well inside the first zero's
  // scale; a short table forces s0 up until the expansion stops converging
  if (alpha_sum * s0 * table.front() > 1.2)
    throw std::domain_error("lt_default_grid: insufficient truncation range");
  std::vector<double> grid(5);
  for (int j = 0; j < 5; ++j) grid[j] = s0 / static_cast<double>(1 << j);
  return grid;
}

}  // namespace zetareg
