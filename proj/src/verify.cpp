#include "zetareg/verify.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include "zetareg/cramer.hpp"
#include "zetareg/summation.hpp"

namespace zetareg {

namespace {
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt(cplx v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "(%.9g, %.9g)", v.real(), v.imag());
  return buf;
}

// deterministic uniforms in [0,1); raw mt19937 words so the stream does not
// depend on the library's distribution implementation
struct Sampler {
  std::mt19937 gen;
  explicit Sampler(unsigned seed) : gen(seed) {}
  double uni() { return gen() * (1.0 / 4294967296.0); }
  double uni(double lo, double hi) { return lo + (hi - lo) * uni(); }
};

struct SuiteCtx {
  const ZeroTable& table;
  const ToleranceProfile& prof;
  VerificationReport& rep;
  bool table_ok = true;
  std::vector<std::pair<double, LaurentCoeffs>> laurent_cache;

  SuiteCtx(const ZeroTable& t, const ToleranceProfile& p, VerificationReport& r)
      : table(t), prof(p), rep(r) {}

  const LaurentCoeffs& laurent_at(double alpha) {
    for (const auto& [a, lc] : laurent_cache)
      if (a == alpha) return lc;
    laurent_cache.emplace_back(alpha, extract_laurent_coeffs(table, alpha));
    return laurent_cache.back().second;
  }

  void run(const std::string& name,
           const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = name;
    if (!table_ok) {
      r.status = "flagged";
      r.details = "skipped: table validation failed";
      rep.checks.push_back(std::move(r));
      return;
    }
    try {
      body(r);
    } catch (const std::exception& e) {
      r.status = "flagged";
      r.details = e.what();
    }
    rep.checks.push_back(std::move(r));
  }
};

void set_status(CheckResult& r, double measured, double bound) {
  r.measured = measured;
  r.bound = bound;
  r.status = measured <= bound ? "pass" : "fail";
}

cplx a_single(double alpha, cplx z) {
  return log_minus_2i() - kI * z + kI * (alpha / 2.0);
}

}  // namespace

ToleranceProfile ToleranceProfile::default_profile() { return {}; }

ToleranceProfile ToleranceProfile::strict() {
  ToleranceProfile p;
  p.name = "strict";
  p.laurent_c_minus1_rel = 2e-5;
  p.laurent_c0_abs = 2e-4;
  p.holo_slope_max = 0.025;
  p.lt_match_rel = 2e-4;
  p.orderswap_bound_max = 2e-11;
  p.assembly_rel = 5e-13;
  p.crossfam_rel = 5e-13;
  p.sign_tol = 2e-4;
  p.discrepancy_check_rel = 1e-3;
  return p;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

VerificationReport run_verify_suite(const ZeroTable& table,
                                    const ToleranceProfile& profile) {
  VerificationReport rep;
  rep.profile = profile.name;
  rep.table_source = table.source();
  rep.table_size = table.size();
  SuiteCtx ctx{table, profile, rep};

  // 1. table validation; a hard failure poisons everything downstream
  ctx.run("table-validation", [&](CheckResult& r) {
    const ValidationReport v = validate(table);
    r.measured = v.max_counting_deviation;
    r.bound = 2.0;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "monotone=%s first_zero=%s duplicates=%zu",
                  v.monotone_ok ? "yes" : "no", v.first_zero_ok ? "yes" : "no",
                  v.duplicate_count);
    r.details = buf;
    r.status = v.passed() ? "pass" : "fail";
    if (!v.passed()) ctx.table_ok = false;
  });

  // 2. Cramer remainder stays bounded into the origin along a ray
  ctx.run("cramer-remainder-holomorphy", [&](CheckResult& r) {
    const std::vector<double> radii{1.0, 0.5, 0.25, 0.125, 0.0625, 0.05};
    const auto samples = remainder_ray_scan(table, kPi / 4.0, radii);
    const double slope = ray_scan_slope(samples);
    set_status(r, std::abs(slope), profile.holo_slope_max);
    r.details = "slope=" + fmt(slope) +
                " |R(1)|=" + fmt(std::abs(samples.front().remainder)) +
                " |R(0.05)|=" + fmt(std::abs(samples.back().remainder));
  });

  // 3. Laurent coefficient recovery against the closed forms
  for (const double alpha : {0.5, 1.0, 2.0}) {
    ctx.run("laurent-cminus1-a" + fmt(alpha), [&, alpha](CheckResult& r) {
      const LaurentCoeffs& lc = ctx.laurent_at(alpha);
      const double closed =
          -(kEulerGamma + std::log(2.0 * kPi * alpha)) / (2.0 * kPi * alpha);
      const double rel = std::abs(lc.c_minus1 - cplx{closed, 0.0}) /
                         std::abs(closed);
      set_status(r, rel, profile.laurent_c_minus1_rel);
      r.details =
          "fit=" + fmt(lc.c_minus1) + " closed=" + fmt(closed) +
          " residual=" + fmt(lc.residual_norm);
    });
    ctx.run("laurent-c0-a" + fmt(alpha), [&, alpha](CheckResult& r) {
      const LaurentCoeffs& lc = ctx.laurent_at(alpha);
      set_status(r, std::abs(lc.c0 - cplx{0.875, 0.0}),
                 profile.laurent_c0_abs);
      r.details = "fit=" + fmt(lc.c0) + " expected=0.875";
      rep.c1_table.emplace_back(alpha, lc.c1);
    });
  }

  // 4. order swap: series-in-m vs product-over-zeros routes
  double worst_bound_sum = 0.0;
  ctx.run("order-swap-sine", [&](CheckResult& r) {
    Sampler smp(0x5eedba5eu);
    double worst_ratio = 0.0, worst_diff = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double alpha = smp.uni(0.05, 3.0);
      const cplx z{smp.uni(0.0, 2.0 * kPi * 0.999), -smp.uni(0.0, 1.0)};
      const BoundedValue a = f_series(table, alpha, z);
      const BoundedValue b = f_product(table, alpha, z);
      const double diff = std::abs(a.value - b.value);
      const double allow = a.tail_bound + b.tail_bound +
                           64.0 * 2.22e-16 * std::max(1.0, std::abs(a.value));
      worst_ratio = std::max(worst_ratio, diff / allow);
      worst_diff = std::max(worst_diff, diff);
      worst_bound_sum = std::max(worst_bound_sum, a.tail_bound + b.tail_bound);
    }
    set_status(r, worst_ratio, 1.0);
    r.details = "worst |series-product|=" + fmt(worst_diff) +
                " (ratio to combined bounds + roundoff allowance)";
  });
  ctx.run("order-swap-exp", [&](CheckResult& r) {
    Sampler smp(0x0ddba11u);
    double worst_ratio = 0.0, worst_diff = 0.0;
    for (int i = 0; i < 20; ++i) {
      const double alpha = smp.uni(0.05, 3.0);
      const cplx z{smp.uni(0.0, 2.0 * kPi * 0.999), -smp.uni(0.0, 1.0)};
      const cplx omega = std::polar(smp.uni(0.0, 1.0), smp.uni(0.0, 2.0 * kPi));
      const BoundedValue a = f_tilde_series(table, alpha, z, omega);
      const BoundedValue b = f_tilde_product(table, alpha, z, omega);
      const double diff = std::abs(a.value - b.value);
      const double allow = a.tail_bound + b.tail_bound +
                           64.0 * 2.22e-16 * std::max(1.0, std::abs(a.value));
      worst_ratio = std::max(worst_ratio, diff / allow);
      worst_diff = std::max(worst_diff, diff);
      worst_bound_sum = std::max(worst_bound_sum, a.tail_bound + b.tail_bound);
    }
    set_status(r, worst_ratio, 1.0);
    r.details = "worst |series-product|=" + fmt(worst_diff) +
                " (ratio to combined bounds + roundoff allowance)";
  });
  ctx.run("order-swap-bounds", [&](CheckResult& r) {
    set_status(r, worst_bound_sum, profile.orderswap_bound_max);
    r.details = "largest combined tail bound across both families";
  });

  // 5. assembly equivalence: Pochhammer route vs exp(-F - sum f)
  ctx.run("assembly-sine", [&](CheckResult& r) {
    const std::vector<SineParams> sets{
        {{1.0}, {cplx{0.3, -0.1}}},
        {{1.0, 2.0}, {cplx{0.3, -0.1}, cplx{1.0, -0.2}}}};
    double worst = 0.0;
    for (const auto& p : sets) {
      const RegProduct a =
          s_sine(table, p, 1, C1Mode::omit(), Assembly::pochhammer);
      const RegProduct b = s_sine(table, p, 1, C1Mode::omit(), Assembly::exp_f);
      worst = std::max(worst, std::abs(a.value - b.value) / std::abs(a.value));
    }
    set_status(r, worst, profile.assembly_rel);
    r.details = "n=1 and n=2 parameter sets, c1 omitted consistently";
  });
  ctx.run("assembly-exp", [&](CheckResult& r) {
    const std::vector<ExpParams> sets{
        {{1.0}, {cplx{0.3, -0.1}}, {cplx{0.5, 0.0}}},
        {{1.0, 2.0},
         {cplx{0.3, -0.1}, cplx{1.0, -0.2}},
         {cplx{0.5, 0.0}, cplx{-0.3, 0.4}}}};
    double worst = 0.0;
    for (const auto& p : sets) {
      const RegProduct a =
          s_exp(table, p, 1, C1Mode::omit(), Assembly::pochhammer);
      const RegProduct b = s_exp(table, p, 1, C1Mode::omit(), Assembly::exp_f);
      worst = std::max(worst, std::abs(a.value - b.value) / std::abs(a.value));
    }
    set_status(r, worst, profile.assembly_rel);
    r.details = "n=1 and n=2 parameter sets, c1 omitted consistently";
  });

  // 6. linear-term extraction vs the closed series, both families
  ctx.run("lt-sine-n1", [&](CheckResult& r) {
    const SineParams p{{1.0}, {cplx{0.3, -0.1}}};
    const LtResult lt =
        lt_extract(table, p, lt_default_grid(table, p.alpha_sum()));
    const BoundedValue ref = f_product(table, 1.0, cplx{0.3, -0.1});
    set_status(r, std::abs(lt.phi - ref.value) / std::abs(ref.value),
               profile.lt_match_rel);
    r.details = "phi=" + fmt(lt.phi) + " ref=" + fmt(ref.value) +
                " extrap_err=" + fmt(lt.extrap_error) +
                (lt.converged ? "" : " NOT-CONVERGED");
  });
  ctx.run("lt-sine-n2", [&](CheckResult& r) {
    const SineParams p{{1.0, 2.0}, {cplx{0.0, 0.0}, cplx{0.5, -0.1}}};
    const LtResult lt =
        lt_extract(table, p, lt_default_grid(table, p.alpha_sum()));
    const cplx ref = f_product(table, 1.0, cplx{0.0, 0.0}).value +
                     f_product(table, 2.0, cplx{0.5, -0.1}).value;
    set_status(r, std::abs(lt.phi - ref) / std::abs(ref),
               profile.lt_match_rel);
    r.details = "phi=" + fmt(lt.phi) + " ref=" + fmt(ref) +
                " extrap_err=" + fmt(lt.extrap_error) +
                (lt.converged ? "" : " NOT-CONVERGED");
  });
  ctx.run("lt-exp-n1", [&](CheckResult& r) {
    const ExpParams p{{1.0}, {cplx{0.3, -0.1}}, {cplx{0.5, 0.0}}};
    const LtResult lt =
        lt_extract(table, p, lt_default_grid(table, p.alpha_sum()));
    const BoundedValue ref =
        f_tilde_product(table, 1.0, cplx{0.3, -0.1}, cplx{0.5, 0.0});
    set_status(r, std::abs(lt.phi - ref.value) / std::abs(ref.value),
               profile.lt_match_rel);
    r.details = "phi=" + fmt(lt.phi) + " ref=" + fmt(ref.value) +
                " extrap_err=" + fmt(lt.extrap_error) +
                (lt.converged ? "" : " NOT-CONVERGED");
  });
  ctx.run("lt-exp-n2", [&](CheckResult& r) {
    const ExpParams p{{1.0, 2.0},
                      {cplx{0.0, 0.0}, cplx{0.5, -0.1}},
                      {cplx{0.7, 0.0}, cplx{-0.4, 0.2}}};
    const LtResult lt =
        lt_extract(table, p, lt_default_grid(table, p.alpha_sum()));
    const cplx ref =
        f_tilde_product(table, 1.0, cplx{0.0, 0.0}, cplx{0.7, 0.0}).value +
        f_tilde_product(table, 2.0, cplx{0.5, -0.1}, cplx{-0.4, 0.2}).value;
    set_status(r, std::abs(lt.phi - ref) / std::abs(ref),
               profile.lt_match_rel);
    r.details = "phi=" + fmt(lt.phi) + " ref=" + fmt(ref) +
                " extrap_err=" + fmt(lt.extrap_error) +
                (lt.converged ? "" : " NOT-CONVERGED");
  });
  ctx.run("lt-exp-omega-zero", [&](CheckResult& r) {
    const ExpParams p{{1.0, 2.0},
                      {cplx{0.3, -0.1}, cplx{1.0, -0.2}},
                      {cplx{0.0, 0.0}, cplx{0.0, 0.0}}};
    const LtResult lt =
        lt_extract(table, p, lt_default_grid(table, p.alpha_sum()));
    double worst = std::abs(lt.phi);
    for (const cplx& d : lt.d_over_s) worst = std::max(worst, std::abs(d));
    r.measured = worst;
    r.bound = 0.0;
    r.status = worst == 0.0 ? "pass" : "fail";
    r.details = "all-zero weights must vanish identically, not approximately";
  });

  // 7. sign adjudication: numeric linear-term differences vs poly_F, both signs
  ctx.run("sign-adjudication", [&](CheckResult& r) {
    struct Pair {
      double alpha;
      cplx za, zb;
    };
    const std::vector<Pair> pairs{{1.0, cplx{0.0, 0.0}, cplx{1.0, 0.0}},
                                  {0.5, cplx{0.3, -0.1}, cplx{1.2, -0.3}},
                                  {2.0, cplx{0.25, 0.0}, cplx{1.5, -0.5}}};
    int winner = 0;
    double worst_winner_err = 0.0;
    double best_loser_err = 1e300;
    std::string detail;
    for (const auto& pr : pairs) {
      const LaurentCoeffs& lc = ctx.laurent_at(pr.alpha);
      const auto nlt = [&](cplx z) {
        const SineParams p{{pr.alpha}, {z}};
        const cplx a = a_single(pr.alpha, z);
        const cplx phi =
            lt_extract(table, p, lt_default_grid(table, pr.alpha)).phi;
        return 0.5 * lc.c_minus1 * a * a + lc.c0 * a + phi;
      };
      const auto poly_side = [&](int sign, cplx z) {
        const SineParams p{{pr.alpha}, {z}};
        return poly_F(p, sign, C1Mode::omit()) +
               f_product(table, pr.alpha, z).value;
      };
      const cplx dnum = nlt(pr.za) - nlt(pr.zb);
      const double err_plus =
          std::abs((poly_side(1, pr.za) - poly_side(1, pr.zb)) - dnum);
      const double err_minus =
          std::abs((poly_side(-1, pr.za) - poly_side(-1, pr.zb)) - dnum);
      const bool plus_ok = err_plus <= profile.sign_tol;
      const bool minus_ok = err_minus <= profile.sign_tol;
      detail += " [alpha=" + fmt(pr.alpha) + " err(+1)=" + fmt(err_plus) +
                " err(-1)=" + fmt(err_minus) + "]";
      if (plus_ok == minus_ok) {
        winner = 0;  // zero or both reconcile: adjudication fails
        worst_winner_err = std::max(err_plus, err_minus);
        break;
      }
      const int this_winner = plus_ok ? 1 : -1;
      if (winner == 0) winner = this_winner;
      if (winner != this_winner) {
        winner = 0;
        break;
      }
      worst_winner_err =
          std::max(worst_winner_err, plus_ok ? err_plus : err_minus);
      best_loser_err = std::min(best_loser_err, plus_ok ? err_minus : err_plus);
    }
    r.measured = worst_winner_err;
    r.bound = profile.sign_tol;
    r.status = winner != 0 ? "pass" : "fail";
    r.details = (winner != 0 ? "winner sign_c0=" + std::string(winner > 0 ? "+1" : "-1") +
                                   " loser off by >= " + fmt(best_loser_err)
                             : std::string("no unique winner")) +
                detail;
    if (winner != 0) rep.adjudicated_sign_c0 = winner;
  });

  // 8. cross-family identity: doubled exp family vs sine family
  ctx.run("cross-family", [&](CheckResult& r) {
    Sampler smp(0xc0ffee11u);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
      const std::size_t n = 1 + (i % 2);
      SineParams p;
      ExpParams q;
      for (std::size_t k = 0; k < n; ++k) {
        const double alpha = smp.uni(0.3, 2.0);
        const cplx z{smp.uni(0.0, 0.95 * kPi), -smp.uni(0.0, 0.5)};
        p.alphas.push_back(alpha);
        p.zs.push_back(z);
        q.alphas.push_back(2.0 * alpha);
        q.zs.push_back(2.0 * z);
        q.omegas.push_back(cplx{1.0, 0.0});
      }
      const cplx lhs = s_sine(table, p, 1, C1Mode::omit()).value *
                       std::exp(poly_F(p, 1, C1Mode::omit()));
      const cplx rhs = s_exp(table, q, 1, C1Mode::omit()).value *
                       std::exp(poly_F_tilde(q, 1, C1Mode::omit()));
      worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    set_status(r, worst, profile.crossfam_rel);
    r.details = "10 sampled parameter sets, n alternating 1/2";
  });

  // 9. single-factor discrepancy must vanish exactly
  ctx.run("discrepancy-n1-zero", [&](CheckResult& r) {
    const SineParams sp{{1.0}, {cplx{0.7, -0.1}}};
    const ExpParams ep{{1.0}, {cplx{0.7, -0.1}}, {cplx{0.5, 0.0}}};
    const cplx d1 = discrepancy_sine(table, sp, 1, C1Mode::omit()).discrepancy;
    const cplx d2 =
        discrepancy_sine(table, sp, 1, C1Mode::numeric(table)).discrepancy;
    const cplx d3 = discrepancy_exp(table, ep, 1, C1Mode::omit()).discrepancy;
    const double worst =
        std::max({std::abs(d1), std::abs(d2), std::abs(d3)});
    r.measured = worst;
    r.bound = 0.0;
    r.status = worst == 0.0 ? "pass" : "fail";
    r.details = "omit and numeric c1 modes, both families";
  });

  return rep;
}

}  // namespace zetareg
