#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetareg/cramer.hpp"
#include "zetareg/regprod.hpp"
#include "zetareg/zero_table.hpp"

using namespace zetareg;

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

const ZeroTable& table_100k() {
  static const ZeroTable t =
      load_zero_table(std::string(ZETAREG_DATA_DIR) + "/zeros_100k.zrt");
  return t;
}

double rel_diff(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

// the quadratic argument of poly_F, rebuilt from its documented definition
cplx a_of(const SineParams& p) {
  return static_cast<double>(p.size()) * log_minus_2i() - kI * p.z_sum() +
         kI * (p.alpha_sum() / 2.0);
}

SineParams sine1(double alpha, cplx z) { return SineParams{{alpha}, {z}}; }

ExpParams exp1(double alpha, cplx z, cplx omega) {
  return ExpParams{{alpha}, {z}, {omega}};
}

}  // namespace

// ---------------------------------------------------------------------------
// parameter validation

TEST_CASE("sine parameter constraints are enforced") {
  const ZeroTable& t = table_100k();
  const cplx ok{0.3, -0.1};
  CHECK_THROWS_AS(SineParams{}.validate(), std::invalid_argument);
  CHECK_THROWS_AS((SineParams{{1.0, 2.0}, {ok}}.validate()),
                  std::invalid_argument);
  CHECK_THROWS_AS(sine1(0.0, ok).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sine1(-1.0, ok).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sine1(1.0, cplx{-0.1, 0.0}).validate(), std::invalid_argument);
  CHECK_THROWS_AS(sine1(1.0, cplx{2.0 * kPi, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_THROWS_WITH(s_sine(t, sine1(1.0, cplx{0.3, 1e-9}), 1, C1Mode::omit()),
                    doctest::Contains("Im(z_k)"));
  CHECK_NOTHROW(sine1(1.0, cplx{0.0, 0.0}).validate());
  CHECK_NOTHROW(sine1(1.0, cplx{6.283, -0.5}).validate());
}

TEST_CASE("exp parameters also constrain the weights") {
  const cplx z{0.3, -0.1};
  CHECK_THROWS_AS((ExpParams{{1.0}, {z}, {}}.validate()), std::invalid_argument);
  CHECK_THROWS_AS(exp1(1.0, z, cplx{1.01, 0.0}).validate(),
                  std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(exp1(1.0, z, cplx{nan, 0.0}).validate(),
                  std::invalid_argument);
  CHECK_NOTHROW(exp1(1.0, z, cplx{1.0, 0.0}).validate());  // |omega| = 1 allowed
  CHECK_NOTHROW(exp1(1.0, z, cplx{0.0, 0.0}).validate());
}

TEST_CASE("factor() slices out single-factor sub-problems") {
  const SineParams p{{1.0, 2.0}, {cplx{0.1, -0.1}, cplx{0.2, -0.2}}};
  CHECK(p.factor(1).alphas == std::vector<double>{2.0});
  CHECK(p.factor(1).zs == std::vector<cplx>{cplx{0.2, -0.2}});
  CHECK_THROWS_AS(p.factor(2), std::out_of_range);
  const ExpParams q{{1.0, 2.0},
                    {cplx{0.1, -0.1}, cplx{0.2, -0.2}},
                    {cplx{0.5, 0.0}, cplx{0.0, 0.9}}};
  CHECK(q.factor(0).omegas == std::vector<cplx>{cplx{0.5, 0.0}});
  CHECK(p.alpha_sum() == 3.0);
  CHECK(p.z_sum() == cplx{0.1, -0.1} + cplx{0.2, -0.2});
}

// ---------------------------------------------------------------------------
// the linear-term polynomials

TEST_CASE("poly_F vanishes at the root of its quadratic argument") {
  // A = 0 at z = -i n log(-2i) + alpha/2; the point sits outside the
  // product half-plane, which the formal domain deliberately allows
  const cplx z1 = -kI * log_minus_2i() + 0.5;
  for (int sign : {1, -1})
    CHECK(std::abs(poly_F(sine1(1.0, z1), sign, C1Mode::omit())) < 1e-14);
  // two factors: only the sums enter, so any split of z works
  const cplx z2 = -2.0 * kI * log_minus_2i() + 0.75;
  const SineParams p{{0.5, 1.0}, {cplx{0.3, 0.0}, z2 - 0.3}};
  CHECK(std::abs(poly_F(p, 1, C1Mode::omit())) < 1e-14);
}

TEST_CASE("poly_F at the reference point matches a from-scratch evaluation") {
  const double g = 0.57721566490153286 + std::log(2.0 * kPi);
  const cplx a0 = cplx{std::log(2.0), -kPi / 2.0} + cplx{0.0, 0.5};
  const cplx expected = -(g / (4.0 * kPi)) * a0 * a0 + 0.875 * a0;
  const cplx got = poly_F(sine1(1.0, cplx{0.0, 0.0}), 1, C1Mode::omit());
  CHECK(std::abs(got - expected) < 1e-15);
}

TEST_CASE("poly_F_tilde is exactly zero at z = alpha/2") {
  const ExpParams p = exp1(0.7, cplx{0.35, 0.0}, cplx{0.2, 0.0});
  CHECK(poly_F_tilde(p, 1, C1Mode::omit()) == cplx{0.0, 0.0});
  CHECK(poly_F_tilde(p, -1, C1Mode::omit()) == cplx{0.0, 0.0});
}

TEST_CASE("F minus F~ is affine in z with the predicted slope") {
  // A and A~ differ by the constant n log(-2i), so the quadratic parts of
  // G(z) = F - F~ cancel down to an affine function whose slope is
  // -(g / 4 pi alpha) * n log(-2i) * (-2i)
  const std::vector<double> alphas{1.0, 0.5};
  const double asum = 1.5;
  const double g = kEulerGamma + std::log(2.0 * kPi * asum);
  const cplx slope_expected =
      -(g / (4.0 * kPi * asum)) * 2.0 * log_minus_2i() * (-2.0 * kI);
  const cplx z2{0.8, -0.4};
  const double h = 0.3;
  std::vector<cplx> gvals;
  for (int j = 0; j < 3; ++j) {
    const cplx z1 = cplx{0.5, -0.2} + static_cast<double>(j) * h;
    const SineParams ps{alphas, {z1, z2}};
    const ExpParams pe{alphas, {z1, z2}, {cplx{0.5, 0.0}, cplx{0.5, 0.0}}};
    gvals.push_back(poly_F(ps, 1, C1Mode::omit()) -
                    poly_F_tilde(pe, 1, C1Mode::omit()));
  }
  CHECK(std::abs(gvals[0] - 2.0 * gvals[1] + gvals[2]) < 1e-13);
  CHECK(std::abs((gvals[1] - gvals[0]) / h - slope_expected) < 1e-12);
}

TEST_CASE("sign argument is validated") {
  const ZeroTable& t = table_100k();
  const SineParams p = sine1(1.0, cplx{0.3, -0.1});
  CHECK_THROWS_AS(poly_F(p, 0, C1Mode::omit()), std::invalid_argument);
  CHECK_THROWS_AS(s_sine(t, p, 2, C1Mode::omit()), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// quadratic/linear coefficients of the single-factor statement

TEST_CASE("kw coefficients match central differences of poly_F") {
  // F(x) := poly_F at z = alpha x is an exact quadratic in x, so central
  // differences with h = 1 have no truncation error at all:
  //   F(1) - 2 F(0) + F(-1) = 2 A_alpha,   (F(1) - F(-1))/2 = F'(0)
  // and F'(0) = -B_alpha picks out the adjudicated sign (+1): the opposite
  // sign misses by 7 alpha / 4, which is what the suite's check leans on.
  for (double alpha : {0.5, 1.0, 2.0}) {
    const KwCoefficients kw = kw_coefficients(alpha);
    auto f_at = [&](double x, int sign) {
      return poly_F(sine1(alpha, cplx{alpha * x, 0.0}), sign, C1Mode::omit());
    };
    const cplx second = f_at(1.0, 1) - 2.0 * f_at(0.0, 1) + f_at(-1.0, 1);
    CHECK(std::abs(second - 2.0 * kw.a_alpha) < 1e-13 * (1.0 + std::abs(second)));
    const cplx d_plus = (f_at(1.0, 1) - f_at(-1.0, 1)) / 2.0;
    CHECK(std::abs(d_plus + kw.b_alpha) < 1e-13);
    const cplx d_minus = (f_at(1.0, -1) - f_at(-1.0, -1)) / 2.0;
    CHECK(std::abs(d_minus + kw.b_alpha) ==
          doctest::Approx(1.75 * alpha).epsilon(1e-12));
  }
}

TEST_CASE("A_alpha is real and changes sign at alpha = e^{-gamma}/(2 pi)") {
  const double a1 = (0.57721566490153286 + std::log(2.0 * kPi)) / (4.0 * kPi);
  CHECK(kw_coefficients(1.0).a_alpha.real() == doctest::Approx(a1).epsilon(1e-15));
  CHECK(kw_coefficients(1.0).a_alpha.imag() == 0.0);
  CHECK(kw_coefficients(0.2).a_alpha.real() > 0.0);
  CHECK(kw_coefficients(0.05).a_alpha.real() < 0.0);  // below e^{-gamma}/(2 pi)
  CHECK_THROWS_AS(kw_coefficients(0.0), std::domain_error);
}

TEST_CASE("c1 resolution modes") {
  const ZeroTable& t = table_100k();
  const SineParams p = sine1(1.0, cplx{0.3, -0.1});
  // numeric mode with no table anywhere has nothing to fit against
  CHECK_THROWS_AS(poly_F(p, 1, C1Mode::numeric()), std::logic_error);
  // bound-at-construction and bound-at-call resolve identically
  const cplx bound = poly_F(p, 1, C1Mode::numeric(t));
  const cplx at_call = poly_F(p, 1, C1Mode::numeric(), &t);
  CHECK(bound == at_call);
  // omit just drops the constant; subtraction recovers it up to the
  // rounding of the one addition that put it in
  const cplx omit = poly_F(p, 1, C1Mode::omit());
  const cplx c1 = extract_laurent_coeffs(t, 1.0).c1;
  CHECK(std::abs(bound - omit - c1) <= 1e-15 * (std::abs(bound) + std::abs(c1)));
}

// ---------------------------------------------------------------------------
// f(k): series route vs product route

TEST_CASE("f series and product routes agree within their bounds") {
  const ZeroTable& t = table_100k();
  struct Case {
    double alpha;
    cplx z;
  };
  for (const Case& c : {Case{1.0, {0.3, -0.1}}, Case{0.5, {2.0, -0.5}},
                        Case{2.0, {6.0, -0.05}}}) {
    const BoundedValue fs = f_series(t, c.alpha, c.z);
    const BoundedValue fp = f_product(t, c.alpha, c.z);
    CHECK(std::abs(fs.value - fp.value) <=
          fs.tail_bound + fp.tail_bound + 1e-15 * std::abs(fp.value));
  }
  for (const cplx omega : {cplx{0.5, 0.0}, cplx{0.0, 0.9}}) {
    const BoundedValue fs = f_tilde_series(t, 0.7, cplx{1.0, -0.3}, omega);
    const BoundedValue fp = f_tilde_product(t, 0.7, cplx{1.0, -0.3}, omega);
    CHECK(std::abs(fs.value - fp.value) <=
          fs.tail_bound + fp.tail_bound + 1e-15 * std::abs(fp.value));
  }
}

TEST_CASE("truncating the m-series is covered by its reported bound") {
  const ZeroTable& t = table_100k();
  // alpha = 0.01 keeps the term ratio at e^{-2 alpha tau_1} ~ 0.75, so the
  // adaptive cutoff genuinely has to work instead of stopping at m = 1
  const BoundedValue f1 = f_series(t, 0.01, cplx{0.0, 0.0}, 1);
  const BoundedValue fa = f_series(t, 0.01, cplx{0.0, 0.0});
  CHECK(std::abs(f1.value - fa.value) <= f1.tail_bound);
  CHECK(fa.tail_bound < f1.tail_bound);
  const BoundedValue fp = f_product(t, 0.01, cplx{0.0, 0.0});
  CHECK(std::abs(fa.value - fp.value) <=
        fa.tail_bound + fp.tail_bound + 1e-15 * std::abs(fp.value));
}

TEST_CASE("pushing z deeper shrinks both the value and the bound") {
  const ZeroTable& t = table_100k();
  const BoundedValue shallow = f_series(t, 1.0, cplx{0.3, -0.1}, 8);
  const BoundedValue deep = f_series(t, 1.0, cplx{0.3, -0.5}, 8);
  CHECK(std::abs(deep.value) < std::abs(shallow.value));
  CHECK(deep.tail_bound < shallow.tail_bound);
}

TEST_CASE("exp(-f) is literally the product of the sine factors") {
  const ZeroTable t = table_100k().prefix(1000);
  const double alpha = 1.0;
  const cplx z{0.3, -0.1};
  cplx prod{1.0, 0.0};
  for (std::size_t k = 0; k < t.size(); ++k)
    prod *= 1.0 - std::exp(cplx{2.0 * z.imag() - 2.0 * alpha * t[k],
                                alpha - 2.0 * z.real()});
  const BoundedValue f = f_product(t, alpha, z);
  CHECK(rel_diff(std::exp(-f.value), prod) < 1e-12);
}

TEST_CASE("f stays finite as Re z approaches 2 pi from below") {
  const ZeroTable& t = table_100k();
  const BoundedValue f = f_product(t, 1.0, cplx{6.283, 0.0});
  CHECK(std::isfinite(f.value.real()));
  CHECK(std::isfinite(f.value.imag()));
  CHECK(std::isfinite(f.tail_bound));
}

TEST_CASE("doubling turns f~ at omega = 1 into f") {
  const ZeroTable& t = table_100k();
  const double alpha = 0.7;
  const cplx z{1.1, -0.3};
  // (2 alpha)/2 and 2z are exact, so the two routes assemble the very same
  // intermediate quantities; this holds bit for bit, not just numerically
  const BoundedValue ftp = f_tilde_product(t, 2.0 * alpha, 2.0 * z, cplx{1.0, 0.0});
  const BoundedValue fp = f_product(t, alpha, z);
  CHECK(ftp.value == fp.value);
  CHECK(ftp.tail_bound == fp.tail_bound);
  const BoundedValue fts = f_tilde_series(t, 2.0 * alpha, 2.0 * z, cplx{1.0, 0.0});
  const BoundedValue fs = f_series(t, alpha, z);
  CHECK(fts.value == fs.value);
  CHECK(fts.tail_bound == fs.tail_bound);
}

// ---------------------------------------------------------------------------
// assembled products

TEST_CASE("both assembly routes produce the same regularized product") {
  const ZeroTable& t = table_100k();
  const SineParams p1 = sine1(1.0, cplx{0.3, -0.1});
  const SineParams p2{{1.0, 2.0}, {cplx{0.3, -0.1}, cplx{1.0, -0.2}}};
  for (const SineParams& p : {p1, p2}) {
    const RegProduct a = s_sine(t, p, 1, C1Mode::omit(), Assembly::pochhammer);
    const RegProduct b = s_sine(t, p, 1, C1Mode::omit(), Assembly::exp_f);
    CHECK(rel_diff(a.value, b.value) < 1e-12);
    CHECK(a.c1_omitted);
  }
  const ExpParams q{{1.0, 2.0},
                    {cplx{0.0, 0.0}, cplx{0.5, -0.1}},
                    {cplx{0.7, 0.0}, cplx{-0.4, 0.2}}};
  const RegProduct a = s_exp(t, q, 1, C1Mode::omit(), Assembly::pochhammer);
  const RegProduct b = s_exp(t, q, 1, C1Mode::omit(), Assembly::exp_f);
  CHECK(rel_diff(a.value, b.value) < 1e-12);
  CHECK_FALSE(s_sine(t, p1, 1, C1Mode::numeric(t)).c1_omitted);
}

TEST_CASE("all-zero weights collapse S~ to exp(-F~)") {
  const ZeroTable& t = table_100k();
  const ExpParams p = exp1(1.0, cplx{0.3, -0.1}, cplx{0.0, 0.0});
  const cplx bare = std::exp(-poly_F_tilde(p, 1, C1Mode::omit()));
  CHECK(s_exp(t, p, 1, C1Mode::omit(), Assembly::pochhammer).value == bare);
  CHECK(s_exp(t, p, 1, C1Mode::omit(), Assembly::exp_f).value == bare);
  CHECK(s_exp(t, p, 1, C1Mode::omit(), Assembly::exp_f).tail_bound == 0.0);
}

TEST_CASE("doubled exp family at omega = 1 reproduces the sine family") {
  const ZeroTable& t = table_100k();
  struct Case {
    SineParams sine;
    ExpParams tilde;
  };
  const std::vector<Case> cases{
      {sine1(1.0, cplx{0.3, -0.1}),
       exp1(2.0, cplx{0.6, -0.2}, cplx{1.0, 0.0})},
      {sine1(0.7, cplx{2.0, -0.4}),
       exp1(1.4, cplx{4.0, -0.8}, cplx{1.0, 0.0})},
      {SineParams{{1.0, 0.5}, {cplx{0.3, -0.1}, cplx{1.2, -0.3}}},
       ExpParams{{2.0, 1.0},
                 {cplx{0.6, -0.2}, cplx{2.4, -0.6}},
                 {cplx{1.0, 0.0}, cplx{1.0, 0.0}}}},
  };
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Assembly route = i == 1 ? Assembly::exp_f : Assembly::pochhammer;
    const Case& c = cases[i];
    // compare after peeling the linear-term exponentials: the polynomials
    // themselves differ between the families, the bare products must not
    const cplx lhs = s_exp(t, c.tilde, 1, C1Mode::omit(), route).value *
                     std::exp(poly_F_tilde(c.tilde, 1, C1Mode::omit()));
    const cplx rhs = s_sine(t, c.sine, 1, C1Mode::omit(), route).value *
                     std::exp(poly_F(c.sine, 1, C1Mode::omit()));
    CHECK(rel_diff(lhs, rhs) < 1e-12);
  }
}

// ---------------------------------------------------------------------------
// discrepancy reports

TEST_CASE("a single factor has no discrepancy at all") {
  const ZeroTable& t = table_100k();
  const auto rs = discrepancy_sine(t, sine1(1.0, cplx{0.3, -0.1}), 1,
                                   C1Mode::numeric(t));
  CHECK(rs.discrepancy == cplx{0.0, 0.0});
  CHECK(rs.per_factor.size() == 1);
  CHECK_FALSE(rs.c1_omitted);
  const auto re = discrepancy_exp(t, exp1(1.0, cplx{0.3, -0.1}, cplx{0.5, 0.0}),
                                  1, C1Mode::omit());
  CHECK(re.discrepancy == cplx{0.0, 0.0});
  CHECK(re.note.empty());
}

TEST_CASE("discrepancy is symmetric under factor permutation") {
  const ZeroTable& t = table_100k();
  const cplx za{0.3, -0.1}, zb{0.5, -0.2};
  const auto ab =
      discrepancy_sine(t, SineParams{{1.0, 2.0}, {za, zb}}, 1, C1Mode::omit());
  const auto ba =
      discrepancy_sine(t, SineParams{{2.0, 1.0}, {zb, za}}, 1, C1Mode::omit());
  CHECK(ab.discrepancy == ba.discrepancy);
  // equal factors give equal per-factor entries
  const auto eq =
      discrepancy_sine(t, SineParams{{1.0, 1.0}, {za, za}}, 1, C1Mode::omit());
  CHECK(eq.per_factor[0] == eq.per_factor[1]);
}

TEST_CASE("omit mode flags multi-factor discrepancies as ambiguous") {
  const ZeroTable& t = table_100k();
  const SineParams p{{1.0, 2.0}, {cplx{0.3, -0.1}, cplx{0.5, -0.2}}};
  const auto rep = discrepancy_sine(t, p, 1, C1Mode::omit());
  CHECK(rep.c1_omitted);
  CHECK(rep.note.find("constant-ambiguous") != std::string::npos);
}

TEST_CASE("two identical factors: discrepancy equals 2 F(1) - F(2)") {
  const ZeroTable& t = table_100k();
  const SineParams p{{1.0, 1.0}, {cplx{0.0, 0.0}, cplx{0.0, 0.0}}};
  const auto rep = discrepancy_sine(t, p, 1, C1Mode::numeric(t));
  const C1Mode mode = C1Mode::numeric(t);
  const cplx f1 = poly_F(p.factor(0), 1, mode);
  const cplx fc = poly_F(p, 1, mode);
  CHECK(std::abs(rep.discrepancy - (2.0 * f1 - fc)) <
        1e-15 * (1.0 + std::abs(rep.discrepancy)));
  // the anomaly is an O(1) number here, not a rounding artifact
  CHECK(std::abs(rep.discrepancy) > 0.05);
}

TEST_CASE("discrepancy cross-checks against fitted coefficients and lt limits") {
  // Rebuild each linear term from entirely fitted/extracted data: quadratic
  // and constant coefficients from the Laurent fit of the singular part,
  // the transcendental remainder from Richardson extrapolation. Comparing
  // the resulting anomaly against the polynomial one tests the closed-form
  // coefficients of poly_F against the zeros themselves.
  const ZeroTable& t = table_100k();
  const SineParams comb{{1.0, 1.0}, {cplx{0.0, 0.0}, cplx{0.0, 0.0}}};
  const auto rep = discrepancy_sine(t, comb, 1, C1Mode::numeric(t));

  auto lt_term = [&](const SineParams& p) {
    const double asum = p.alpha_sum();
    const LaurentCoeffs fit = extract_laurent_coeffs(t, asum);
    const cplx a = a_of(p);
    const cplx phi = lt_extract(t, p, lt_default_grid(t, asum)).phi;
    return 0.5 * fit.c_minus1 * a * a + fit.c0 * a + fit.c1 + phi;
  };
  const cplx lt_disc =
      lt_term(comb.factor(0)) + lt_term(comb.factor(1)) - lt_term(comb);
  CHECK(std::abs(lt_disc - rep.discrepancy) <=
        2e-3 * (1.0 + std::abs(rep.discrepancy)));
}

// ---------------------------------------------------------------------------
// direct L-series

TEST_CASE("L at s = 1 is the plain sum of reciprocal sines") {
  const ZeroTable t = table_100k().prefix(200);
  cplx direct{0.0, 0.0};
  for (std::size_t k = 0; k < t.size(); ++k)
    direct += 1.0 / std::sin(cplx{0.5, t[k]});
  const BoundedValue l = l_direct(t, sine1(1.0, cplx{0.0, 0.0}), 1.0);
  CHECK(rel_diff(l.value, direct) < 1e-12);
}

TEST_CASE("large s is dominated by the first zero") {
  const ZeroTable& t = table_100k();
  const BoundedValue l = l_direct(t, sine1(1.0, cplx{0.0, 0.0}), 5.0);
  // integer exponent, so the branch convention cannot differ from pow
  const cplx first = std::pow(std::sin(cplx{0.5, t.front()}), -5.0);
  CHECK(rel_diff(l.value, first) < 1e-10);
}

TEST_CASE("the factorized branch is normative when arg sin wraps") {
  const ZeroTable one = table_100k().prefix(1);
  const double s = 0.7;
  const cplx w = cplx{0.5, one.front()} - 3.0;  // alpha rho - z, z = 3
  const cplx fact = std::pow(cplx{0.0, -2.0}, s) * std::exp(kI * s * w) *
                    std::pow(1.0 - std::exp(2.0 * kI * w), -s);
  const cplx princ = std::pow(std::sin(w), -s);
  const BoundedValue l = l_direct(one, sine1(1.0, cplx{3.0, 0.0}), s);
  CHECK(rel_diff(l.value, fact) < 1e-13);
  // Re w < 0 pushes arg sin(w) past the principal cut: s arg w wraps and
  // the two conventions genuinely part ways
  CHECK(std::abs(l.value / princ - 1.0) > 0.01);
}

TEST_CASE("L refines consistently as the table grows") {
  const ZeroTable& t = table_100k();
  const ZeroTable pre = t.prefix(10000);
  const SineParams p = sine1(1.0, cplx{0.3, -0.1});
  // small s keeps the far zeros relevant, so the bounds are doing real work
  const BoundedValue coarse = l_direct(pre, p, 1e-3);
  const BoundedValue fine = l_direct(t, p, 1e-3);
  CHECK(std::abs(coarse.value - fine.value) <=
        coarse.tail_bound + fine.tail_bound);
  CHECK(fine.tail_bound < coarse.tail_bound);
  CHECK_THROWS_AS(l_direct(t, p, 0.0), std::domain_error);
}

TEST_CASE("L~ with zero weights reduces to the weighted zero sum") {
  const ZeroTable& t = table_100k();
  const double s = 0.5;
  const cplx z{0.3, -0.1};
  const BoundedValue lt = l_tilde_direct(t, exp1(1.0, z, cplx{0.0, 0.0}), s);
  const cplx expected = std::exp(-kI * s * z) * v_func(t, kI * s).value;
  CHECK(rel_diff(lt.value, expected) < 1e-13);
}

TEST_CASE("L~ at s = 1 is the plain sum of reciprocal factors") {
  const ZeroTable t = table_100k().prefix(200);
  const double alpha = 1.0;
  const cplx z{0.3, -0.1};
  const cplx omega{0.5, 0.0};
  cplx direct{0.0, 0.0};
  for (std::size_t k = 0; k < t.size(); ++k) {
    const cplx w = alpha * cplx{0.5, t[k]} - z;
    direct += 1.0 / (std::exp(-kI * w) - omega);
  }
  const BoundedValue l = l_tilde_direct(t, exp1(alpha, z, omega), 1.0);
  CHECK(rel_diff(l.value, direct) < 1e-12);
}

TEST_CASE("L~ refines consistently as the table grows") {
  const ZeroTable& t = table_100k();
  const ExpParams p = exp1(1.0, cplx{0.3, -0.1}, cplx{0.5, 0.0});
  const BoundedValue coarse = l_tilde_direct(t.prefix(10000), p, 1e-3);
  const BoundedValue fine = l_tilde_direct(t, p, 1e-3);
  CHECK(std::abs(coarse.value - fine.value) <=
        coarse.tail_bound + fine.tail_bound);
  CHECK(fine.tail_bound < coarse.tail_bound);
}

// ---------------------------------------------------------------------------
// linear-term extraction

TEST_CASE("extracted linear terms match the closed-form f sums") {
  const ZeroTable& t = table_100k();

  const SineParams s1 = sine1(1.0, cplx{0.3, -0.1});
  const LtResult r1 = lt_extract(t, s1, lt_default_grid(t, 1.0));
  CHECK(r1.converged);
  CHECK(r1.extrap_error <= 1e-8);
  CHECK(rel_diff(r1.phi, f_product(t, 1.0, cplx{0.3, -0.1}).value) < 1e-3);

  const SineParams s2{{1.0, 2.0}, {cplx{0.0, 0.0}, cplx{0.5, -0.1}}};
  const LtResult r2 = lt_extract(t, s2, lt_default_grid(t, 3.0));
  const cplx f_sum = f_product(t, 1.0, cplx{0.0, 0.0}).value +
                     f_product(t, 2.0, cplx{0.5, -0.1}).value;
  CHECK(r2.converged);
  CHECK(rel_diff(r2.phi, f_sum) < 1e-3);

  const ExpParams e1 = exp1(1.0, cplx{0.3, -0.1}, cplx{0.5, 0.0});
  const LtResult r3 = lt_extract(t, e1, lt_default_grid(t, 1.0));
  CHECK(r3.converged);
  CHECK(rel_diff(r3.phi,
                 f_tilde_product(t, 1.0, cplx{0.3, -0.1}, cplx{0.5, 0.0}).value) <
        1e-3);

  const ExpParams e2{{1.0, 2.0},
                     {cplx{0.0, 0.0}, cplx{0.5, -0.1}},
                     {cplx{0.7, 0.0}, cplx{-0.4, 0.2}}};
  const LtResult r4 = lt_extract(t, e2, lt_default_grid(t, 3.0));
  const cplx ft_sum =
      f_tilde_product(t, 1.0, cplx{0.0, 0.0}, cplx{0.7, 0.0}).value +
      f_tilde_product(t, 2.0, cplx{0.5, -0.1}, cplx{-0.4, 0.2}).value;
  CHECK(r4.converged);
  CHECK(rel_diff(r4.phi, ft_sum) < 1e-3);
}

TEST_CASE("all-zero weights make the extraction vanish identically") {
  const ZeroTable& t = table_100k();
  const ExpParams p = exp1(1.0, cplx{0.3, -0.1}, cplx{0.0, 0.0});
  const LtResult r = lt_extract(t, p, lt_default_grid(t, 1.0));
  CHECK(r.phi == cplx{0.0, 0.0});
  CHECK(r.converged);
  for (const cplx& d : r.d_over_s) CHECK(d == cplx{0.0, 0.0});
}

TEST_CASE("extraction grids are policed") {
  const ZeroTable& t = table_100k();
  const SineParams p = sine1(1.0, cplx{0.3, -0.1});
  CHECK_THROWS_AS(lt_extract(t, p, {0.02, 0.01}), std::domain_error);
  CHECK_THROWS_AS(lt_extract(t, p, {0.02, -0.01, 0.005}), std::domain_error);
  CHECK_THROWS_AS(lt_extract(t, p, {0.02, 0.013, 0.0065}), std::domain_error);
  CHECK_THROWS_WITH(lt_extract(t, p, {2e-4, 1e-4, 5e-5}),
                    doctest::Contains("insufficient truncation range"));
}

TEST_CASE("default grid fits the table or refuses") {
  const ZeroTable& t = table_100k();
  const std::vector<double> g1 = lt_default_grid(t, 1.0);
  CHECK(g1.size() == 5);
  CHECK(g1.front() == 0.02);
  for (std::size_t i = 1; i < g1.size(); ++i)
    CHECK(g1[i] == doctest::Approx(0.5 * g1[i - 1]).epsilon(1e-15));
  // a 100-zero table cannot support the extrapolation window at all
  CHECK_THROWS_WITH(lt_default_grid(t.prefix(100), 1.0),
                    doctest::Contains("insufficient truncation range"));
  CHECK_THROWS_AS(lt_default_grid(t, 0.0), std::domain_error);
}
