// zetareg: zero-table management, single evaluations, grid scans, and the
// verification suite, over the zetareg library. JSON is the report format;
// scans emit CSV. All output is deterministic for fixed inputs.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetareg/cramer.hpp"
#include "zetareg/fetch.hpp"
#include "zetareg/pochhammer.hpp"
#include "zetareg/regprod.hpp"
#include "zetareg/summation.hpp"
#include "zetareg/verify.hpp"
#include "zetareg/zero_table.hpp"

using json = nlohmann::json;
using zetareg::cplx;

namespace {

struct GlobalOpts {
  std::string zeros = "data/zeros_100k.zrt";
  std::size_t limit = 0;
  std::string out;
  std::string format = "json";
  std::string profile = "default";
  unsigned threads = 0;
};

zetareg::ZeroTable load_table(const GlobalOpts& g) {
  return zetareg::load_zero_table(g.zeros, g.limit);
}

zetareg::ToleranceProfile profile_for(const GlobalOpts& g) {
  if (g.profile == "strict") return zetareg::ToleranceProfile::strict();
  return zetareg::ToleranceProfile::default_profile();
}

void emit(const GlobalOpts& g, const std::string& payload) {
  if (g.out.empty() || g.out == "-") {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " + g.out);
  f << payload;
  if (!f) throw std::runtime_error("short write to " + g.out);
}

json cplx_json(cplx v) { return json{{"im", v.imag()}, {"re", v.real()}}; }

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// ---- argument parsing helpers ----

double parse_double(const std::string& tok, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw CLI::ConversionError(std::string(what) + ": bad number '" + tok + "'");
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

// "re,im" (or bare "re") -> complex
cplx parse_complex(const std::string& s, const char* what) {
  const auto parts = split(s, ',');
  if (parts.empty() || parts.size() > 2)
    throw CLI::ConversionError(std::string(what) + ": expected RE,IM, got '" + s + "'");
  const double re = parse_double(parts[0], what);
  const double im = parts.size() == 2 ? parse_double(parts[1], what) : 0.0;
  return {re, im};
}

// "re,im;re,im;..." -> list of complex
std::vector<cplx> parse_complex_list(const std::string& s, const char* what) {
  std::vector<cplx> out;
  for (const auto& tok : split(s, ';')) out.push_back(parse_complex(tok, what));
  return out;
}

std::vector<double> parse_double_list(const std::string& s, const char* what) {
  std::vector<double> out;
  for (const auto& tok : split(s, ',')) out.push_back(parse_double(tok, what));
  return out;
}

// ---- shared regprod argument bundle ----

struct RegprodArgs {
  std::string alphas;
  std::string zs;
  std::string omegas;
  std::string c1 = "omit";
  int sign_c0 = 1;

  zetareg::SineParams sine() const {
    return {parse_double_list(alphas, "--alphas"),
            parse_complex_list(zs, "--zs")};
  }
  zetareg::ExpParams exp() const {
    return {parse_double_list(alphas, "--alphas"),
            parse_complex_list(zs, "--zs"),
            parse_complex_list(omegas, "--omegas")};
  }
  zetareg::C1Mode c1_mode(const zetareg::ZeroTable& table) const {
    return c1 == "numeric" ? zetareg::C1Mode::numeric(table)
                           : zetareg::C1Mode::omit();
  }
};

void add_regprod_opts(CLI::App* cmd, RegprodArgs& a, bool with_omegas) {
  cmd->add_option("--alphas", a.alphas, "comma list of alpha_k > 0")
      ->required();
  cmd->add_option("--zs", a.zs, "semicolon list of z_k as RE,IM")->required();
  if (with_omegas)
    cmd->add_option("--omegas", a.omegas,
                    "semicolon list of omega_k as RE,IM (|omega_k| <= 1)");
  cmd->add_option("--c1", a.c1, "c1(alpha) handling")
      ->check(CLI::IsMember({"omit", "numeric"}));
  cmd->add_option("--sign-c0", a.sign_c0, "sign of the 7/8 linear term")
      ->check(CLI::IsMember({1, -1}));
}

json regprod_json(const zetareg::RegProduct& r) {
  return json{{"c1_omitted", r.c1_omitted},
              {"tail_bound", r.tail_bound},
              {"value", cplx_json(r.value)}};
}

// ---- scan plumbing ----

struct ScanRow {
  double param = 0.0;
  bool ok = false;
  cplx value{0.0, 0.0};
  double bound = 0.0;
  std::string error;
};

std::string csv_sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',') c = ';';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "param,re,im,tail_bound,status\n";
  for (const auto& r : rows) {
    out += num17(r.param);
    if (r.ok) {
      out += "," + num17(r.value.real()) + "," + num17(r.value.imag()) + "," +
             num17(r.bound) + ",ok\n";
    } else {
      out += ",nan,nan,nan,error: " + csv_sanitize(r.error) + "\n";
    }
  }
  return out;
}

// apply "alphaK" / "rezK" / "imzK" / "omegaK" (1-based K) to a param bundle
template <typename Params>
void apply_scan_param(Params& p, const std::string& name, double value) {
  auto parse_index = [&](std::size_t prefix_len) {
    const std::string idx = name.substr(prefix_len);
    std::size_t pos = 0;
    unsigned long k = 0;
    try {
      k = std::stoul(idx, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != idx.size() || k == 0 || k > p.alphas.size())
      throw std::domain_error("scan: bad parameter index in '" + name + "'");
    return static_cast<std::size_t>(k - 1);
  };
  if (name.rfind("alpha", 0) == 0) {
    p.alphas[parse_index(5)] = value;
  } else if (name.rfind("rez", 0) == 0) {
    const std::size_t k = parse_index(3);
    p.zs[k] = cplx{value, p.zs[k].imag()};
  } else if (name.rfind("imz", 0) == 0) {
    const std::size_t k = parse_index(3);
    p.zs[k] = cplx{p.zs[k].real(), value};
  } else if (name.rfind("omega", 0) == 0) {
    if constexpr (requires { p.omegas; }) {
      const std::size_t k = parse_index(5);
      const cplx w = p.omegas[k];
      const double mag = std::abs(w);
      // scale the magnitude, keeping the phase (phase 0 for omega = 0)
      p.omegas[k] = mag == 0.0 ? cplx{value, 0.0} : w * (value / mag);
    } else {
      throw std::domain_error("scan: omega parameter needs --family exp");
    }
  } else {
    throw std::domain_error(
        "scan: unknown parameter '" + name +
        "' (use alphaK, rezK, imzK, or omegaK with 1-based K)");
  }
}

// rows are independent; worker j takes indices j, j+T, j+2T, ... so output
// is identical for every thread count
void run_rows(std::vector<ScanRow>& rows, unsigned threads,
              const std::function<void(std::size_t)>& eval) {
  unsigned t = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (t == 0) t = 1;
  t = std::min<unsigned>(t, static_cast<unsigned>(rows.size()));
  if (t <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) eval(i);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < t; ++j)
    pool.emplace_back([&, j] {
      for (std::size_t i = j; i < rows.size(); i += t) eval(i);
    });
  for (auto& th : pool) th.join();
}

// ---- verify report rendering ----

json report_json(const zetareg::VerificationReport& rep,
                 const zetareg::ToleranceProfile& prof) {
  json checks = json::array();
  for (const auto& c : rep.checks)
    checks.push_back(json{{"bound_or_tolerance", c.bound},
                          {"details", c.details},
                          {"measured_error", c.measured},
                          {"name", c.name},
                          {"status", c.status}});
  json c1_table = json::object();
  for (const auto& [alpha, c1] : rep.c1_table) {
    char key[32];
    std::snprintf(key, sizeof(key), "%.6g", alpha);
    c1_table[key] = cplx_json(c1);
  }
  json j{{"c1_table", c1_table},
         {"checks", checks},
         {"profile",
          json{{"assembly_rel", prof.assembly_rel},
               {"crossfam_rel", prof.crossfam_rel},
               {"discrepancy_check_rel", prof.discrepancy_check_rel},
               {"holo_slope_max", prof.holo_slope_max},
               {"laurent_c0_abs", prof.laurent_c0_abs},
               {"laurent_c_minus1_rel", prof.laurent_c_minus1_rel},
               {"lt_match_rel", prof.lt_match_rel},
               {"name", prof.name},
               {"orderswap_bound_max", prof.orderswap_bound_max},
               {"sign_tol", prof.sign_tol}}},
         {"table", json{{"size", rep.table_size}, {"source", rep.table_source}}}};
  if (rep.adjudicated_sign_c0 != 0)
    j["adjudicated_sign_c0"] = rep.adjudicated_sign_c0;
  return j;
}

std::string report_text(const zetareg::VerificationReport& rep) {
  std::string out;
  for (const auto& c : rep.checks) {
    char line[512];
    std::snprintf(line, sizeof(line), "%-7s %-28s measured=%-12.5g bound=%-12.5g %s\n",
                  c.status.c_str(), c.name.c_str(), c.measured, c.bound,
                  c.details.c_str());
    out += line;
  }
  out += rep.all_passed() ? "RESULT: all checks passed\n"
                          : "RESULT: FAILURES present\n";
  if (rep.adjudicated_sign_c0 != 0)
    out += std::string("adjudicated sign_c0 = ") +
           (rep.adjudicated_sign_c0 > 0 ? "+1" : "-1") + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zeta-regularized trigonometric products over the Riemann zeros"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--zeros", g.zeros, "zero table file (text or ZRT1 cache)")
      ->envname("ZETAREG_ZEROS");
  app.add_option("--limit", g.limit, "use only the first N zeros (0 = all)");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "output format for reports/values")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--profile", g.profile, "tolerance profile")
      ->check(CLI::IsMember({"default", "strict"}));
  app.add_option("--threads", g.threads, "scan worker threads (0 = auto)");

  int exit_code = 0;

  // ---- zeros ----
  auto* zeros_cmd = app.add_subcommand("zeros", "zero-table management");
  zeros_cmd->require_subcommand(1);

  std::string fetch_url;
  auto* zeros_fetch = zeros_cmd->add_subcommand("fetch", "download a zero table");
  zeros_fetch->add_option("--url", fetch_url, "http(s) source of ordinates")
      ->required();
  zeros_fetch->callback([&] {
    if (g.out.empty())
      throw std::runtime_error("zeros fetch: --out FILE is required");
    zetareg::fetch_zeros(fetch_url, g.out);
    const zetareg::ZeroTable t = zetareg::load_zero_table(g.out, g.limit);
    std::cout << json{{"destination", g.out},
                      {"first", t.front()},
                      {"size", t.size()},
                      {"url", fetch_url}}
                     .dump(2)
              << "\n";
  });

  auto* zeros_validate =
      zeros_cmd->add_subcommand("validate", "integrity-check a zero table");
  zeros_validate->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const zetareg::ValidationReport r = zetareg::validate(t);
    if (g.format == "text") {
      char buf[256];
      std::snprintf(buf, sizeof(buf),
                    "source=%s size=%zu monotone=%s first_zero=%s "
                    "max_counting_deviation=%.6g duplicates=%zu -> %s\n",
                    t.source().c_str(), t.size(), r.monotone_ok ? "yes" : "no",
                    r.first_zero_ok ? "yes" : "no", r.max_counting_deviation,
                    r.duplicate_count, r.passed() ? "PASS" : "FAIL");
      emit(g, buf);
    } else {
      emit(g, json{{"duplicate_count", r.duplicate_count},
                   {"first_zero_ok", r.first_zero_ok},
                   {"max_counting_deviation", r.max_counting_deviation},
                   {"monotone_ok", r.monotone_ok},
                   {"passed", r.passed()},
                   {"size", t.size()},
                   {"source", t.source()}}
                  .dump(2));
    }
    if (!r.passed()) exit_code = 1;
  });

  auto* zeros_cache = zeros_cmd->add_subcommand(
      "cache", "convert a table to the binary ZRT1 cache format");
  zeros_cache->callback([&] {
    if (g.out.empty())
      throw std::runtime_error("zeros cache: --out FILE is required");
    const zetareg::ZeroTable t = load_table(g);
    zetareg::write_zero_cache(t, g.out);
    std::cout << json{{"destination", g.out}, {"size", t.size()}}.dump(2)
              << "\n";
  });

  // ---- cramer ----
  auto* cramer_cmd = app.add_subcommand("cramer", "Cramer phi/V and the singularity");
  cramer_cmd->require_subcommand(1);

  std::string s_arg;
  auto* cramer_phi = cramer_cmd->add_subcommand("phi", "phi(s) = sum e^{-s tau}");
  cramer_phi->add_option("--s", s_arg, "evaluation point RE,IM (Re > 0)")
      ->required();
  cramer_phi->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const cplx s = parse_complex(s_arg, "--s");
    const zetareg::BoundedValue v = zetareg::phi(t, s);
    emit(g, json{{"s", cplx_json(s)},
                 {"tail_bound", v.tail_bound},
                 {"value", cplx_json(v.value)}}
                .dump(2));
  });

  auto* cramer_v = cramer_cmd->add_subcommand("v", "V(s) = sum e^{s rho}");
  cramer_v->add_option("--s", s_arg, "evaluation point RE,IM (Im > 0)")
      ->required();
  cramer_v->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const cplx s = parse_complex(s_arg, "--s");
    const zetareg::BoundedValue v = zetareg::v_func(t, s);
    emit(g, json{{"s", cplx_json(s)},
                 {"tail_bound", v.tail_bound},
                 {"value", cplx_json(v.value)}}
                .dump(2));
  });

  double ray_angle = std::numbers::pi / 4.0;
  unsigned decades = 5;
  auto* cramer_scan = cramer_cmd->add_subcommand(
      "remainder-scan", "V minus singular model along a ray into 0 (CSV)");
  cramer_scan->add_option("--ray-angle", ray_angle, "ray angle in (0, pi)");
  cramer_scan->add_option("--decades", decades,
                          "binary decades to descend from r = 1");
  cramer_scan->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    std::vector<double> radii;
    for (unsigned j = 0; j <= decades; ++j) radii.push_back(std::ldexp(1.0, -static_cast<int>(j)));
    const auto samples = zetareg::remainder_ray_scan(t, ray_angle, radii);
    std::string csv = "r,re,im,tail_bound\n";
    for (const auto& smp : samples)
      csv += num17(smp.r) + "," + num17(smp.remainder.real()) + "," +
             num17(smp.remainder.imag()) + "," + num17(smp.tail_bound) + "\n";
    csv += "# slope(|remainder| vs log r) = " +
           num17(zetareg::ray_scan_slope(samples)) + "\n";
    emit(g, csv);
  });

  double coeffs_alpha = 1.0;
  auto* cramer_coeffs = cramer_cmd->add_subcommand(
      "coeffs", "Laurent coefficients of the meromorphic part at s = 0");
  cramer_coeffs->add_option("--alpha", coeffs_alpha, "scale alpha > 0")
      ->required();
  cramer_coeffs->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const zetareg::LaurentCoeffs lc =
        zetareg::extract_laurent_coeffs(t, coeffs_alpha);
    emit(g, json{{"alpha", coeffs_alpha},
                 {"c0", cplx_json(lc.c0)},
                 {"c1", cplx_json(lc.c1)},
                 {"c_minus1", cplx_json(lc.c_minus1)},
                 {"residual_norm", lc.residual_norm},
                 {"s_grid", lc.s_grid}}
                .dump(2));
  });

  // ---- poch ----
  auto* poch_cmd = app.add_subcommand("poch", "zeta-Pochhammer symbols");
  std::string poch_x;
  double poch_beta = 1.0;
  auto* poch_eval =
      poch_cmd->add_subcommand("eval", "(x; e^{-i beta})_zeta over the zeros");
  poch_eval->add_option("--x", poch_x, "argument x as RE,IM")->required();
  poch_eval->add_option("--beta", poch_beta, "exponent scale beta > 0")
      ->required();
  poch_cmd->require_subcommand(1);
  poch_eval->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const zetareg::BoundedValue v =
        zetareg::zeta_pochhammer(t, {parse_complex(poch_x, "--x"), poch_beta});
    emit(g, json{{"beta", poch_beta},
                 {"tail_bound", v.tail_bound},
                 {"value", cplx_json(v.value)},
                 {"x", cplx_json(parse_complex(poch_x, "--x"))}}
                .dump(2));
  });

  // ---- regprod ----
  auto* reg_cmd =
      app.add_subcommand("regprod", "regularized products and their anomalies");
  reg_cmd->require_subcommand(1);

  RegprodArgs sine_args;
  std::string sine_route = "pochhammer";
  auto* reg_sine = reg_cmd->add_subcommand("sine", "S over sine factors");
  add_regprod_opts(reg_sine, sine_args, false);
  reg_sine->add_option("--route", sine_route, "assembly route")
      ->check(CLI::IsMember({"pochhammer", "expf"}));
  reg_sine->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const auto route = sine_route == "expf" ? zetareg::Assembly::exp_f
                                            : zetareg::Assembly::pochhammer;
    const zetareg::RegProduct r =
        s_sine(t, sine_args.sine(), sine_args.sign_c0, sine_args.c1_mode(t), route);
    emit(g, regprod_json(r).dump(2));
  });

  RegprodArgs exp_args;
  std::string exp_route = "pochhammer";
  auto* reg_exp = reg_cmd->add_subcommand("exp", "S~ over exponential factors");
  add_regprod_opts(reg_exp, exp_args, true);
  reg_exp->add_option("--route", exp_route, "assembly route")
      ->check(CLI::IsMember({"pochhammer", "expf"}));
  reg_exp->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const auto route = exp_route == "expf" ? zetareg::Assembly::exp_f
                                           : zetareg::Assembly::pochhammer;
    const zetareg::RegProduct r =
        s_exp(t, exp_args.exp(), exp_args.sign_c0, exp_args.c1_mode(t), route);
    emit(g, regprod_json(r).dump(2));
  });

  RegprodArgs disc_args;
  std::string disc_family = "sine";
  auto* reg_disc = reg_cmd->add_subcommand(
      "discrepancy", "sum of per-factor F minus combined F");
  reg_disc->add_option("--family", disc_family, "factor family")
      ->check(CLI::IsMember({"sine", "exp"}));
  add_regprod_opts(reg_disc, disc_args, true);
  reg_disc->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const zetareg::DiscrepancyReport rep =
        disc_family == "exp"
            ? discrepancy_exp(t, disc_args.exp(), disc_args.sign_c0,
                              disc_args.c1_mode(t))
            : discrepancy_sine(t, disc_args.sine(), disc_args.sign_c0,
                               disc_args.c1_mode(t));
    json per = json::array();
    for (const cplx& v : rep.per_factor) per.push_back(cplx_json(v));
    emit(g, json{{"c1_omitted", rep.c1_omitted},
                 {"combined", cplx_json(rep.combined)},
                 {"discrepancy", cplx_json(rep.discrepancy)},
                 {"note", rep.note},
                 {"per_factor", per}}
                .dump(2));
  });

  RegprodArgs lt_args;
  std::string lt_family = "sine";
  std::string lt_grid_arg;
  auto* reg_lt = reg_cmd->add_subcommand(
      "verify-lt", "extract the linear term and compare with sum_k f(k)");
  reg_lt->add_option("--family", lt_family, "factor family")
      ->check(CLI::IsMember({"sine", "exp"}));
  add_regprod_opts(reg_lt, lt_args, true);
  reg_lt->add_option("--s-grid", lt_grid_arg,
                     "comma list of s values, halving, descending");
  reg_lt->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    zetareg::LtResult lt;
    cplx ref{0.0, 0.0};
    if (lt_family == "exp") {
      const zetareg::ExpParams p = lt_args.exp();
      const auto grid = lt_grid_arg.empty()
                            ? zetareg::lt_default_grid(t, p.alpha_sum())
                            : parse_double_list(lt_grid_arg, "--s-grid");
      lt = lt_extract(t, p, grid);
      for (std::size_t k = 0; k < p.size(); ++k)
        ref += f_tilde_product(t, p.alphas[k], p.zs[k], p.omegas[k]).value;
    } else {
      const zetareg::SineParams p = lt_args.sine();
      const auto grid = lt_grid_arg.empty()
                            ? zetareg::lt_default_grid(t, p.alpha_sum())
                            : parse_double_list(lt_grid_arg, "--s-grid");
      lt = lt_extract(t, p, grid);
      for (std::size_t k = 0; k < p.size(); ++k)
        ref += f_product(t, p.alphas[k], p.zs[k]).value;
    }
    json d = json::array();
    for (const cplx& v : lt.d_over_s) d.push_back(cplx_json(v));
    const double abs_ref = std::abs(ref);
    emit(g, json{{"converged", lt.converged},
                 {"d_over_s", d},
                 {"extrap_error", lt.extrap_error},
                 {"phi", cplx_json(lt.phi)},
                 {"rel_mismatch",
                  abs_ref > 0.0 ? std::abs(lt.phi - ref) / abs_ref : 0.0},
                 {"sum_f", cplx_json(ref)}}
                .dump(2));
  });

  RegprodArgs scan_args;
  std::string scan_family = "sine";
  std::string scan_quantity = "value";
  std::string scan_param;
  double scan_from = 0.0, scan_to = 1.0;
  unsigned scan_steps = 2;
  auto* reg_scan = reg_cmd->add_subcommand(
      "scan", "sweep one real parameter, emitting CSV rows");
  reg_scan->add_option("--family", scan_family, "factor family")
      ->check(CLI::IsMember({"sine", "exp"}));
  reg_scan->add_option("--quantity", scan_quantity, "what to evaluate per row")
      ->check(CLI::IsMember({"value", "discrepancy"}));
  add_regprod_opts(reg_scan, scan_args, true);
  reg_scan->add_option("--param", scan_param,
                       "degree of freedom: alphaK, rezK, imzK, or omegaK")
      ->required();
  reg_scan->add_option("--from", scan_from, "start value")->required();
  reg_scan->add_option("--to", scan_to, "end value")->required();
  reg_scan->add_option("--steps", scan_steps, "number of grid rows (>= 1)")
      ->required();
  reg_scan->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    if (scan_steps == 0) throw std::runtime_error("scan: --steps must be >= 1");
    std::vector<ScanRow> rows(scan_steps);
    const auto c1_mode = scan_args.c1_mode(t);
    const bool is_exp = scan_family == "exp";
    const zetareg::SineParams base_sine =
        is_exp ? zetareg::SineParams{} : scan_args.sine();
    const zetareg::ExpParams base_exp =
        is_exp ? scan_args.exp() : zetareg::ExpParams{};
    run_rows(rows, g.threads, [&](std::size_t i) {
      ScanRow& row = rows[i];
      row.param = scan_steps == 1
                      ? scan_from
                      : scan_from + (scan_to - scan_from) *
                                        static_cast<double>(i) /
                                        static_cast<double>(scan_steps - 1);
      try {
        if (is_exp) {
          zetareg::ExpParams p = base_exp;
          apply_scan_param(p, scan_param, row.param);
          if (scan_quantity == "value") {
            const auto r = s_exp(t, p, scan_args.sign_c0, c1_mode);
            row.value = r.value;
            row.bound = r.tail_bound;
          } else {
            row.value =
                discrepancy_exp(t, p, scan_args.sign_c0, c1_mode).discrepancy;
          }
        } else {
          zetareg::SineParams p = base_sine;
          apply_scan_param(p, scan_param, row.param);
          if (scan_quantity == "value") {
            const auto r = s_sine(t, p, scan_args.sign_c0, c1_mode);
            row.value = r.value;
            row.bound = r.tail_bound;
          } else {
            row.value =
                discrepancy_sine(t, p, scan_args.sign_c0, c1_mode).discrepancy;
          }
        }
        row.ok = true;
      } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
      }
    });
    emit(g, scan_csv(rows));
  });

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "numerical verification suite");
  verify_cmd->require_subcommand(1);
  auto* verify_all =
      verify_cmd->add_subcommand("all", "run every check and report");
  verify_all->callback([&] {
    const zetareg::ZeroTable t = load_table(g);
    const zetareg::ToleranceProfile prof = profile_for(g);
    const zetareg::VerificationReport rep = zetareg::run_verify_suite(t, prof);
    if (g.format == "text")
      emit(g, report_text(rep));
    else
      emit(g, report_json(rep, prof).dump(2));
    if (!rep.all_passed()) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
