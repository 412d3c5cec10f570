#ifndef ZETAREG_VERIFY_HPP
#define ZETAREG_VERIFY_HPP

// End-to-end verification suite: every identity the library is built on,
// checked numerically against the loaded zero table, with one CheckResult
// per identity. Individual check errors (for instance a table too short
// for the small-s grids) are recorded as "flagged" and never abort the
// suite; tolerance violations are "fail".

#include <string>
#include <utility>
#include <vector>

#include "zetareg/regprod.hpp"
#include "zetareg/zero_table.hpp"

namespace zetareg {

struct ToleranceProfile {
  std::string name = "default";
  double laurent_c_minus1_rel = 1e-4;  // recovered c_-1 vs closed form
  double laurent_c0_abs = 1e-3;        // recovered c_0 vs 7/8
  double holo_slope_max = 0.05;        // |log-log slope| of remainder ray
  double lt_match_rel = 1e-3;          // lt_extract Phi vs sum_k f(k)
  double orderswap_bound_max = 1e-10;  // tail bounds in series/product swap
  double assembly_rel = 1e-12;         // pochhammer vs exp_f route
  double crossfam_rel = 1e-12;         // sine vs doubled exp family
  double sign_tol = 1e-3;              // adjudication band
  double discrepancy_check_rel = 2e-3; // polynomial vs lt-composed anomaly

  static ToleranceProfile default_profile();
  static ToleranceProfile strict();
};

struct CheckResult {
  std::string name;
  std::string status;   // "pass" | "fail" | "flagged"
  double measured = 0.0;
  double bound = 0.0;
  std::string details;
};

struct VerificationReport {
  std::string profile;
  std::string table_source;
  std::size_t table_size = 0;
  std::vector<CheckResult> checks;
  int adjudicated_sign_c0 = 0;  // +1 / -1, 0 when undecided
  std::vector<std::pair<double, cplx>> c1_table;  // alpha -> numeric c_1

  bool all_passed() const;  // no "fail" entries ("flagged" tolerated)
};

VerificationReport run_verify_suite(const ZeroTable& table,
                                    const ToleranceProfile& profile =
                                        ToleranceProfile::default_profile());

}  // namespace zetareg

#endif  // ZETAREG_VERIFY_HPP
