#include "zetareg/pochhammer.hpp"

#include <cmath>
#include <stdexcept>

namespace zetareg {

BoundedValue zeta_pochhammer(const ZeroTable& table, const PochhammerArgs& args) {
  if (!(args.beta > 0.0))
    throw std::domain_error("zeta_pochhammer: requires beta > 0");
  if (!table.empty() &&
      !(std::abs(args.x) * std::exp(-args.beta * table.front()) < 1.0))
    throw std::domain_error(
        "zeta_pochhammer: requires |x| e^{-beta tau_1} < 1");
  // q^{-rho} = e^{i beta/2} e^{-beta tau}; log-space evaluation
  const cplx c = args.x * std::exp(cplx{0.0, args.beta / 2.0});
  const BoundedValue ls = log_one_minus_sum(table, c, args.beta);
  const cplx value = std::exp(ls.value);
  // a log-tail of size B perturbs the product by at most |value| (e^B - 1)
  return {value, std::abs(value) * std::expm1(ls.tail_bound)};
}

}  // namespace zetareg
