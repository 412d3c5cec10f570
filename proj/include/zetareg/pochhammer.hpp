#ifndef ZETAREG_POCHHAMMER_HPP
#define ZETAREG_POCHHAMMER_HPP

// Zeta-regularized Pochhammer-type products over the zeros,
//   (x; q)_zeta = prod_rho (1 - x q^{-rho}),   q = e^{-i beta},
// taken over zeros in the upper half-plane. With rho = 1/2 + i tau,
// q^{-rho} = e^{i beta/2} e^{-beta tau}, so the product converges
// absolutely whenever beta > 0 and |x| e^{-beta tau_1} < 1, and is
// evaluated in log space through log_one_minus_sum.

#include "zetareg/summation.hpp"
#include "zetareg/zero_table.hpp"

namespace zetareg {

struct PochhammerArgs {
  cplx x;
  double beta = 0.0;  // > 0
};

// prod_n (1 - x e^{i beta/2} e^{-beta tau_n}); value plus tail bound
// |value| * (e^B - 1) where B bounds the truncated log-sum tail.
// Throws std::domain_error when beta <= 0 or |x| e^{-beta tau_1} >= 1.
BoundedValue zeta_pochhammer(const ZeroTable& table, const PochhammerArgs& args);

}  // namespace zetareg

#endif  // ZETAREG_POCHHAMMER_HPP
