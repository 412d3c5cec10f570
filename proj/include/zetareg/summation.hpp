#ifndef ZETAREG_SUMMATION_HPP
#define ZETAREG_SUMMATION_HPP

// Compensated summation kernels over zero tables. Everything that leaves
// this module is a BoundedValue: the computed value together with a bound
// on the part of the infinite sum the table cannot see. Summation order
// is fixed (ascending ordinates, Kahan-Babuska-Neumaier compensation), so
// results are bit-reproducible for a given table.

#include <complex>

#include "zetareg/zero_table.hpp"

namespace zetareg {

using cplx = std::complex<double>;

struct BoundedValue {
  cplx value{0.0, 0.0};
  double tail_bound = 0.0;  // nonnegative bound on the truncated remainder
};

// Kahan-Babuska-Neumaier compensated accumulator.
class KbnSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

class KbnSumC {
 public:
  void add(cplx x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  cplx value() const { return {re_.value(), im_.value()}; }

 private:
  KbnSum re_, im_;
};

// Bound on sum_{tau > T} e^{-a tau} from the zero-counting density
// (1/2pi) log(t/2pi), integrated in closed form and doubled for safety:
// (1/(pi*a)) * e^{-a T} * log(T). Requires a > 0 and T at least the first
// ordinate height (T >= 14).
double density_tail(double a, double T);

// sum_n e^{-a tau_n} with Re(a) > 0; tail bounded past the last ordinate.
BoundedValue exp_sum(const ZeroTable& table, cplx a);

// sum_n log(1 - c e^{-a tau_n}), principal branch per term, a > 0 and
// |c| e^{-a tau_1} < 1 required so no factor can vanish or wind.
BoundedValue log_one_minus_sum(const ZeroTable& table, cplx c, double a);

// log(1+u) and e^w - 1 for complex arguments without cancellation near 0.
cplx log1p_cplx(cplx u);
cplx expm1_cplx(cplx w);

}  // namespace zetareg

#endif  // ZETAREG_SUMMATION_HPP
