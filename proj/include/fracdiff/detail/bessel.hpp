#ifndef FRACDIFF_DETAIL_BESSEL_HPP
#define FRACDIFF_DETAIL_BESSEL_HPP

namespace fracdiff::detail {

// Order zero Bessel function of the first kind, series/asymptotic split.
double bessel_j0(double x);

// m-th positive zero of J0 (m >= 1), McMahon expansion. Accurate to a few
// 1e-4 for m = 1 and rapidly better; used for oscillatory panel boundaries.
double bessel_j0_zero(int m);

}  // namespace fracdiff::detail

#endif
