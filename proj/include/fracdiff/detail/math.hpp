#ifndef FRACDIFF_DETAIL_MATH_HPP
#define FRACDIFF_DETAIL_MATH_HPP

#include <cmath>
#include <utility>

namespace fracdiff::detail {

inline constexpr double pi = 3.14159265358979323846264338328;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334;

// log Gamma(x) for x > 0. std::lgamma writes the global signgam on glibc,
// so we keep a thread safe version: upward recursion into the Stirling
// regime and the Abramowitz & Stegun 6.1.41 asymptotic series.
double log_gamma_pos(double x);

// sin(pi*x) and cos(pi*x) with exact reduction of the integer part, so
// zeros at (half-)integer arguments are exact.
double sin_pi(double x);
double cos_pi(double x);

// sign and log magnitude of 1/Gamma(x) for any real x. Returns {0, -inf}
// at poles (x = 0, -1, -2, ...).
std::pair<double, double> rgamma_log(double x);

// 1/Gamma(x) for any real x; exactly 0 at poles.
double rgamma(double x);

}  // namespace fracdiff::detail

#endif
