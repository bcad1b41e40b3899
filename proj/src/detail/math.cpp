#include "fracdiff/detail/math.hpp"

#include <cmath>
#include <limits>

namespace fracdiff::detail {

double log_gamma_pos(double x)
{
    if (!(x > 0.0))
        return std::numeric_limits<double>::quiet_NaN();

    double shift = 0.0;
    while (x < 8.0) {
        shift += std::log(x);
        x += 1.0;
    }

    // Stirling series, error below 1e-15 for x >= 8
    static const double c[8] = {
        1.0 / 12.0,     -1.0 / 360.0,      1.0 / 1260.0, -1.0 / 1680.0,
        1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0,  -3617.0 / 122400.0
    };
    const double z = 1.0 / (x * x);
    double sum = c[7];
    for (int i = 6; i >= 0; --i)
        sum = sum * z + c[i];

    static const double half_log_two_pi = 0.91893853320467274178032973640562;
    return (x - 0.5) * std::log(x) - x + half_log_two_pi + sum / x - shift;
}

double sin_pi(double x)
{
    double r = std::fmod(x, 2.0);
    if (r < 0.0)
        r += 2.0;  // r in [0,2)
    if (r > 1.5)
        return std::sin(pi * (r - 2.0));
    if (r > 0.5)
        return std::sin(pi * (1.0 - r));
    return std::sin(pi * r);
}

double cos_pi(double x)
{
    return sin_pi(x + 0.5);
}

std::pair<double, double> rgamma_log(double x)
{
    if (x > 0.0)
        return {1.0, -log_gamma_pos(x)};

    // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    const double s = sin_pi(x);
    if (s == 0.0)
        return {0.0, -std::numeric_limits<double>::infinity()};
    const double mag = std::log(std::fabs(s)) + log_gamma_pos(1.0 - x) - std::log(pi);
    return {s > 0.0 ? 1.0 : -1.0, mag};
}

double rgamma(double x)
{
    auto [sign, mag] = rgamma_log(x);
    if (sign == 0.0)
        return 0.0;
    return sign * std::exp(mag);
}

}  // namespace fracdiff::detail
