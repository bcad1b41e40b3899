#include "fracdiff/detail/bessel.hpp"
#include "fracdiff/detail/math.hpp"

#include <cmath>

namespace fracdiff::detail {

double bessel_j0(double x)
{
    x = std::fabs(x);

    if (x <= 12.0) {
        // ascending series, worst case cancellation near x=12 is ~1e6
        const double q = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int m = 1; m < 60; ++m) {
            term *= -q / (static_cast<double>(m) * m);
            sum += term;
            if (std::fabs(term) < 1e-17 * (1.0 + std::fabs(sum)))
                break;
        }
        return sum;
    }

    // Hankel asymptotic expansion, mu = 0
    const double inv8x = 1.0 / (8.0 * x);
    double p = 1.0, q = 0.0;
    double t = 1.0;
    double sp = -1.0, sq = 1.0;
    double prev = 1e300;
    for (int k = 1; k <= 12; ++k) {
        const double odd = 2.0 * k - 1.0;
        t *= -(odd * odd) * inv8x / k;
        if (std::fabs(t) >= prev)
            break;  // asymptotic series started diverging
        prev = std::fabs(t);
        if (k % 2 == 1) {
            q += sq * t;
            sq = -sq;
        } else {
            p += sp * t;
            sp = -sp;
        }
    }
    const double chi = x - 0.25 * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j0_zero(int m)
{
    const double b = (m - 0.25) * pi;
    const double u = 1.0 / (8.0 * b);
    return b + u * (1.0 + u * u * (-124.0 / 3.0 + u * u * 120928.0 / 15.0));
}

}  // namespace fracdiff::detail
