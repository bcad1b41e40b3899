// Test-only oracles, independent of the library's production evaluation
// paths: extended precision brute-force series, scaled complementary error
// function, and the classical textbook series for the finite sheets.
#ifndef FRACDIFF_TESTS_ORACLES_HPP
#define FRACDIFF_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>

namespace oracles {

inline constexpr long double pi_l = 3.14159265358979323846264338328L;

struct LdEval {
    long double value = 0.0L;
    long double err = 0.0L;  // rounding bound from the tracked peak
};

// brute-force Mittag-Leffler series in long double; err covers both the
// rounding of the tracked peak and the truncation at the term cap
inline LdEval ml_series(long double nu, long double mu, long double z, int terms = 2000)
{
    long double sum = 0.0L, sum_abs = 0.0L, peak = 0.0L, last = 0.0L;
    long double logz = (z != 0.0L) ? logl(fabsl(z)) : 0.0L;
    for (int n = 0; n < terms; ++n) {
        const long double w = nu * n + mu;
        long double term;
        if (w <= 0.0L && w == floorl(w)) {
            term = 0.0L;
        } else if (w > 0.0L) {
            term = expl(n * logz - lgammal(w));
        } else {
            term = expl(n * logz + lgammal(1.0L - w)) * sinl(pi_l * w) / pi_l;
        }
        if (z < 0.0L && (n % 2 == 1))
            term = -term;
        if (z == 0.0L && n > 0)
            term = 0.0L;
        sum += term;
        sum_abs += fabsl(term);
        peak = std::max({peak, fabsl(term), fabsl(sum)});
        last = fabsl(term);
    }
    return {sum, (peak + sum_abs) * 2.2e-19L + last * 100.0L};
}

// brute-force M-Wright series in long double (sine form)
inline LdEval mwright_series(long double nu, long double z, int terms = 800)
{
    long double sum = 0.0L, peak = 0.0L, p = 1.0L;
    for (int n = 0; n < terms; ++n) {
        const long double w = nu * (n + 1.0L);
        const long double s = sinl(pi_l * w);
        const long double term = p * s * expl(lgammal(w)) / pi_l;
        sum += term;
        peak = std::max({peak, fabsl(term), fabsl(sum)});
        p *= -z / (n + 1.0L);
    }
    return {sum, peak * 1.1e-19L * 64.0L};
}

// term-wise integrated M series (fractional error function) in long double
inline LdEval frac_erf_series(long double nu, long double z, int terms = 800)
{
    long double sum = 0.0L, peak = 0.0L;
    const long double az = fabsl(z);
    long double p = az;  // |z|^(n+1)/n!
    for (int n = 0; n < terms; ++n) {
        const long double w = nu * (n + 1.0L);
        const long double s = sinl(pi_l * w);
        const long double term = p / (n + 1.0L) * s * expl(lgammal(w)) / pi_l;
        sum += term;
        peak = std::max({peak, fabsl(term), fabsl(sum)});
        p *= -az / (n + 1.0L);
    }
    if (z < 0.0L)
        sum = -sum;
    return {sum, peak * 1.1e-19L * 64.0L};
}

// Airy Ai(x) from its Maclaurin series in long double, with the rounding
// peak tracked (the series cancels like exp((4/3) x^(3/2)) for x > 0)
inline LdEval airy_ai(long double x)
{
    const long double c1 = 0.3550280538878172392600631860042L;   // Ai(0)
    const long double c2 = 0.2588194037928067984051835601892L;   // -Ai'(0)
    const long double x3 = x * x * x;
    long double f = 1.0L, tf = 1.0L;
    long double g = x, tg = x;
    long double peak = std::max(fabsl(f), fabsl(g));
    for (int k = 0; k < 120; ++k) {
        tf *= x3 / ((3.0L * k + 2.0L) * (3.0L * k + 3.0L));
        tg *= x3 / ((3.0L * k + 3.0L) * (3.0L * k + 4.0L));
        f += tf;
        g += tg;
        peak = std::max({peak, fabsl(tf), fabsl(tg), fabsl(f), fabsl(g)});
        if (fabsl(tf) < 1e-24L * fabsl(f) && fabsl(tg) < 1e-24L * (fabsl(g) + 1e-30L))
            break;
    }
    return {c1 * f - c2 * g, peak * 1.1e-19L * 16.0L};
}

// exp(x^2) erfc(x) without overflow, asymptotic for large x
inline double erfcx(double x)
{
    if (x < 25.0)
        return std::exp(x * x) * std::erfc(x);
    double term = 1.0, sum = 0.0;
    for (int k = 0; k < 16; ++k) {
        sum += term;
        term *= -(2.0 * k + 1.0) / (2.0 * x * x);
    }
    return sum / (x * std::sqrt(M_PI));
}

// classical equal-BC sheet solution (exponential temporal factors)
inline double classic_finite_equal(double c0, double D, double L, double x,
                                   double t, int terms = 400)
{
    double s = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double odd = 2.0 * n + 1.0;
        s += ((n % 2 == 0) ? 1.0 : -1.0) / odd
             * std::exp(-odd * odd * M_PI * M_PI * D * t / (4.0 * L * L))
             * std::cos(0.5 * odd * M_PI * x / L);
    }
    return c0 - 4.0 * c0 / M_PI * s;
}

// classical unequal-BC sheet solution
inline double classic_finite_unequal(double c1, double c2, double D, double L,
                                     double x, double t, int terms = 400)
{
    double s = 0.0;
    for (int n = 1; n < terms; ++n) {
        s += (c2 * std::cos(n * M_PI) - c1) / n * std::sin(n * M_PI * x / L)
             * std::exp(-D * n * n * M_PI * M_PI * t / (L * L));
    }
    return c1 + (c2 - c1) * x / L + 2.0 / M_PI * s;
}

// composite Simpson, a deliberately naive reference integrator
template <typename F>
double simpson(F&& f, double a, double b, int n = 2000)
{
    if (n % 2 == 1)
        ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i)
        s += f(a + i * h) * ((i % 2 == 1) ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace oracles

#endif
