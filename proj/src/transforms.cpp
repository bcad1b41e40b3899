#include "fracdiff/transforms.hpp"

#include "fracdiff/detail/bessel.hpp"
#include "fracdiff/detail/math.hpp"
#include "fracdiff/detail/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace fracdiff::transforms {

using fracdiff::detail::adaptive_gk;
using fracdiff::detail::bessel_j0;
using fracdiff::detail::bessel_j0_zero;
using fracdiff::detail::integrate_decaying;
using fracdiff::detail::pi;
using fracdiff::detail::WynnEpsilon;

void QuadratureSpec::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("QuadratureSpec: tolerances must be > 0");
    if (max_panels < 4)
        throw DomainError("QuadratureSpec: max_panels too small");
}

double laplace_numeric(const std::function<double(double)>& f, double s,
                       const QuadratureSpec& q)
{
    q.validate();
    if (!(s > 0.0))
        throw DomainError("laplace_numeric: s must be > 0");

    auto g = [&](double t) { return std::exp(-s * t) * f(t); };
    auto r = integrate_decaying(g, 0.0, q.abs_tol, q.rel_tol, q.max_panels, 1.0 / s);
    if (!r.converged)
        throw QuadratureFailure("laplace_numeric: integrand tail did not decay");
    return r.value;
}

namespace {

// sum of half-period oscillatory panels with plain convergence first and
// epsilon acceleration as the fallback
double oscillatory_sum(const std::function<double(double)>& g,
                       const std::vector<double>& knots_then_period,
                       double period, double abs_tol, int max_panels,
                       const char* what)
{
    double lo = 0.0;
    double total = 0.0;
    double err = 0.0;
    WynnEpsilon acc;
    int small_streak = 0;

    size_t knot_i = 0;
    for (int m = 0; m < max_panels; ++m) {
        double hi;
        if (knot_i < knots_then_period.size())
            hi = knots_then_period[knot_i++];
        else
            hi = lo + period;
        auto p = adaptive_gk(g, lo, hi, abs_tol * 0.1, 1e-13, 48);
        total += p.value;
        err += p.err;
        acc.add(total);

        if (std::fabs(p.value) <= abs_tol * 0.25 && err <= abs_tol) {
            if (++small_streak >= 2)
                return total;
        } else {
            small_streak = 0;
        }
        if (acc.count() >= 12 && acc.err() <= std::max(abs_tol - err, abs_tol * 0.3))
            return acc.estimate();
        lo = hi;
    }
    throw QuadratureFailure(std::string(what) + ": oscillatory sum did not converge");
}

}  // namespace

std::complex<double> fourier_numeric(const std::function<double(double)>& f,
                                     double k, const QuadratureSpec& q)
{
    q.validate();
    auto even = [&](double x) { return f(x) + f(-x); };
    auto odd = [&](double x) { return f(x) - f(-x); };

    if (k == 0.0) {
        auto r = integrate_decaying(even, 0.0, q.abs_tol, q.rel_tol, q.max_panels, 1.0);
        if (!r.converged)
            throw QuadratureFailure("fourier_numeric: integrand did not decay");
        return {r.value, 0.0};
    }

    const double ak = std::fabs(k);
    const double half = pi / ak;
    auto gc = [&](double x) { return std::cos(ak * x) * even(x); };
    auto gs = [&](double x) { return std::sin(ak * x) * odd(x); };

    const double re = oscillatory_sum(gc, {0.5 * half}, half, q.abs_tol,
                                      q.max_panels, "fourier_numeric");
    const double im = oscillatory_sum(gs, {half}, half, q.abs_tol,
                                      q.max_panels, "fourier_numeric");
    return {re, (k > 0.0 ? im : -im)};
}

double mellin_numeric(const std::function<double(double)>& f, double s,
                      const QuadratureSpec& q)
{
    q.validate();
    // r = exp(-v) maps [0,1] to [0,inf): integrand exp(-s v) f(exp(-v))
    auto head = [&](double v) { return std::exp(-s * v) * f(std::exp(-v)); };
    auto hq = integrate_decaying(head, 0.0, 0.5 * q.abs_tol, q.rel_tol,
                                 q.max_panels / 2, 1.0);
    if (!hq.converged)
        throw StripViolation("mellin_numeric: no convergence at r -> 0 for this s");

    auto tail = [&](double r) { return std::pow(r, s - 1.0) * f(r); };
    auto tq = integrate_decaying(tail, 1.0, 0.5 * q.abs_tol, q.rel_tol,
                                 q.max_panels / 2, 1.0);
    if (!tq.converged)
        throw StripViolation("mellin_numeric: no convergence at r -> inf for this s");
    return hq.value + tq.value;
}

double hankel0_inverse(const std::function<double(double)>& spectrum, double r,
                       const QuadratureSpec& q)
{
    q.validate();
    if (!(r >= 0.0))
        throw DomainError("hankel0_inverse: r must be >= 0");

    auto g = [&](double k) { return k * spectrum(k) * bessel_j0(k * r); };

    if (r == 0.0) {
        if (q.tail_cutoff > 0.0) {
            auto p = adaptive_gk(g, 0.0, q.tail_cutoff, q.abs_tol, q.rel_tol,
                                 q.max_panels);
            return p.value;  // truncated integral by request
        }
        auto p = integrate_decaying(g, 0.0, q.abs_tol, q.rel_tol, q.max_panels, 1.0);
        if (!p.converged)
            throw QuadratureFailure("hankel0_inverse: spectrum tail does not decay at r = 0");
        return p.value;
    }

    // panels between consecutive J0 zeros
    double total = 0.0;
    double err = 0.0;
    int zero_index = 1;
    double lo = 0.0;
    WynnEpsilon acc;
    int small_streak = 0;
    const int budget = q.max_panels;
    for (int m = 0; m < budget; ++m) {
        const double hi = bessel_j0_zero(zero_index++) / r;
        auto p = adaptive_gk(g, lo, hi, q.abs_tol * 0.1, 1e-13,
                             std::max(32, budget / 64));
        total += p.value;
        err += p.err;
        acc.add(total);
        if (std::fabs(p.value) <= q.abs_tol * 0.25) {
            if (++small_streak >= 2)
                return total;
        } else {
            small_streak = 0;
        }
        if (acc.count() >= 10 && acc.err() <= std::max(q.abs_tol * 0.5, err * 0.5))
            return acc.estimate();
        if (q.tail_cutoff > 0.0 && hi >= q.tail_cutoff)
            return total;  // truncated integral by request
        lo = hi;
    }
    throw QuadratureFailure("hankel0_inverse: acceleration did not converge");
}

double inv_laplace_contour(
    const std::function<std::complex<double>(std::complex<double>)>& F,
    double t, int nodes)
{
    if (!(t > 0.0))
        throw DomainError("inv_laplace_contour: t must be > 0");
    if (nodes < 8)
        nodes = 8;

    auto talbot = [&](int m) {
        const double r = 2.0 * m / (5.0 * t);
        double sum = 0.5 * std::exp(r * t) * std::real(F(std::complex<double>(r, 0.0)));
        for (int j = 1; j < m; ++j) {
            const double theta = j * pi / m;
            const double cot = std::cos(theta) / std::sin(theta);
            const std::complex<double> s(r * theta * cot, r * theta);
            const double sigma = theta + (theta * cot - 1.0) * cot;
            const std::complex<double> w =
                std::exp(s * t) * F(s) * std::complex<double>(1.0, sigma);
            sum += std::real(w);
        }
        return sum * r / m;
    };

    const double v = talbot(nodes);
    if (!std::isfinite(v))
        throw ContourFailure("inv_laplace_contour: non-finite contour sum");
    return v;
}

}  // namespace fracdiff::transforms
