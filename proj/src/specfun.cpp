#include "fracdiff/specfun.hpp"

#include "fracdiff/detail/math.hpp"
#include "fracdiff/detail/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fracdiff::specfun {

using fracdiff::detail::adaptive_gk;
using fracdiff::detail::integrate_decaying;
using fracdiff::detail::log_gamma_pos;
using fracdiff::detail::pi;
using fracdiff::detail::rgamma;
using fracdiff::detail::rgamma_log;
using fracdiff::detail::sin_pi;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double log_overflow = 700.0;

struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x)
    {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// Shared log-space series driver. Each term is sign_n * exp(logmag_n); the
// caller supplies both through a generator. Tracks the cancellation metric
// (peak intermediate magnitude over result magnitude).
template <typename TermGen>
detail::SeriesEval run_series(const SeriesControl& ctrl, TermGen&& term)
{
    detail::SeriesEval out;
    KahanSum sum;
    double sum_abs = 0.0;
    double peak = 0.0;
    double last = 0.0;
    int small_streak = 0;

    int n = 0;
    for (; n < ctrl.max_terms; ++n) {
        auto [sign, logmag] = term(n);
        if (logmag > log_overflow) {
            out.overflowed = true;
            break;
        }
        if (sign == 0.0)
            continue;  // structural zero (sine zero or gamma pole)
        const double t = sign * std::exp(logmag);
        sum.add(t);
        sum_abs += std::fabs(t);
        peak = std::max({peak, std::fabs(t), std::fabs(sum.s)});
        last = std::fabs(t);

        const double scale = std::max(std::fabs(sum.s), ctrl.abs_tol);
        if (n >= 4 && last <= ctrl.rel_tol * scale) {
            if (++small_streak >= 2) {
                ++n;
                out.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }

    out.outcome.value = sum.s;
    out.outcome.err_estimate = 8.0 * eps * sum_abs + 16.0 * eps * peak + 2.0 * last;
    out.outcome.method = Method::series;
    out.cancellation = peak / std::max(std::fabs(sum.s),
                                       std::numeric_limits<double>::min());
    return out;
}

// Saddle point of exp(sigma - z sigma^nu): sigma* = (nu z)^(1/(1-nu)).
double saddle_point(double nu, double z)
{
    return std::pow(nu * z, 1.0 / (1.0 - nu));
}

// Exponent of M_nu(z) at the saddle, phi(sigma*) = -(1-nu)/nu * sigma*.
double saddle_exponent(double nu, double z)
{
    return -(1.0 - nu) / nu * saddle_point(nu, z);
}

}  // namespace

namespace detail {

SeriesEval m_wright_series_sine(double nu, double z, const SeriesControl& ctrl)
{
    // M_nu(z) = (1/pi) sum (-z)^n / n! * Gamma(nu(n+1)) * sin(pi nu (n+1))
    const double logz = (z > 0.0) ? std::log(z) : -std::numeric_limits<double>::infinity();
    double log_nfact = 0.0;
    auto gen = [&](int n) -> std::pair<double, double> {
        if (n > 0)
            log_nfact += std::log(static_cast<double>(n));
        if (z == 0.0 && n > 0)
            return {0.0, -std::numeric_limits<double>::infinity()};
        const double w = nu * (n + 1.0);
        const double s = sin_pi(w);
        if (s == 0.0)
            return {0.0, -std::numeric_limits<double>::infinity()};
        const double zpart = (n == 0) ? 0.0 : n * logz;
        const double logmag = zpart - log_nfact + log_gamma_pos(w)
                              + std::log(std::fabs(s)) - std::log(pi);
        const double sign = ((n % 2 == 0) ? 1.0 : -1.0) * (s > 0.0 ? 1.0 : -1.0);
        return {sign, logmag};
    };
    return run_series(ctrl, gen);
}

SeriesEval m_wright_series_rgamma(double nu, double z, const SeriesControl& ctrl)
{
    // Literal reciprocal gamma form, sum (-z)^n / (n! Gamma(-nu n + 1 - nu)),
    // using the plain gamma at negative arguments. Kept as an independent
    // computational route for the series-form equivalence check.
    SeriesEval out;
    KahanSum sum;
    double peak = 0.0, sum_abs = 0.0, last = 0.0;
    double pow_z = 1.0, nfact = 1.0;
    int small_streak = 0;
    for (int n = 0; n < ctrl.max_terms; ++n) {
        if (n > 0) {
            pow_z *= -z;
            nfact *= n;
        }
        const double garg = 1.0 - nu * (n + 1.0);
        double t;
        if (garg <= 0.0 && garg == std::floor(garg)) {
            t = 0.0;  // pole of the denominator
        } else if (garg < -170.0) {
            out.converged = false;  // tgamma range exhausted
            break;
        } else {
            t = pow_z / (nfact * std::tgamma(garg));
        }
        if (!std::isfinite(t)) {
            out.overflowed = true;
            break;
        }
        sum.add(t);
        sum_abs += std::fabs(t);
        peak = std::max({peak, std::fabs(t), std::fabs(sum.s)});
        last = std::fabs(t);
        if (n >= 4 && last <= ctrl.rel_tol * std::max(std::fabs(sum.s), ctrl.abs_tol)) {
            if (++small_streak >= 2) {
                out.converged = true;
                break;
            }
        } else {
            small_streak = 0;
        }
    }
    out.outcome.value = sum.s;
    out.outcome.err_estimate = 2.0 * eps * sum_abs + 4.0 * eps * peak + 2.0 * last;
    out.outcome.method = Method::series;
    out.cancellation = peak / std::max(std::fabs(sum.s),
                                       std::numeric_limits<double>::min());
    return out;
}

EvalOutcome m_wright_contour(double nu, double z, int nodes)
{
    if (nodes < 8)
        nodes = 8;
    const double sigma_star = saddle_point(nu, z);
    const double a = std::max(sigma_star, 1.0);
    const double phi0 = a - z * std::pow(a, nu);

    if (phi0 < -745.0)
        return {0.0, 1e-300, Method::asymptotic, false, false};

    // Parabolic contour sigma(u) = a (1 + i u)^2 through the saddle; the
    // imaginary part of the integrand is even in u, so the midpoint rule on
    // [0, U] is the full-line trapezoid with its exponential convergence.
    auto re_phi = [&](double u) {
        const double rn = std::pow(a * (1.0 + u * u), nu);
        const double an = 2.0 * nu * std::atan(u);
        return a * (1.0 - u * u) - z * rn * std::cos(an);
    };
    double U = 0.5;
    while (U < 12.0 && re_phi(U) > phi0 - 46.0)
        U += 0.25;

    auto integrate = [&](int m) {
        const double h = U / m;
        double acc = 0.0;
        for (int j = 0; j < m; ++j) {
            const double u = (j + 0.5) * h;
            const double r = a * (1.0 + u * u);
            const double rn = std::pow(r, nu);
            const double an = 2.0 * nu * std::atan(u);
            const double re = a * (1.0 - u * u) - z * rn * std::cos(an);
            const double im = 2.0 * a * u - z * rn * std::sin(an);
            const double ew = std::exp(re - phi0);
            const double ang = im + an;
            acc += ew * rn * 2.0 * (u * std::sin(ang) + std::cos(ang))
                   / (1.0 + u * u) * h;
        }
        return acc / pi;
    };

    const double coarse = integrate((2 * nodes) / 3);
    const double fine = integrate(nodes);
    const double scale = std::exp(phi0);
    EvalOutcome out;
    out.value = scale * fine;
    out.err_estimate = 1.5 * std::fabs(fine - coarse) * scale
                       + 8.0 * eps * scale * (1.0 + std::pow(a, nu)) * U;
    out.method = Method::contour_inversion;
    if (!std::isfinite(out.value))
        throw ContourFailure("M-Wright contour produced a non-finite value");
    return out;
}

SeriesEval mittag_leffler_series(double nu, double mu, double z,
                                 const SeriesControl& ctrl)
{
    const double logaz = (z != 0.0) ? std::log(std::fabs(z))
                                    : -std::numeric_limits<double>::infinity();
    const double zsign = (z < 0.0) ? -1.0 : 1.0;
    auto gen = [&](int n) -> std::pair<double, double> {
        if (z == 0.0 && n > 0)
            return {0.0, -std::numeric_limits<double>::infinity()};
        auto [gs, gl] = rgamma_log(nu * n + mu);
        if (gs == 0.0)
            return {0.0, -std::numeric_limits<double>::infinity()};
        const double sign = gs * ((n % 2 == 1 && zsign < 0.0) ? -1.0 : 1.0);
        return {sign, ((n == 0) ? 0.0 : n * logaz) + gl};
    };
    return run_series(ctrl, gen);
}

EvalOutcome mittag_leffler_spectral(double nu, double mu, double z)
{
    if (!(z < 0.0) || !(nu > 0.0) || nu == 1.0 || nu >= 2.0)
        throw DomainError("mittag_leffler_spectral needs z < 0 and nu in (0,2), nu != 1");
    if (!(mu < 1.0 + nu))
        throw NonConvergence("spectral route needs mu < 1 + nu");

    const double x = -z;
    const double cos_nu = fracdiff::detail::cos_pi(nu);
    const double s1 = sin_pi(1.0 - mu);
    const double s2 = sin_pi(1.0 + nu - mu);

    auto H = [&](double u) {
        const double un = std::pow(u, nu);
        const double dd = un * un + 2.0 * un * x * cos_nu + x * x;
        return std::exp(-u) * (un * s1 + x * s2) / dd;
    };

    // [0,1] with the endpoint power u^(nu-mu) flattened exactly
    const double p = nu - mu;  // > -1
    auto head = [&](double w) {
        const double u = std::pow(w, 1.0 / (1.0 + p));
        return H(u) / (1.0 + p);
    };
    auto hq = adaptive_gk(head, 0.0, 1.0, 1e-15, 1e-13, 600);

    auto tail_f = [&](double u) { return std::pow(u, p) * H(u); };
    auto tq = integrate_decaying(tail_f, 1.0, 1e-16, 1e-13, 1200, 4.0);
    if (!tq.converged && !hq.converged)
        throw QuadratureFailure("Mittag-Leffler spectral integral did not converge");

    double value = (hq.value + tq.value) / pi;
    double err = (hq.err + tq.err) / pi;

    if (nu > 1.0) {
        // conjugate pole pair on the principal branch
        const double x1n = std::pow(x, 1.0 / nu);
        const double re = x1n * std::cos(pi / nu);
        const double im = x1n * std::sin(pi / nu);
        const double amp = (2.0 / nu) * std::pow(x, (1.0 - mu) / nu) * std::exp(re);
        value += amp * std::cos(im + pi * (1.0 - mu) / nu);
        err += 8.0 * eps * std::fabs(amp);
    }

    return {value, err + 4.0 * eps * std::fabs(value), Method::quadrature, false, false};
}

EvalOutcome mittag_leffler_asymptotic(double nu, double z)
{
    // E_nu(z) ~ -sum_k z^(-k)/Gamma(1 - nu k) for z -> -inf, truncated at
    // the smallest term (zero terms at the Gamma poles are skipped)
    const double x = -z;
    double xp = 1.0;
    double sum = 0.0;
    double smallest = std::numeric_limits<double>::infinity();
    double trunc = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 40; ++k) {
        xp /= x;
        const double rg = rgamma(1.0 - nu * k);
        if (rg == 0.0)
            continue;
        const double term = ((k % 2 == 1) ? 1.0 : -1.0) * xp * rg;
        const double mag = std::fabs(term);
        if (mag >= smallest) {
            trunc = mag;
            break;
        }
        sum += term;
        smallest = mag;
        trunc = mag;
        if (mag < 1e-320)
            break;
    }
    return {sum, 1.5 * trunc + 4.0 * eps * std::fabs(sum),
            Method::asymptotic, false, false};
}

double m_wright_tail_bound(double nu, double z)
{
    const double sigma_star = saddle_point(nu, z);
    if (sigma_star < 2.0)
        return std::numeric_limits<double>::infinity();
    const double q = 1.0 / (1.0 - nu);
    const double expo = (1.0 - nu) / nu * sigma_star;
    const double m_est = std::pow(sigma_star, nu - 0.5) * std::exp(-expo)
                         / std::sqrt(2.0 * pi * (1.0 - nu));
    return 2.0 * m_est * z / (expo * q);
}

EvalOutcome levy_tail_series(double alpha, double x)
{
    // L_alpha(x) = (1/pi) sum_n (-1)^(n+1) Gamma(n alpha + 1)/n! sin(n pi alpha/2) x^(-n alpha - 1)
    // convergent for alpha < 1, asymptotic otherwise (truncated at the
    // smallest term).
    const double lx = std::log(x);
    KahanSum sum;
    double prev_mag = std::numeric_limits<double>::infinity();
    double trunc = 0.0;
    double peak = 0.0;
    bool asymptotic_cut = false;
    for (int n = 1; n <= 400; ++n) {
        const double s = sin_pi(0.5 * n * alpha);
        if (s == 0.0)
            continue;  // term sits on a sine zero
        const double logmag = log_gamma_pos(n * alpha + 1.0) - log_gamma_pos(n + 1.0)
                              - (n * alpha + 1.0) * lx;
        const double mag = std::exp(logmag) * std::fabs(s) / pi;
        if (alpha >= 1.0 && mag >= prev_mag) {
            trunc = mag;
            asymptotic_cut = true;
            break;
        }
        const double t = ((n % 2 == 1) ? 1.0 : -1.0) * (s > 0.0 ? 1.0 : -1.0) * mag;
        sum.add(t);
        peak = std::max(peak, mag);
        prev_mag = mag;
        if (mag < 1e-17 * std::max(std::fabs(sum.s), 1e-320)) {
            trunc = mag;
            break;
        }
        trunc = mag;
    }
    EvalOutcome out;
    out.value = sum.s;
    out.err_estimate = 2.0 * trunc + 4.0 * eps * peak + 1e-300;
    out.method = asymptotic_cut ? Method::asymptotic : Method::series;
    return out;
}

}  // namespace detail

EvalOutcome mittag_leffler(const FracOrder& nu_order, double z,
                           const SeriesControl& ctrl)
{
    if (nu_order.role() != OrderRole::mittag_leffler_order)
        throw DomainError("mittag_leffler expects a mittag_leffler_order parameter");
    ctrl.validate();
    if (!std::isfinite(z))
        throw DomainError("mittag_leffler: z must be finite");
    const double nu = nu_order.value();

    if (nu == 1.0) {
        const double v = std::exp(z);
        return {v, 4.0 * eps * v, Method::closed_form, false, false};
    }
    if (z == 0.0)
        return {1.0, eps, Method::closed_form, false, false};

    if (z <= -20.0 && nu < 2.0) {
        EvalOutcome asym = detail::mittag_leffler_asymptotic(nu, z);
        if (asym.err_estimate <= 2e-13 * std::fabs(asym.value) + 1e-300)
            return asym;
    }

    if (z >= -5.0) {
        auto se = detail::mittag_leffler_series(nu, 1.0, z, ctrl);
        if (se.overflowed && z > 0.0) {
            // genuine double overflow of an entire function of positive argument
            return {std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity(), Method::series, false, true};
        }
        const double gate = (z < 0.0 && nu < 2.0)
                                ? std::min(ctrl.cancellation_guard, 1e4)
                                : ctrl.cancellation_guard;
        if (se.converged && se.cancellation <= gate)
            return se.outcome;
        if (z > 0.0)
            throw NonConvergence("Mittag-Leffler series exhausted max_terms for z > 0");
    }

    if (z < 0.0 && nu < 2.0)
        return detail::mittag_leffler_spectral(nu, 1.0, z);

    // nu >= 2 with large |z|: retry the series with the guard as the judge
    auto se = detail::mittag_leffler_series(nu, 1.0, z, ctrl);
    if (se.converged && !se.overflowed && se.cancellation <= ctrl.cancellation_guard)
        return se.outcome;
    throw NonConvergence("Mittag-Leffler series rejected and no fallback applies");
}

EvalOutcome mittag_leffler_two(double nu, double mu, double z,
                               const SeriesControl& ctrl)
{
    if (!(nu > 0.0) || !std::isfinite(nu) || !std::isfinite(mu))
        throw DomainError("mittag_leffler_two: nu must be > 0");
    ctrl.validate();
    if (!std::isfinite(z))
        throw DomainError("mittag_leffler_two: z must be finite");

    if (z == 0.0) {
        const double v = rgamma(mu);
        return {v, 4.0 * eps * std::fabs(v), Method::closed_form, false, false};
    }

    const bool spectral_ok = (nu < 2.0 && nu != 1.0 && mu < 1.0 + nu);
    if (z >= -5.0) {
        auto se = detail::mittag_leffler_series(nu, mu, z, ctrl);
        if (se.overflowed && z > 0.0)
            return {std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity(), Method::series, false, true};
        const double gate = (z < 0.0 && spectral_ok)
                                ? std::min(ctrl.cancellation_guard, 1e4)
                                : ctrl.cancellation_guard;
        if (se.converged && se.cancellation <= gate)
            return se.outcome;
        if (z > 0.0)
            throw NonConvergence("two-parameter Mittag-Leffler series exhausted max_terms");
    }
    if (z < 0.0 && spectral_ok)
        return detail::mittag_leffler_spectral(nu, mu, z);
    if (z < 0.0 && nu == 1.0 && mu == 1.0) {
        const double v = std::exp(z);
        return {v, 4.0 * eps * v, Method::closed_form, false, false};
    }
    auto se = detail::mittag_leffler_series(nu, mu, z, ctrl);
    if (se.converged && !se.overflowed && se.cancellation <= ctrl.cancellation_guard)
        return se.outcome;
    throw NonConvergence("two-parameter Mittag-Leffler series rejected, no fallback");
}

EvalOutcome m_wright(const FracOrder& nu_order, double z, const SeriesControl& ctrl)
{
    if (nu_order.role() != OrderRole::m_wright_order
        && nu_order.role() != OrderRole::error_fn_order)
        throw DomainError("m_wright expects an m_wright_order parameter");
    ctrl.validate();
    const double nu = nu_order.value();
    if (!(z >= 0.0) || !std::isfinite(z))
        throw DomainError("m_wright requires z >= 0 (callers symmetrize via |x|)");
    const bool degraded = nu_order.degraded();

    if (z == 0.0) {
        const double v = rgamma(1.0 - nu);
        return {v, 4.0 * eps * v, Method::closed_form, degraded, false};
    }

    const double phi0 = saddle_exponent(nu, z);
    if (phi0 < -745.0)
        return {0.0, 1e-300, Method::asymptotic, degraded, false};

    // the series peak is O(1) or larger, so exp(-phi0) bounds the metric
    const bool series_hopeless = (z > 2.0 && phi0 < -30.0);
    if (!series_hopeless) {
        auto se = detail::m_wright_series_sine(nu, z, ctrl);
        if (se.converged && !se.overflowed
            && se.cancellation <= std::min(ctrl.cancellation_guard, 1e5)) {
            se.outcome.degraded_precision = degraded;
            return se.outcome;
        }
    }

    EvalOutcome c = detail::m_wright_contour(nu, z);
    c.degraded_precision = degraded;
    return c;
}

EvalOutcome frac_erf(const FracOrder& nu_order, double z, const SeriesControl& ctrl)
{
    if (nu_order.role() != OrderRole::error_fn_order
        && nu_order.role() != OrderRole::m_wright_order)
        throw DomainError("frac_erf expects an error_fn_order parameter");
    ctrl.validate();
    if (!std::isfinite(z))
        throw DomainError("frac_erf: z must be finite");
    const double nu = nu_order.value();
    const bool degraded = nu_order.degraded();
    const double az = std::fabs(z);
    const double sgn = (z < 0.0) ? -1.0 : 1.0;

    if (az == 0.0)
        return {0.0, 0.0, Method::closed_form, degraded, false};

    // term-wise integral of the M series: term_n(M) * |z| / (n+1)
    auto n_series = [&](double arg) {
        const double logaz = std::log(arg);
        double log_nfact = 0.0;
        auto gen = [&](int n) -> std::pair<double, double> {
            if (n > 0)
                log_nfact += std::log(static_cast<double>(n));
            const double w = nu * (n + 1.0);
            const double s = sin_pi(w);
            if (s == 0.0)
                return {0.0, -std::numeric_limits<double>::infinity()};
            const double logmag = (n + 1.0) * logaz - log_nfact
                                  - std::log(n + 1.0) + log_gamma_pos(w)
                                  + std::log(std::fabs(s)) - std::log(pi);
            const double sign = ((n % 2 == 0) ? 1.0 : -1.0) * (s > 0.0 ? 1.0 : -1.0);
            return {sign, logmag};
        };
        return run_series(ctrl, gen);
    };
    auto accepted = [&](const detail::SeriesEval& se) {
        return se.converged && !se.overflowed
               && se.cancellation <= std::min(ctrl.cancellation_guard, 1e5);
    };

    const double phi0 = saddle_exponent(nu, az);
    if (!(az > 2.0 && phi0 < -30.0)) {
        auto se = n_series(az);
        if (accepted(se)) {
            se.outcome.value *= sgn;
            se.outcome.degraded_precision = degraded;
            return se.outcome;
        }
    }

    const double tail = detail::m_wright_tail_bound(nu, az);
    if (tail < 1e-12)
        return {sgn * (1.0 - tail), 1.2 * tail + 1e-16, Method::asymptotic,
                degraded, false};

    // head by series at the largest trusted argument, the rest by
    // quadrature of M
    double z0 = az;
    detail::SeriesEval head;
    bool have_head = false;
    for (int i = 0; i < 16 && z0 > 0.5; ++i) {
        z0 *= 0.75;
        head = n_series(z0);
        if (accepted(head)) {
            have_head = true;
            break;
        }
    }
    double base = 0.0, base_err = 0.0;
    if (have_head) {
        base = head.outcome.value;
        base_err = head.outcome.err_estimate;
    } else {
        z0 = 0.0;
    }

    double worst_m_err = 0.0;
    auto f = [&](double y) {
        EvalOutcome m = m_wright(nu_order, y, ctrl);
        worst_m_err = std::max(worst_m_err, m.err_estimate);
        return m.value;
    };
    auto q = adaptive_gk(f, z0, az, 1e-12, 1e-11, 600);
    if (!q.converged)
        throw NonConvergence("frac_erf quadrature of M did not converge");
    return {sgn * (base + q.value),
            base_err + q.err + worst_m_err * (az - z0),
            Method::quadrature, degraded, false};
}

EvalOutcome frac_erfc(const FracOrder& nu_order, double z, const SeriesControl& ctrl)
{
    EvalOutcome n = frac_erf(nu_order, z, ctrl);
    EvalOutcome out = n;
    out.value = 1.0 - n.value;
    out.err_estimate = n.err_estimate + eps;
    return out;
}

EvalOutcome levy_stable_sym(const FracOrder& two_mu, double x)
{
    if (two_mu.role() != OrderRole::levy_order)
        throw DomainError("levy_stable_sym expects a levy_order parameter");
    if (!std::isfinite(x))
        throw DomainError("levy_stable_sym: x must be finite");
    const double alpha = two_mu.value();
    const double ax = std::fabs(x);

    if (alpha < 1.0 && ax > 0.0) {
        // the power tail series converges for every x when the order is
        // below 1; prefer it whenever its own cancellation stays mild
        EvalOutcome ts = detail::levy_tail_series(alpha, ax);
        if (ts.err_estimate <= 1e-12 + 1e-11 * std::fabs(ts.value))
            return ts;
    }
    if (alpha >= 1.0 && ax > 60.0)
        return detail::levy_tail_series(alpha, ax);

    const double kmax = std::pow(41.45, 1.0 / alpha);  // exp(-41.45) ~ 1e-18
    auto f = [&](double k) { return std::cos(k * ax) * std::exp(-std::pow(k, alpha)); };

    double value = 0.0, err = 0.0;
    if (ax * kmax <= 8.0 * pi) {
        auto q = adaptive_gk(f, 0.0, kmax, 1e-14, 1e-12, 2000);
        if (!q.converged)
            throw QuadratureFailure("levy_stable_sym quadrature did not converge");
        value = q.value;
        err = q.err;
    } else {
        // panels between the zeros of cos(k x)
        double lo = 0.0;
        double hi = 0.5 * pi / ax;
        int m = 0;
        bool done = false;
        int small_streak = 0;
        while (lo < kmax && m < 20000) {
            auto q = adaptive_gk(f, lo, std::min(hi, kmax), 1e-15, 1e-12, 64);
            value += q.value;
            err += q.err;
            if (std::fabs(q.value) < 1e-15) {
                if (++small_streak >= 2) {
                    done = true;
                    break;
                }
            } else {
                small_streak = 0;
            }
            lo = hi;
            hi += pi / ax;
            ++m;
        }
        if (!done && lo < kmax)
            throw QuadratureFailure("levy_stable_sym oscillatory sum exhausted its budget");
        err += 1e-15;
    }
    return {value / pi, err / pi + 4.0 * eps * std::fabs(value / pi),
            Method::quadrature, false, false};
}

}  // namespace fracdiff::specfun
