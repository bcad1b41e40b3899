#include "fracdiff/fraccalc.hpp"

#include "fracdiff/detail/math.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace fracdiff::fraccalc {

using fracdiff::detail::log_gamma_pos;

SampledFunction::SampledFunction(double t0_, double dt_, Eigen::ArrayXd v)
    : t0(t0_), dt(dt_), values(std::move(v))
{
    if (!(t0 >= 0.0))
        throw DomainError("SampledFunction: t0 must be >= 0");
    if (!(dt > 0.0))
        throw DomainError("SampledFunction: dt must be > 0");
    if (values.size() < 2)
        throw DomainError("SampledFunction: need at least 2 samples");
    if (!values.isFinite().all())
        throw DomainError("SampledFunction: all values must be finite");
}

namespace {

void require_origin(const SampledFunction& f, const char* op)
{
    if (f.t0 != 0.0) {
        std::ostringstream os;
        os << op << " requires samples starting at t = 0 (got t0 = " << f.t0 << ")";
        throw DomainError(os.str());
    }
}

}  // namespace

SampledFunction rl_integral(const SampledFunction& f, double mu)
{
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw DomainError("rl_integral: order mu must be > 0");
    require_origin(f, "rl_integral");

    const Eigen::Index n = f.size();
    const double p = mu + 1.0;
    const double scale = std::pow(f.dt, mu) * std::exp(-log_gamma_pos(mu + 2.0));

    // m^(mu+1) table
    std::vector<double> pw(static_cast<size_t>(n) + 1);
    for (Eigen::Index m = 0; m <= n; ++m)
        pw[static_cast<size_t>(m)] = std::pow(static_cast<double>(m), p);

    SampledFunction out = f;
    out.values.setZero();
    for (Eigen::Index k = 1; k < n; ++k) {
        const double kd = static_cast<double>(k);
        double acc = (pw[k - 1] - std::pow(kd, mu) * (kd - mu - 1.0)) * f.values[0];
        for (Eigen::Index j = 1; j < k; ++j) {
            const Eigen::Index m = k - j;
            acc += (pw[m + 1] - 2.0 * pw[m] + pw[m - 1]) * f.values[j];
        }
        acc += f.values[k];
        out.values[k] = scale * acc;
    }
    return out;
}

SampledFunction rl_derivative(const SampledFunction& f, double mu)
{
    if (!(mu > 0.0 && mu < 1.0))
        throw DomainError("rl_derivative: order mu must lie in (0,1)");
    require_origin(f, "rl_derivative");

    const SampledFunction g = rl_integral(f, 1.0 - mu);
    const Eigen::Index n = g.size();
    const double h = g.dt;

    SampledFunction out = f;
    out.values.setZero();
    if (n == 2) {
        const double d = (g.values[1] - g.values[0]) / h;
        out.values[0] = d;
        out.values[1] = d;
        return out;
    }
    out.values[0] = (-3.0 * g.values[0] + 4.0 * g.values[1] - g.values[2]) / (2.0 * h);
    for (Eigen::Index k = 1; k + 1 < n; ++k)
        out.values[k] = (g.values[k + 1] - g.values[k - 1]) / (2.0 * h);
    out.values[n - 1] = (3.0 * g.values[n - 1] - 4.0 * g.values[n - 2]
                         + g.values[n - 3]) / (2.0 * h);
    return out;
}

SampledFunction caputo_derivative(const SampledFunction& f, double beta)
{
    if (!(beta > 0.0 && beta < 1.0))
        throw DomainError("caputo_derivative: order beta must lie in (0,1)");
    require_origin(f, "caputo_derivative");

    const Eigen::Index n = f.size();
    const double q = 1.0 - beta;
    const double scale = std::pow(f.dt, -beta) * std::exp(-log_gamma_pos(2.0 - beta));

    std::vector<double> b(static_cast<size_t>(n));
    for (Eigen::Index m = 1; m < n; ++m)
        b[static_cast<size_t>(m)] = std::pow(static_cast<double>(m), q)
                                    - std::pow(static_cast<double>(m - 1), q);

    SampledFunction out = f;
    out.values.setZero();
    for (Eigen::Index k = 1; k < n; ++k) {
        double acc = 0.0;
        for (Eigen::Index j = 0; j < k; ++j)
            acc += b[k - j] * (f.values[j + 1] - f.values[j]);
        out.values[k] = scale * acc;
    }
    if (n >= 3)
        out.values[0] = 2.0 * out.values[1] - out.values[2];
    else
        out.values[0] = out.values[1];
    return out;
}

SampledFunction generalized_flux(const SampledFunction& c_gradient, double beta,
                                 double d_beta, FluxForm form)
{
    if (!(beta > 0.0 && beta <= 1.0))
        throw DomainError("generalized_flux: beta must lie in (0,1]");
    if (!(d_beta > 0.0))
        throw DomainError("generalized_flux: D_beta must be > 0");

    SampledFunction out = c_gradient;
    if (form == FluxForm::rl_derivative) {
        if (beta == 1.0) {
            out.values = -d_beta * c_gradient.values;
            return out;
        }
        out = rl_derivative(c_gradient, 1.0 - beta);
    } else {
        out = rl_integral(c_gradient, beta);
    }
    out.values *= -d_beta;
    return out;
}

}  // namespace fracdiff::fraccalc
