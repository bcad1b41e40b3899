#ifndef FRACDIFF_FRACCALC_HPP
#define FRACDIFF_FRACCALC_HPP

#include "fracdiff/types.hpp"

#include <Eigen/Core>

namespace fracdiff::fraccalc {

// Uniform-grid samples of a function of time, the substrate for the
// numerical fractional operators. t0 >= 0, dt > 0, at least two samples,
// all values finite.
struct SampledFunction {
    double t0 = 0.0;
    double dt = 1.0;
    Eigen::ArrayXd values;

    SampledFunction() = default;
    SampledFunction(double t0_, double dt_, Eigen::ArrayXd v);

    Eigen::Index size() const { return values.size(); }
    double time_at(Eigen::Index i) const { return t0 + dt * static_cast<double>(i); }
};

// Riemann-Liouville integral of order mu > 0 by product-trapezoid
// convolution weights (piecewise linear f, kernel integrated exactly).
// Requires f.t0 == 0; the output shares the input grid.
SampledFunction rl_integral(const SampledFunction& f, double mu);

// Riemann-Liouville derivative of order mu in (0,1): d/dt of the (1-mu)
// integral, central differences inside, second order one-sided stencils at
// the ends. The t=0 sample is one-sided and correspondingly less accurate.
SampledFunction rl_derivative(const SampledFunction& f, double mu);

// Caputo derivative of order beta in (0,1), L1 scheme (exact kernel
// integration against piecewise linear f), accuracy order 2-beta.
// The t=0 sample is defined by one-sided extrapolation.
SampledFunction caputo_derivative(const SampledFunction& f, double beta);

// The two printed forms of the generalized flux. The Riemann-Liouville
// derivative form is the one that satisfies mass balance (see the
// verification harness) and is the default; the integral form is kept
// selectable for comparison.
enum class FluxForm { rl_derivative, rl_integral };

// J = -D_beta * RL-D^(1-beta) grad_c  (default form), with beta = 1
// reducing exactly to the Fickian flux -D * grad_c.
SampledFunction generalized_flux(const SampledFunction& c_gradient, double beta,
                                 double d_beta,
                                 FluxForm form = FluxForm::rl_derivative);

}  // namespace fracdiff::fraccalc

#endif
