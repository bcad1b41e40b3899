#ifndef FRACDIFF_TRANSFORMS_HPP
#define FRACDIFF_TRANSFORMS_HPP

#include "fracdiff/types.hpp"

#include <complex>
#include <functional>

namespace fracdiff::transforms {

// Quadrature controls shared by the numerical transforms. tail_cutoff, when
// positive, truncates semi-infinite integrals at that point instead of
// requiring the tail to decay below tolerance (needed for spectra with
// non-integrable tails, where the truncated value is reported with a
// correspondingly large error allowance).
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_panels = 4000;
    double tail_cutoff = 0.0;

    void validate() const;
};

// integral_0^inf exp(-s t) f(t) dt, s > 0
double laplace_numeric(const std::function<double(double)>& f, double s,
                       const QuadratureSpec& q = {});

// integral_-inf^inf exp(+i k x) f(x) dx, split into cosine and sine parts;
// real result for even f, imaginary for odd f.
std::complex<double> fourier_numeric(const std::function<double(double)>& f,
                                     double k, const QuadratureSpec& q = {});

// integral_0^inf r^(s-1) f(r) dr for s inside the strip of convergence.
// Throws StripViolation when the integrand fails to decay at either end.
double mellin_numeric(const std::function<double(double)>& f, double s,
                      const QuadratureSpec& q = {});

// integral_0^inf k spectrum(k) J0(k r) dk; panels between consecutive J0
// zeros with epsilon acceleration of the alternating partial sums.
double hankel0_inverse(const std::function<double(double)>& spectrum, double r,
                       const QuadratureSpec& q = {});

// Bromwich integral on the fixed Talbot contour (Abate-Valko), nodes-point
// midpoint rule. F must be analytic to the right of the negative real axis.
double inv_laplace_contour(
    const std::function<std::complex<double>(std::complex<double>)>& F,
    double t, int nodes = 28);

}  // namespace fracdiff::transforms

#endif
