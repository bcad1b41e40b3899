#ifndef FRACDIFF_SPECFUN_HPP
#define FRACDIFF_SPECFUN_HPP

#include "fracdiff/types.hpp"

namespace fracdiff::specfun {

// One parameter Mittag-Leffler function E_nu(z) = sum z^n / Gamma(nu n + 1).
// Series for small |z|; for large negative z the Bromwich inversion of
// s^(nu-1)/(s^nu + |z|) collapsed onto the branch cut (a monotone spectral
// integral), plus the conjugate pole pair for nu in (1,2].
EvalOutcome mittag_leffler(const FracOrder& nu, double z,
                           const SeriesControl& ctrl = {});

// Two parameter generalization, sum z^n / Gamma(nu n + mu).
EvalOutcome mittag_leffler_two(double nu, double mu, double z,
                               const SeriesControl& ctrl = {});

// M-Wright (Mainardi) function M_nu(z) for z >= 0, nu in (0,1).
// Series while the cancellation metric stays small, otherwise a saddle
// point deformation of the Hankel loop integral.
EvalOutcome m_wright(const FracOrder& nu, double z,
                     const SeriesControl& ctrl = {});

// Fractional error function N_nu(z) = integral of M_nu(|xi|) from 0 to z.
// Odd in z by construction.
EvalOutcome frac_erf(const FracOrder& nu, double z,
                     const SeriesControl& ctrl = {});

// Fractional complementary error function K_nu(z) = 1 - N_nu(z), computed
// exactly as that difference so N + K = 1 holds identically.
EvalOutcome frac_erfc(const FracOrder& nu, double z,
                      const SeriesControl& ctrl = {});

// Symmetric Levy stable density of order 2*mu in (0,2]:
//   L(x) = (1/pi) * integral_0^inf cos(k x) exp(-k^(2 mu)) dk
// Oscillatory panel quadrature; power tail series for large |x|.
EvalOutcome levy_stable_sym(const FracOrder& two_mu, double x);

namespace detail {

struct SeriesEval {
    EvalOutcome outcome;
    double cancellation = 1.0;  // peak magnitude over result magnitude
    bool converged = false;
    bool overflowed = false;
};

// The two printed series forms of M_nu and the contour path, exposed for
// the verification harness.
SeriesEval m_wright_series_sine(double nu, double z, const SeriesControl& ctrl);
SeriesEval m_wright_series_rgamma(double nu, double z, const SeriesControl& ctrl);
EvalOutcome m_wright_contour(double nu, double z, int nodes = 72);

SeriesEval mittag_leffler_series(double nu, double mu, double z,
                                 const SeriesControl& ctrl);
// branch cut integral, valid for 0 < nu < 2 (nu != 1), z < 0
EvalOutcome mittag_leffler_spectral(double nu, double mu, double z);
// large negative z expansion, first few reciprocal powers
EvalOutcome mittag_leffler_asymptotic(double nu, double z);

// Saddle point estimate of the tail mass integral of M_nu beyond z.
double m_wright_tail_bound(double nu, double z);

// Convergent (2mu < 2) power tail series of the symmetric stable density.
EvalOutcome levy_tail_series(double alpha, double x);

}  // namespace detail

}  // namespace fracdiff::specfun

#endif
