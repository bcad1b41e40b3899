#ifndef FRACDIFF_SOLUTIONS_HPP
#define FRACDIFF_SOLUTIONS_HPP

#include "fracdiff/transforms.hpp"
#include "fracdiff/types.hpp"

#include <Eigen/Core>

namespace fracdiff::solutions {

enum class Regime {
    fickian,
    stretched_time,
    time_fractional,
    stretched_time_fractional,
    space_fractional
};

const char* regime_name(Regime r);

// Transport parameters with the regime coupling rules enforced:
// fickian has alpha = beta = 1; time_fractional has alpha = beta;
// stretched_time has beta = 1; stretched_time_fractional has beta in (0,1];
// space_fractional carries mu = beta/2 in (0,1].
struct TransportParams {
    double alpha = 1.0;
    double beta = 1.0;
    double D = 1.0;
    Regime regime = Regime::fickian;

    static TransportParams fickian(double D);
    static TransportParams stretched_time(double alpha, double D);
    static TransportParams time_fractional(double beta, double D);
    static TransportParams stretched_time_fractional(double alpha, double beta, double D);
    static TransportParams space_fractional(double mu, double D);

    double mu() const { return 0.5 * beta; }
    void validate() const;
};

enum class ProblemKind {
    plane_source,
    step_source,
    signaling,
    finite_equal_bc,
    finite_unequal_bc,
    radial2d_cauchy,
    space_frac_cauchy
};

const char* problem_name(ProblemKind k);

struct ProblemSpec {
    ProblemKind kind = ProblemKind::plane_source;
    double n_tot = 1.0;       // plane source mass
    double c0 = 0.0;          // boundary/plateau concentration
    double c1 = 0.0, c2 = 0.0;
    double length = 1.0;      // sheet half width (equal BC) or width (unequal BC)
    int series_terms = 256;

    void validate() const;
};

// Concentration over a space (or radius) x time grid with provenance.
struct Field {
    Eigen::ArrayXd x;
    Eigen::ArrayXd t;
    Eigen::MatrixXd c;  // c(i,j) at (x[i], t[j])
    ProblemSpec problem;
    TransportParams params;
    double truncation_error_estimate = 0.0;
};

// -- infinite and semi-infinite media ---------------------------------------

// N_tot / sqrt(4 D t^beta) * M_(beta/2)(|x| / sqrt(D t^beta))
EvalOutcome tf_plane_source(const TransportParams& p, double n_tot, double x, double t);

// (c0/2) * K_(beta/2)(x / sqrt(D t^beta)), step initial condition
EvalOutcome tf_step_source(const TransportParams& p, double c0, double x, double t);

// c0 * K_(beta/2)(x / sqrt(D t^beta)) on x >= 0, fixed boundary at x = 0
EvalOutcome tf_signaling(const TransportParams& p, double c0, double x, double t);

// -- finite plane sheet ------------------------------------------------------

// Equal fixed boundary values c0 at x = +-L, zero initial condition.
EvalOutcome tf_finite_equal(const TransportParams& p, double c0, double L,
                            double x, double t, int n_terms = 256);

// Fixed boundary values c1 at x = 0 and c2 at x = L, zero initial condition.
EvalOutcome tf_finite_unequal(const TransportParams& p, double c1, double c2,
                              double L, double x, double t, int n_terms = 256);

// -- other regimes -----------------------------------------------------------

// N_tot / sqrt(4 pi D t^alpha) * exp(-x^2 / (4 D t^alpha))
EvalOutcome st_gaussian(double alpha, double D, double n_tot, double x, double t);

// Green's function 1/sqrt(4 D t^alpha) * M_(beta/2)(|x| / sqrt(D t^alpha))
EvalOutcome stf_green(double alpha, double beta, double D, double x, double t);

// c0 * K_(beta/2)(x / sqrt(D t^alpha)) on x >= 0
EvalOutcome stf_signaling(double alpha, double beta, double D, double c0,
                          double x, double t);

// Radially symmetric planar Cauchy problem, inverse zeroth-order Hankel
// transform of the Mittag-Leffler spectrum with the 1/(2 pi) polar factor.
EvalOutcome radial2d_cauchy(double beta, double D, double r, double t,
                            const transforms::QuadratureSpec& q = {});

// (D t)^(-1/(2 mu)) * L0_(2 mu)(x / (D t)^(1/(2 mu))), Riesz space-fractional
EvalOutcome space_frac_cauchy(double mu, double D, double x, double t);

// -- kernel translation table -------------------------------------------------

enum class KernelEntry {
    gaussian_kernel,
    error_function,
    comp_error_function,
    temporal_propagator
};

struct KernelArgs {
    double x = 0.0;       // spatial argument (kernel/error function rows)
    double lambda = 1.0;  // spatial eigenvalue (temporal propagator row)
    double D = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
    double t = 1.0;
};

// Evaluates the target regime's column of the translation table for the
// given entry; from == to is the identity, and the fickian column with
// alpha = beta = 1 is the classical form.
EvalOutcome translate_kernel(KernelEntry entry, Regime from, Regime to,
                             const KernelArgs& args);

// Mean squared displacement of the regime's Green's function at time t.
// Rejects the space-fractional regime (divergent second moment for mu < 1).
EvalOutcome msd(const TransportParams& p, double t);

// Evaluate one cataloged problem over a grid.
Field solve_field(const ProblemSpec& spec, const TransportParams& p,
                  const Eigen::ArrayXd& x, const Eigen::ArrayXd& t,
                  const transforms::QuadratureSpec& q = {});

}  // namespace fracdiff::solutions

#endif
