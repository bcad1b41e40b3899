#ifndef FRACDIFF_TYPES_HPP
#define FRACDIFF_TYPES_HPP

#include <stdexcept>
#include <string>

namespace fracdiff {

// Thrown when an argument lies outside the admissible range of an operation
// or of a validated order parameter.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A series hit its term cap with the cancellation guard tripped and no
// fallback representation applies.
class NonConvergence : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuadratureFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContourFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Mellin transform evaluated at a point outside the strip of convergence.
class StripViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownCheckName : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class Method {
    series,
    contour_inversion,
    asymptotic,
    quadrature,
    closed_form
};

const char* method_name(Method m);

// Scalar result with an error estimate and the method that produced it.
// err_estimate is an upper bound claim; the verification suite checks it
// against high precision oracles on sampled points.
struct EvalOutcome {
    double value = 0.0;
    double err_estimate = 0.0;
    Method method = Method::series;
    bool degraded_precision = false;  // order beyond the guaranteed band
    bool truncation_warning = false;  // series cap hit before the envelope bound
};

enum class OrderRole {
    mittag_leffler_order,  // nu > 0
    m_wright_order,        // nu in (0,1); nu > 0.65 flagged degraded
    error_fn_order,        // nu in (0,1)
    levy_order             // 2*mu in (0,2]
};

// Validated fractional order parameter. Construction outside the role's
// admissible interval throws DomainError.
class FracOrder {
public:
    static FracOrder mittag_leffler(double nu);
    static FracOrder m_wright(double nu);
    static FracOrder error_fn(double nu);
    static FracOrder levy(double two_mu);

    double value() const { return value_; }
    OrderRole role() const { return role_; }

    // True for M-Wright/error-function orders above 0.65, where only
    // degraded precision is guaranteed (superdiffusive band).
    bool degraded() const;

private:
    FracOrder(double v, OrderRole r) : value_(v), role_(r) {}
    double value_;
    OrderRole role_;
};

// Controls for series evaluation. cancellation_guard is the ratio of the
// largest intermediate magnitude to the result magnitude above which a
// series result is rejected.
struct SeriesControl {
    double rel_tol = 1e-12;
    double abs_tol = 1e-300;
    int max_terms = 2000;
    double cancellation_guard = 1e12;

    void validate() const;
};

}  // namespace fracdiff

#endif
