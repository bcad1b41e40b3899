#include "fracdiff/types.hpp"

#include <cmath>
#include <sstream>

namespace fracdiff {

const char* method_name(Method m)
{
    switch (m) {
        case Method::series: return "series";
        case Method::contour_inversion: return "contour_inversion";
        case Method::asymptotic: return "asymptotic";
        case Method::quadrature: return "quadrature";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

namespace {

[[noreturn]] void bad_order(const char* role, double v, const char* range)
{
    std::ostringstream os;
    os << role << " order " << v << " outside admissible range " << range;
    throw DomainError(os.str());
}

}  // namespace

FracOrder FracOrder::mittag_leffler(double nu)
{
    if (!(nu > 0.0) || !std::isfinite(nu))
        bad_order("mittag_leffler", nu, "(0, inf)");
    return FracOrder(nu, OrderRole::mittag_leffler_order);
}

FracOrder FracOrder::m_wright(double nu)
{
    if (!(nu > 0.0 && nu < 1.0)) {
        if (nu == 1.0)
            throw DomainError("m_wright order 1 rejected: the nu -> 1 limit is the "
                              "distribution delta(z - 1), not a function");
        bad_order("m_wright", nu, "(0, 1)");
    }
    return FracOrder(nu, OrderRole::m_wright_order);
}

FracOrder FracOrder::error_fn(double nu)
{
    if (!(nu > 0.0 && nu < 1.0))
        bad_order("error_fn", nu, "(0, 1)");
    return FracOrder(nu, OrderRole::error_fn_order);
}

FracOrder FracOrder::levy(double two_mu)
{
    if (!(two_mu > 0.0 && two_mu <= 2.0))
        bad_order("levy", two_mu, "(0, 2]");
    return FracOrder(two_mu, OrderRole::levy_order);
}

bool FracOrder::degraded() const
{
    return (role_ == OrderRole::m_wright_order || role_ == OrderRole::error_fn_order)
           && value_ > 0.65;
}

void SeriesControl::validate() const
{
    if (!(rel_tol > 0.0))
        throw DomainError("SeriesControl.rel_tol must be > 0");
    if (max_terms < 1)
        throw DomainError("SeriesControl.max_terms must be >= 1");
    if (!(cancellation_guard > 1.0))
        throw DomainError("SeriesControl.cancellation_guard must be > 1");
}

}  // namespace fracdiff
