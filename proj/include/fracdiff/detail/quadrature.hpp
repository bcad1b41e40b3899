#ifndef FRACDIFF_DETAIL_QUADRATURE_HPP
#define FRACDIFF_DETAIL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace fracdiff::detail {

using Integrand = std::function<double(double)>;

struct PanelResult {
    double value = 0.0;
    double err = 0.0;
    double res_abs = 0.0;  // integral of |f|, for cancellation diagnostics
};

// 7/15 point Gauss-Kronrod rule on [a,b] with the QUADPACK error estimate.
PanelResult gk15(const Integrand& f, double a, double b);

struct QuadResult {
    double value = 0.0;
    double err = 0.0;
    int panels = 0;
    bool converged = false;
};

// Globally adaptive bisection, worst panel first.
QuadResult adaptive_gk(const Integrand& f, double a, double b,
                       double abs_tol, double rel_tol, int max_panels = 512);

// Integral over [a, inf) of a function with (eventually) decaying tail.
// Marches geometrically growing panels and stops once two consecutive
// panels fall below tolerance. converged=false if the budget runs out or
// the panel contributions keep growing.
QuadResult integrate_decaying(const Integrand& f, double a,
                              double abs_tol, double rel_tol,
                              int max_panels = 512, double first_len = 1.0);

// Wynn epsilon table over a sequence of partial sums; estimate() returns
// the most accelerated even column entry.
class WynnEpsilon {
public:
    void add(double partial_sum);
    double estimate() const { return best_; }
    double err() const { return err_; }
    int count() const { return n_; }

private:
    std::vector<double> diag_;
    double best_ = 0.0;
    double prev_best_ = 0.0;
    double err_ = 1e300;
    int n_ = 0;
};

}  // namespace fracdiff::detail

#endif
