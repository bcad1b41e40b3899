#include "fracdiff/detail/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace fracdiff::detail {

namespace {

// QUADPACK dqk15 abscissae and weights
const double xgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000
};
const double wgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728
};
const double wg[4] = {
    0.129484966168870, 0.279705391489277,
    0.381830050505119, 0.417959183673469
};

}  // namespace

PanelResult gk15(const Integrand& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double res_g = fc * wg[3];
    double res_k = fc * wgk[7];
    double res_abs = std::fabs(res_k);

    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * xgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1)
            res_g += wg[j / 2] * fsum;
        res_k += wgk[j] * fsum;
        res_abs += wgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }

    const double mean = 0.5 * res_k;
    double res_asc = wgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        res_asc += wgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));

    PanelResult out;
    out.value = res_k * half;
    out.res_abs = res_abs * std::fabs(half);
    res_asc *= std::fabs(half);

    double err = std::fabs((res_k - res_g) * half);
    if (res_asc != 0.0 && err != 0.0)
        err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
    out.err = err;
    return out;
}

QuadResult adaptive_gk(const Integrand& f, double a, double b,
                       double abs_tol, double rel_tol, int max_panels)
{
    struct Panel {
        double a, b, value, err;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    PanelResult first = gk15(f, a, b);
    std::priority_queue<Panel> heap;
    heap.push({a, b, first.value, first.err});

    double total = first.value;
    double total_err = first.err;
    int n = 1;

    auto tol = [&] { return std::max(abs_tol, rel_tol * std::fabs(total)); };

    while (total_err > tol() && n < max_panels) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval exhausted at machine resolution
            heap.push(worst);
            break;
        }
        PanelResult left = gk15(f, worst.a, mid);
        PanelResult right = gk15(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        heap.push({worst.a, mid, left.value, left.err});
        heap.push({mid, worst.b, right.value, right.err});
        ++n;
    }

    QuadResult out;
    out.value = total;
    out.err = total_err;
    out.panels = n;
    out.converged = total_err <= tol() * 1.001 + 1e-305;
    return out;
}

QuadResult integrate_decaying(const Integrand& f, double a,
                              double abs_tol, double rel_tol,
                              int max_panels, double first_len)
{
    QuadResult out;
    double lo = a;
    double len = first_len;
    int small_in_a_row = 0;
    int grow_in_a_row = 0;
    double prev_mag = 0.0;
    int budget = max_panels;

    while (budget > 0) {
        const double hi = lo + len;
        QuadResult piece = adaptive_gk(f, lo, hi, abs_tol * 0.25, rel_tol * 0.25,
                                       std::max(8, budget / 4));
        budget -= piece.panels;
        out.value += piece.value;
        out.err += piece.err;
        out.panels += piece.panels;

        const double mag = std::fabs(piece.value);
        const double goal = std::max(abs_tol, rel_tol * std::fabs(out.value));
        if (mag < 0.25 * goal) {
            if (++small_in_a_row >= 2) {
                out.err += mag;  // tail allowance
                out.converged = true;
                return out;
            }
        } else {
            small_in_a_row = 0;
        }
        grow_in_a_row = (mag > prev_mag * 1.05 && mag > goal) ? grow_in_a_row + 1 : 0;
        if (grow_in_a_row >= 8)
            break;  // not decaying
        prev_mag = mag;
        lo = hi;
        len *= 2.0;
    }
    out.converged = false;
    return out;
}

void WynnEpsilon::add(double s)
{
    std::vector<double> next(static_cast<size_t>(n_) + 1);
    next[0] = s;
    for (int j = 1; j <= n_; ++j) {
        const double denom = next[j - 1] - diag_[j - 1];
        double lower = (j >= 2) ? diag_[j - 2] : 0.0;
        if (denom == 0.0)
            next[j] = 1e300;
        else
            next[j] = lower + 1.0 / denom;
    }
    diag_ = std::move(next);
    ++n_;

    int best_col = (n_ - 1) - (n_ - 1) % 2;  // largest even column index
    prev_best_ = best_;
    best_ = diag_[best_col];
    if (n_ >= 3) {
        const double alt = diag_[std::max(0, best_col - 2)];
        err_ = std::fabs(best_ - alt) + std::fabs(best_ - prev_best_);
    }
}

}  // namespace fracdiff::detail
