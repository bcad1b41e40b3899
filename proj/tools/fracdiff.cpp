// fracdiff: evaluate fractional special functions, solve the cataloged
// anomalous-diffusion problems onto grids, run the identity verification
// suite, and emit figure-reproduction data as CSV.

#include "fracdiff/solutions.hpp"
#include "fracdiff/specfun.hpp"
#include "fracdiff/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace sf = fracdiff::specfun;
namespace sol = fracdiff::solutions;
namespace vf = fracdiff::verify;
using fracdiff::DomainError;
using fracdiff::FracOrder;

namespace {

struct GridSpec {
    double start = 0.0;
    double stop = 1.0;
    double step = 0.1;

    std::vector<double> points() const
    {
        const double span = (stop - start) / step;
        const auto n = static_cast<long long>(std::floor(span + 1e-9)) + 1;
        std::vector<double> pts;
        pts.reserve(static_cast<size_t>(n));
        for (long long i = 0; i < n; ++i) {
            double x = start + step * static_cast<double>(i);
            if (x > stop)
                x = stop;  // keep accumulated rounding inside the range
            pts.push_back(x);
        }
        return pts;
    }
};

GridSpec parse_grid(const std::string& text)
{
    GridSpec g;
    char extra = 0;
    if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &g.start, &g.stop, &g.step, &extra) != 3)
        throw DomainError("grid must be start:stop:step, got '" + text + "'");
    if (!(g.start < g.stop))
        throw DomainError("grid start must be < stop");
    if (!(g.step > 0.0))
        throw DomainError("grid step must be > 0");
    if ((g.stop - g.start) / g.step > 1e7)
        throw DomainError("grid too fine (more than 1e7 points)");
    return g;
}

std::vector<double> parse_list(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stod(item));
    }
    if (out.empty())
        throw DomainError("empty list: '" + text + "'");
    return out;
}

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

constexpr int kExitOk = 0;
constexpr int kExitChecksFailed = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitEvalFailure = 3;

// ------------------------------------------------------------------- eval --

int cmd_eval(const std::string& function, double nu, const std::string& grid_text)
{
    const GridSpec grid = parse_grid(grid_text);
    std::vector<double> xs = grid.points();

    std::function<fracdiff::EvalOutcome(double)> f;
    if (function == "ml") {
        const auto ord = FracOrder::mittag_leffler(nu);
        f = [ord](double x) { return sf::mittag_leffler(ord, x); };
    } else if (function == "mwright") {
        const auto ord = FracOrder::m_wright(nu);
        f = [ord](double x) { return sf::m_wright(ord, std::fabs(x)); };
    } else if (function == "fracerf") {
        const auto ord = FracOrder::error_fn(nu);
        f = [ord](double x) { return sf::frac_erf(ord, x); };
    } else if (function == "fracerfc") {
        const auto ord = FracOrder::error_fn(nu);
        f = [ord](double x) { return sf::frac_erfc(ord, x); };
    } else if (function == "levy") {
        const auto ord = FracOrder::levy(nu);
        f = [ord](double x) { return sf::levy_stable_sym(ord, x); };
    } else {
        throw DomainError("unknown function '" + function
                          + "' (ml, mwright, fracerf, fracerfc, levy)");
    }

    std::printf("x,value,err_estimate,method\n");
    for (double x : xs) {
        const fracdiff::EvalOutcome o = f(x);
        std::printf("%s,%s,%s,%s\n", num(x).c_str(), num(o.value).c_str(),
                    num(o.err_estimate).c_str(), fracdiff::method_name(o.method));
    }
    return kExitOk;
}

// ------------------------------------------------------------------ solve --

struct SolveOptions {
    std::string problem;
    double alpha = -1.0;  // < 0 means "not given"
    double beta = 1.0;
    double mu = 1.0;
    double D = 1.0;
    double n_tot = 1.0;
    double c0 = 1.0;
    double c1 = 1.0;
    double c2 = 0.0;
    double L = 1.0;
    int series_terms = 256;
    std::string x_grid = "-5:5:0.1";
    std::string t_list = "1";
};

int cmd_solve(const SolveOptions& opt)
{
    const GridSpec xg = parse_grid(opt.x_grid);
    const std::vector<double> xs = xg.points();
    const std::vector<double> ts = parse_list(opt.t_list);

    sol::ProblemSpec spec;
    sol::TransportParams params;
    const double alpha = (opt.alpha > 0.0) ? opt.alpha : opt.beta;

    auto pick_params = [&]() {
        if (alpha == opt.beta)
            return (opt.beta == 1.0) ? sol::TransportParams::fickian(opt.D)
                                     : sol::TransportParams::time_fractional(opt.beta, opt.D);
        if (opt.beta == 1.0)
            return sol::TransportParams::stretched_time(alpha, opt.D);
        return sol::TransportParams::stretched_time_fractional(alpha, opt.beta, opt.D);
    };

    if (opt.problem == "plane-source") {
        spec.kind = sol::ProblemKind::plane_source;
        spec.n_tot = opt.n_tot;
        params = pick_params();
    } else if (opt.problem == "step-source") {
        spec.kind = sol::ProblemKind::step_source;
        spec.c0 = opt.c0;
        if (alpha != opt.beta)
            throw DomainError("step-source is cataloged for the time-fractional "
                              "regime (alpha = beta)");
        params = pick_params();
    } else if (opt.problem == "signaling") {
        spec.kind = sol::ProblemKind::signaling;
        spec.c0 = opt.c0;
        params = pick_params();
    } else if (opt.problem == "finite-equal") {
        spec.kind = sol::ProblemKind::finite_equal_bc;
        spec.c0 = opt.c0;
        spec.length = opt.L;
        spec.series_terms = opt.series_terms;
        if (alpha != opt.beta)
            throw DomainError("finite-equal is cataloged for the time-fractional "
                              "regime (alpha = beta)");
        params = pick_params();
    } else if (opt.problem == "finite-unequal") {
        spec.kind = sol::ProblemKind::finite_unequal_bc;
        spec.c1 = opt.c1;
        spec.c2 = opt.c2;
        spec.length = opt.L;
        spec.series_terms = opt.series_terms;
        if (alpha != opt.beta)
            throw DomainError("finite-unequal is cataloged for the time-fractional "
                              "regime (alpha = beta)");
        params = pick_params();
    } else if (opt.problem == "radial2d") {
        spec.kind = sol::ProblemKind::radial2d_cauchy;
        params = (opt.beta == 1.0) ? sol::TransportParams::fickian(opt.D)
                                   : sol::TransportParams::time_fractional(opt.beta, opt.D);
    } else if (opt.problem == "space-frac") {
        spec.kind = sol::ProblemKind::space_frac_cauchy;
        params = sol::TransportParams::space_fractional(opt.mu, opt.D);
    } else {
        throw DomainError("unknown problem '" + opt.problem + "'");
    }

    Eigen::ArrayXd x(static_cast<Eigen::Index>(xs.size()));
    for (size_t i = 0; i < xs.size(); ++i)
        x[static_cast<Eigen::Index>(i)] = xs[i];
    Eigen::ArrayXd t(static_cast<Eigen::Index>(ts.size()));
    for (size_t i = 0; i < ts.size(); ++i)
        t[static_cast<Eigen::Index>(i)] = ts[i];

    const sol::Field field = sol::solve_field(spec, params, x, t);

    std::printf("# problem: %s\n", sol::problem_name(spec.kind));
    std::printf("# regime: %s alpha=%s beta=%s D=%s\n", sol::regime_name(params.regime),
                num(params.alpha).c_str(), num(params.beta).c_str(), num(params.D).c_str());
    std::printf("# params: ntot=%s c0=%s c1=%s c2=%s L=%s series_terms=%d\n",
                num(spec.n_tot).c_str(), num(spec.c0).c_str(), num(spec.c1).c_str(),
                num(spec.c2).c_str(), num(spec.length).c_str(), spec.series_terms);
    std::printf("# truncation_error_estimate: %s\n",
                num(field.truncation_error_estimate).c_str());
    std::printf("x,t,c\n");
    for (Eigen::Index j = 0; j < field.t.size(); ++j)
        for (Eigen::Index i = 0; i < field.x.size(); ++i)
            std::printf("%s,%s,%s\n", num(field.x[i]).c_str(), num(field.t[j]).c_str(),
                        num(field.c(i, j)).c_str());
    return kExitOk;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(bool all, const std::vector<std::string>& only,
               const std::string& json_path,
               const std::vector<std::string>& tol_overrides)
{
    vf::TolOverrides overrides;
    for (const auto& spec : tol_overrides) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos)
            throw DomainError("tolerance override must be name=value");
        overrides[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    }

    std::vector<vf::CheckResult> results;
    if (all) {
        results = vf::run_full_suite(overrides);
    } else {
        std::set<std::string> selection(only.begin(), only.end());
        results = vf::run_identity_suite(selection, overrides);
    }

    int failed = 0;
    for (const auto& r : results) {
        if (!r.passed)
            ++failed;
        std::printf("%s %-44s abs_err=%.3g tol=%.3g\n", r.passed ? "PASS" : "FAIL",
                    r.name.c_str(), r.abs_err, r.tol);
    }
    std::printf("# total=%zu passed=%zu failed=%d\n", results.size(),
                results.size() - failed, failed);

    if (!json_path.empty()) {
        std::ofstream os(json_path);
        if (!os)
            throw DomainError("cannot write JSON report to " + json_path);
        os << vf::report_json(results) << "\n";
    }
    return failed == 0 ? kExitOk : kExitChecksFailed;
}

// ----------------------------------------------------------------- figure --

void emit_curve_rows(const char* label_col, double label, const std::vector<double>& xs,
                     double t, const std::function<double(double)>& f)
{
    (void)label_col;
    for (double x : xs)
        std::printf("%s,%s,%s,%s\n", num(label).c_str(), num(x).c_str(), num(t).c_str(),
                    num(f(x)).c_str());
}

int cmd_figure(const std::string& id)
{
    const std::vector<double> betas = {0.25, 0.5, 0.75, 1.0};
    auto grid = [](double a, double b, double h) {
        const int n = static_cast<int>(std::lround((b - a) / h));
        std::vector<double> v;
        v.reserve(n + 1);
        for (int i = 0; i <= n; ++i)
            v.push_back(a + (b - a) * i / n);  // exact endpoints
        return v;
    };

    if (id == "fig2" || id == "fig3") {
        const bool plane = (id == "fig2");
        std::printf("# %s: %s, D=1, %s, t=1, beta in {0.25,0.5,0.75,1}\n", id.c_str(),
                    plane ? "plane_source" : "step_source",
                    plane ? "N_tot=1" : "c0=1");
        std::printf("beta,x,t,c\n");
        for (double b : betas) {
            const auto p = (b == 1.0) ? sol::TransportParams::fickian(1.0)
                                      : sol::TransportParams::time_fractional(b, 1.0);
            emit_curve_rows("beta", b, grid(-5.0, 5.0, 0.05), 1.0, [&](double x) {
                return plane ? sol::tf_plane_source(p, 1.0, x, 1.0).value
                             : sol::tf_step_source(p, 1.0, x, 1.0).value;
            });
        }
        return kExitOk;
    }
    if (id == "fig4") {
        std::printf("# fig4: signaling, c0=1, D=1, t=1, beta in {0.25,0.5,0.75,1}\n");
        std::printf("beta,x,t,c\n");
        for (double b : betas) {
            const auto p = (b == 1.0) ? sol::TransportParams::fickian(1.0)
                                      : sol::TransportParams::time_fractional(b, 1.0);
            emit_curve_rows("beta", b, grid(0.0, 5.0, 0.05), 1.0, [&](double x) {
                return sol::tf_signaling(p, 1.0, x, 1.0).value;
            });
        }
        return kExitOk;
    }
    if (id == "fig5") {
        std::printf("# fig5: finite_equal_bc, c0=1, D=1, L=1, t=1, beta in {0.25,0.5,0.75,1}\n");
        std::printf("beta,x,t,c\n");
        for (double b : betas) {
            const auto p = (b == 1.0) ? sol::TransportParams::fickian(1.0)
                                      : sol::TransportParams::time_fractional(b, 1.0);
            emit_curve_rows("beta", b, grid(-1.0, 1.0, 0.02), 1.0, [&](double x) {
                return sol::tf_finite_equal(p, 1.0, 1.0, x, 1.0, 512).value;
            });
        }
        return kExitOk;
    }
    if (id == "fig6") {
        std::printf("# fig6: finite_unequal_bc, c1=1, c2=0.1, D=0.1, L=1, t=1, "
                    "beta in {0.25,0.5,0.75,1}\n");
        std::printf("beta,x,t,c\n");
        for (double b : betas) {
            const auto p = (b == 1.0) ? sol::TransportParams::fickian(0.1)
                                      : sol::TransportParams::time_fractional(b, 0.1);
            emit_curve_rows("beta", b, grid(0.0, 1.0, 0.01), 1.0, [&](double x) {
                return sol::tf_finite_unequal(p, 1.0, 0.1, 1.0, x, 1.0, 512).value;
            });
        }
        return kExitOk;
    }
    if (id == "fig7" || id == "fig8") {
        const bool green = (id == "fig7");
        const std::vector<std::pair<double, double>> ab = {
            {0.5, 0.5}, {0.5, 1.0}, {1.0, 0.5}, {1.0, 1.0}, {1.5, 0.5}, {1.5, 1.0}};
        std::printf("# %s: %s, D=1, t=1, (alpha,beta) grid {0.5,1,1.5}x{0.5,1}\n",
                    id.c_str(), green ? "stf_green" : "stf_signaling (c0=1)");
        std::printf("alpha,beta,x,t,c\n");
        for (auto [a, b] : ab) {
            const auto xs = green ? grid(-5.0, 5.0, 0.05) : grid(0.0, 5.0, 0.05);
            for (double x : xs) {
                const double c = green ? sol::stf_green(a, b, 1.0, x, 1.0).value
                                       : sol::stf_signaling(a, b, 1.0, 1.0, x, 1.0).value;
                std::printf("%s,%s,%s,1,%s\n", num(a).c_str(), num(b).c_str(),
                            num(x).c_str(), num(c).c_str());
            }
        }
        return kExitOk;
    }
    if (id == "appB") {
        std::printf("# appB: superdiffusive plane_source, N_tot=1, D=1, t=1, "
                    "beta in {1,1.1,1.2,1.3}\n");
        std::printf("beta,x,t,c\n");
        for (double b : {1.0, 1.1, 1.2, 1.3}) {
            const auto p = (b == 1.0) ? sol::TransportParams::fickian(1.0)
                                      : sol::TransportParams::time_fractional(b, 1.0);
            emit_curve_rows("beta", b, grid(-5.0, 5.0, 0.05), 1.0, [&](double x) {
                return sol::tf_plane_source(p, 1.0, x, 1.0).value;
            });
        }
        return kExitOk;
    }
    if (id == "appC") {
        std::printf("# appC: space_frac_cauchy, D=5, t=1, mu in {1, 0.5}\n");
        std::printf("mu,x,t,c\n");
        for (double mu : {1.0, 0.5}) {
            emit_curve_rows("mu", mu, grid(-5.0, 5.0, 0.05), 1.0, [&](double x) {
                return sol::space_frac_cauchy(mu, 5.0, x, 1.0).value;
            });
        }
        return kExitOk;
    }
    throw DomainError("unknown figure id '" + id + "'");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fractional special functions and anomalous-diffusion solutions"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a special function on a grid");
    std::string eval_fn;
    double eval_nu = 0.5;
    std::string eval_grid = "0:1:0.1";
    eval->add_option("function", eval_fn, "ml | mwright | fracerf | fracerfc | levy")
        ->required();
    eval->add_option("--nu", eval_nu, "order (2*mu for levy)")->required();
    eval->add_option("--x", eval_grid, "grid start:stop:step")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "evaluate a cataloged problem on a grid");
    SolveOptions sopt;
    solve->add_option("problem", sopt.problem,
                      "plane-source | step-source | signaling | finite-equal | "
                      "finite-unequal | radial2d | space-frac")
        ->required();
    solve->add_option("--alpha", sopt.alpha, "stretch exponent (defaults to beta)");
    solve->add_option("--beta", sopt.beta, "fractional order");
    solve->add_option("--mu", sopt.mu, "space-fractional order");
    solve->add_option("--D", sopt.D, "generalized diffusivity");
    solve->add_option("--ntot", sopt.n_tot, "plane source mass");
    solve->add_option("--c0", sopt.c0, "boundary/plateau concentration");
    solve->add_option("--c1", sopt.c1, "left boundary concentration");
    solve->add_option("--c2", sopt.c2, "right boundary concentration");
    solve->add_option("--L", sopt.L, "sheet half width or width");
    solve->add_option("--series-terms", sopt.series_terms, "finite-domain truncation");
    solve->add_option("--x", sopt.x_grid, "grid start:stop:step (or --r for radial)");
    solve->add_option("--r", sopt.x_grid, "radial grid start:stop:step");
    solve->add_option("--t", sopt.t_list, "comma separated times");

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity verification suite");
    bool verify_all = false;
    std::vector<std::string> verify_only;
    std::string verify_json;
    std::vector<std::string> verify_tols;
    verify->add_flag("--all", verify_all, "run every check");
    verify->add_option("--only", verify_only, "check name (repeatable)");
    verify->add_option("--json", verify_json, "write the JSON report here");
    verify->add_option("--tol", verify_tols, "override name=tolerance (repeatable)");

    // figure
    auto* figure = app.add_subcommand("figure", "emit figure-reproduction CSV data");
    std::string figure_id;
    figure->add_option("id", figure_id, "fig2..fig8 | appB | appC")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArgs;
    }

    try {
        if (eval->parsed())
            return cmd_eval(eval_fn, eval_nu, eval_grid);
        if (solve->parsed())
            return cmd_solve(sopt);
        if (verify->parsed()) {
            if (!verify_all && verify_only.empty()) {
                std::cerr << "verify: pass --all or --only NAME\n";
                return kExitBadArgs;
            }
            return cmd_verify(verify_all, verify_only, verify_json, verify_tols);
        }
        if (figure->parsed())
            return cmd_figure(figure_id);
    } catch (const fracdiff::UnknownCheckName& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    } catch (const fracdiff::QuadratureFailure& e) {
        std::cerr << "evaluation failure: " << e.what() << "\n";
        return kExitEvalFailure;
    } catch (const fracdiff::NonConvergence& e) {
        std::cerr << "evaluation failure: " << e.what() << "\n";
        return kExitEvalFailure;
    } catch (const fracdiff::ContourFailure& e) {
        std::cerr << "evaluation failure: " << e.what() << "\n";
        return kExitEvalFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArgs;
    }
    return kExitBadArgs;
}
