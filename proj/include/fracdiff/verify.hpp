#ifndef FRACDIFF_VERIFY_HPP
#define FRACDIFF_VERIFY_HPP

#include "fracdiff/solutions.hpp"
#include "fracdiff/types.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace fracdiff::verify {

// One tolerance-tagged identity evaluation. paper_anchor names the identity
// being checked (or carries an "analytic-only" tag when the statement has
// no finite numerical content).
struct CheckResult {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double tol = 0.0;
    bool passed = false;
    std::string paper_anchor;
};

using TolOverrides = std::map<std::string, double>;

// Registered check group names, sorted.
std::vector<std::string> check_names();

// Default per-check tolerances (the manifest).
std::map<std::string, double> default_tolerances();

// Run the named check groups; the empty selection yields the empty list.
// Unknown names throw UnknownCheckName. Results are sorted by name.
std::vector<CheckResult> run_identity_suite(const std::set<std::string>& selection,
                                            const TolOverrides& overrides = {});

// Everything.
std::vector<CheckResult> run_full_suite(const TolOverrides& overrides = {});

struct ResidualGrid {
    double x0 = -4.0;
    double x1 = 4.0;
    int nx = 81;
    double t1 = 0.8;
    int nt = 240;  // time steps; samples include t = 0
};

// Relative L2 norm of (fractional time derivative - D * second space
// difference) over the interior of the grid, with the Caputo derivative
// taken by the L1 scheme (classical central differences at beta = 1).
double pde_residual(const solutions::ProblemSpec& problem,
                    const solutions::TransportParams& p, const ResidualGrid& grid);

// Same residual on a caller-supplied field; field.t must start at 0 on a
// uniform grid (the initial condition row).
double pde_residual(const solutions::Field& field, const solutions::TransportParams& p);

// Total mass at each requested time for the conserving problems; throws
// DomainError for fixed-boundary (non conserving) problems.
std::vector<double> mass_balance(const solutions::ProblemSpec& problem,
                                 const solutions::TransportParams& p,
                                 const std::vector<double>& t_list);

// Machine readable report: {"checks": [...], "summary": {...}} as a string.
std::string report_json(const std::vector<CheckResult>& results);

}  // namespace fracdiff::verify

#endif
