#ifndef SCATTER1D_RUNNER_HPP
#define SCATTER1D_RUNNER_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "scatter1d/config.hpp"

namespace scatter1d {

/// One row of the observables table (one sweep momentum).
struct ResultRow {
    double k = 0.0;
    double E = 0.0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    std::complex<double> f_plus, f_minus;
    double sigma_plus = 0.0, sigma_minus = 0.0, sigma_tot = 0.0;
    double reflection = 0.0, transmission = 0.0;
    double optical_residual_13 = 0.0, optical_residual_14 = 0.0;
    double unitarity_residual = 0.0;
    double condition_estimate = 0.0;
    std::string warning; // empty when clean
};

/// Header of the observables CSV, in emission order.
extern const char* const kResultColumns[];
extern const std::size_t kResultColumnCount;

/// Runs the sweep, possibly across threads (capped by SCATTER1D_THREADS),
/// and returns rows sorted by k. Phase shifts are unwrapped along the sweep.
std::vector<ResultRow> run_sweep(const RunConfig& config);

std::string format_results_csv(const std::vector<ResultRow>& rows, int precision);
nlohmann::json results_to_json(const std::vector<ResultRow>& rows);

struct ConvergenceRow {
    std::size_t n_grid = 0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    double diff_from_richest = 0.0;
};

struct ConvergenceStudy {
    double k = 0.0;
    std::vector<ConvergenceRow> rows;
    bool monotone = true;
};

/// Re-solves at each grid size in `n_list` (increasing, >= 3 entries) at the
/// sweep's first momentum and reports Cauchy differences from the richest grid.
ConvergenceStudy convergence_study(const RunConfig& config,
                                   const std::vector<std::size_t>& n_list);

/// Executes the configured tasks and writes every artifact under the output
/// directory. Returns 0 on success, 1 when the verify task reports failed
/// criteria. Throws ConfigError / NumericError / std::ios_base::failure.
int run_tasks(const RunConfig& config);

} // namespace scatter1d

#endif
