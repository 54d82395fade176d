#ifndef SCATTER1D_ORACLE_HPP
#define SCATTER1D_ORACLE_HPP

#include <vector>

#include "scatter1d/potential.hpp"

namespace scatter1d {

/// Reference observables produced without integral equations: either the
/// closed-form delta potential results or direct Numerov integration of the
/// radial differential equation.
struct OracleResult {
    enum class Source { AnalyticDelta, Numerov };
    Source source = Source::Numerov;
    double k = 0.0;
    double delta0 = 0.0;
    double delta1 = 0.0;
    double reflection = 0.0;
    double transmission = 0.0;
    double sigma_tot = 0.0;
    std::vector<double> bound_energies;
    double richardson_error = 0.0; // |delta(h) - delta(h/2)|, worst channel
};

/// Delta potential: tan(delta0) = -lambda/(2k), delta1 = 0, closed-form
/// R, T, sigma_tot; bound state at -lambda^2/4 when lambda < 0.
OracleResult delta_closed_forms(double lambda, double k);

/// One Numerov pass at fixed step: integrates u'' = (V - k^2) u outward with
/// even/odd initial data and extracts delta_L at r_match = R + 2 pi / k from
/// a value + derivative fit.
OracleResult numerov_phase_shifts_single(const PotentialModel& model, double k, double step);

/// Self-checking variant: runs at `step` and `step / 2` and returns the finer
/// result; throws when the Richardson disagreement exceeds
/// `richardson_threshold`.
OracleResult numerov_phase_shifts(const PotentialModel& model, double k, double step,
                                  double richardson_threshold = 1e-6);

/// Bound-state energies for one parity by shooting on E < 0: outward Numerov
/// integration matched against exponential decay at the support edge.
std::vector<double> numerov_bound_states(const PotentialModel& model, int parity,
                                         double e_min, double e_max,
                                         std::size_t n_scan, double step);

} // namespace scatter1d

#endif
