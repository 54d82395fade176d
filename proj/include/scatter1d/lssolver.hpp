#ifndef SCATTER1D_LSSOLVER_HPP
#define SCATTER1D_LSSOLVER_HPP

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "scatter1d/potential.hpp"
#include "scatter1d/quadgrid.hpp"

namespace scatter1d {

/// Half-off-shell transition matrix column t_L(p_j, k; k^2) for one parity,
/// outgoing-wave branch. The last entry is the on-shell element.
struct HalfOffShellT {
    int parity = 0;
    double k = 0.0;
    MomentumGrid grid;
    std::vector<std::complex<double>> values; // size N+1, [N] on shell

    double condition_estimate = 0.0; // 1 / rcond of the dense system
    double solve_residual = 0.0;     // max-norm residual of the linear solve
    bool condition_warning = false;  // condition_estimate > 1e12

    std::complex<double> on_shell() const { return values.back(); }
    // Incoming-wave branch; valid because the kernel is real symmetric.
    std::complex<double> minus_branch(std::size_t j) const { return std::conj(values[j]); }
};

struct BoundState {
    int parity = 0;
    double energy = 0.0;       // in units of k^2, strictly negative
    double det_residual = 0.0; // |det| of the discretized system at the root
};

struct BoundStateScan {
    std::vector<BoundState> states;
    std::vector<std::string> warnings;
};

/// Solves the partial-wave momentum-space integral equation for the
/// half-off-shell column at on-shell momentum k > 0.
/// map_scale <= 0 selects the default tangent-map scale max(1, k).
HalfOffShellT solve_halfoffshell(const PotentialModel& model, int parity, double k,
                                 std::size_t n_grid, double map_scale = 0.0);

/// Driving (Born) term of the integral equation; identical to the
/// partial-wave potential element.
double born_term(const PotentialModel& model, int parity, double q, double qp);

/// Scans det[I - V_L W(E)] over [e_min, e_max] (< 0), brackets sign changes
/// and bisects each to |dE| < 1e-10. A root within 1% of either window edge
/// adds a warning about possibly missed states.
BoundStateScan find_bound_states(const PotentialModel& model, int parity,
                                 double e_min, double e_max, std::size_t n_scan,
                                 std::size_t n_grid = 200);

} // namespace scatter1d

#endif
