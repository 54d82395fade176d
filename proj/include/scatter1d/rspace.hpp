#ifndef SCATTER1D_RSPACE_HPP
#define SCATTER1D_RSPACE_HPP

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "scatter1d/potential.hpp"

namespace scatter1d {

enum class Branch { Outgoing, Incoming }; // (+) / (-) boundary conditions

/// Free Green's function G0(x, x') = -/+ (i/2k) e^{+/- i k |x - x'|}.
std::complex<double> green0(double x, double xp, double k, Branch branch);

/// Scattering wave function from the configuration-space integral equation.
/// The dense solve lives on a panel mesh covering the potential support
/// [-R, R]; `x` / `psi` hold samples on the requested exterior grid.
struct WavefunctionProfile {
    double k = 0.0;
    Branch branch = Branch::Outgoing;
    std::vector<double> x;
    std::vector<std::complex<double>> psi;

    // Interior collocation data (support mesh), kept for amplitude
    // extraction and off-node evaluation.
    std::vector<double> nodes;                 // composite Gauss nodes in [-R, R]
    std::vector<double> node_weights;          // plain panel quadrature weights
    std::vector<std::complex<double>> psi_nodes;
    std::vector<double> panel_edges;
    std::size_t panel_order = 0;
    double range = 0.0;
    double resolution_error = 0.0;             // node disagreement under panel doubling

    bool analytic_delta = false;
    double delta_strength = 0.0;
};

/// Solves the interior Nystrom system and samples psi on x_grid. The delta
/// potential bypasses quadrature via its closed-form solution. Panel count
/// scales with k * R; `panels` = 0 picks that default.
WavefunctionProfile solve_wavefunction(const PotentialModel& model, double k,
                                       const std::vector<double>& x_grid,
                                       Branch branch = Branch::Outgoing,
                                       std::size_t panels = 0);

/// Evaluates psi anywhere via one application of the integral representation.
std::complex<double> evaluate_wavefunction(const WavefunctionProfile& profile,
                                           const PotentialModel& model, double x);

/// Scattering amplitude pair (f, ft) for direction eps = +/-1 from the
/// defining integral of the solved wave function.
std::pair<std::complex<double>, std::complex<double>>
amplitude_from_wavefunction(const WavefunctionProfile& profile,
                            const PotentialModel& model, int eps);

/// max |psi(x) - [e^{ikx} + (i/k) f(eps) e^{ikr}]| over profile samples with
/// |x| in [2R, 3R].
double asymptotic_residual(const WavefunctionProfile& profile,
                           std::complex<double> f_plus, std::complex<double> f_minus);

} // namespace scatter1d

#endif
