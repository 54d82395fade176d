#ifndef SCATTER1D_QUADGRID_HPP
#define SCATTER1D_QUADGRID_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace scatter1d {

struct GaussRule {
    std::vector<double> nodes;   // on [-1, 1], increasing
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of
/// degree <= 2n - 1.
GaussRule gauss_legendre(std::size_t n);

/// Quadrature nodes on the momentum half-line [0, inf) obtained from the
/// tangent map p = c * tan(pi (x + 1) / 4), plus the on-shell momentum k
/// appended as a zero-base-weight point after the interior nodes.
struct MomentumGrid {
    std::vector<double> nodes;    // interior p_j, increasing, all > 0
    std::vector<double> weights;  // mapped weights, all > 0
    double onshell_k = 0.0;
    double map_scale = 0.0;
    // |error| of this grid on the benchmark integral of 1/(1+p^2) = pi/2.
    double benchmark_error = 0.0;

    std::size_t size() const { return nodes.size(); }
    // Points of the extended (N+1)-point set used by the solver.
    double point(std::size_t j) const { return j < nodes.size() ? nodes[j] : onshell_k; }
};

/// Builds the mapped grid for on-shell momentum k. map_scale <= 0 selects
/// the default c = max(1, k). If k collides with a mapped node the scale
/// is nudged by a factor 1.000001, up to five attempts.
MomentumGrid build_grid(std::size_t n, double map_scale, double k);

/// Complex weights turning (2/pi) * Int_0^inf dp g(p) / (k^2 - p^2 + i0)
/// into sum_j omega_j g(p_j) + omega_N g(k). The pole is removed by
/// on-shell subtraction; PV Int_0^inf dp/(k^2 - p^2) = 0 supplies the
/// analytic counterterm and the +i0 prescription the -i/k entry.
std::vector<std::complex<double>> singular_weights(const MomentumGrid& grid, double k);

/// Real weights w_j / (E - p_j^2) for negative energy E (interior nodes
/// only; no singularity below threshold).
std::vector<double> regular_weights(const MomentumGrid& grid, double e_negative);

} // namespace scatter1d

#endif
