#ifndef SCATTER1D_OBSERVABLES_HPP
#define SCATTER1D_OBSERVABLES_HPP

#include <complex>
#include <utility>

namespace scatter1d {

/// One parity channel at one energy: on-shell t, phase shift and S-matrix
/// element S_L = e^{2 i delta_L} = 1 - 2 i t_L / k.
struct ChannelResult {
    int parity = 0;
    double k = 0.0;
    std::complex<double> t_onshell;
    double delta = 0.0;            // principal branch (-pi/2, pi/2]
    std::complex<double> s_matrix;
    bool unitary = true;           // false when ||S| - 1| > 1e-3
};

struct Amplitudes {
    std::complex<double> f_plus;   // forward, eps = +1
    std::complex<double> f_minus;  // backward, eps = -1
    std::complex<double> f_partial[2]; // f_L = k e^{i delta_L} sin(delta_L)
};

/// Full set of single-energy observables derived from the two channels.
struct ScatteringReport {
    double k = 0.0;
    std::complex<double> f_plus, f_minus;   // convention with the 3D-like optical theorem
    std::complex<double> ft_plus, ft_minus; // alternative convention, ft = (i/k) f
    double sigma_plus = 0.0, sigma_minus = 0.0, sigma_tot = 0.0;
    double sigma_tot_phase_sum = 0.0;       // 2 sum_L sin^2(delta_L) cross-check
    double reflection = 0.0, transmission = 0.0;
    double optical_residual_13 = 0.0;       // |sigma_tot - (2/k) Im f(+)|
    double optical_residual_14 = 0.0;       // |sigma_tot + 2 Re ft(+)|
    double unitarity_residual = 0.0;        // max_L |Im t_L + |t_L|^2 / k|
};

ChannelResult phase_shift(std::complex<double> t_onshell, double k, int parity = 0);

/// Shifts `raw` by a multiple of pi so it sits closest to `previous`;
/// used to continue phase shifts along an energy sweep.
double unwrap_phase(double previous, double raw);

/// f(eps) = k sum_L eps^L e^{i delta_L} sin(delta_L). Channels must share k.
Amplitudes amplitudes(const ChannelResult& even, const ChannelResult& odd);

/// Convention bridge ft = (i/k) f.
std::pair<std::complex<double>, std::complex<double>>
alt_amplitudes(std::complex<double> f_plus, std::complex<double> f_minus, double k);

/// Cross sections, R/T, both optical-theorem residuals and the unitarity
/// residual of the two on-shell t elements.
ScatteringReport cross_sections_and_rt(const ChannelResult& even, const ChannelResult& odd);

} // namespace scatter1d

#endif
