#include "scatter1d/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace scatter1d {

namespace {
const std::complex<double> kI(0.0, 1.0);
}

ChannelResult phase_shift(std::complex<double> t_onshell, double k, int parity)
{
    if (k <= 0.0)
        throw std::invalid_argument("phase_shift: k must be positive");

    ChannelResult ch;
    ch.parity = parity;
    ch.k = k;
    ch.t_onshell = t_onshell;
    ch.s_matrix = 1.0 - 2.0 * kI * t_onshell / k;
    ch.delta = 0.5 * std::arg(ch.s_matrix);
    ch.unitary = std::abs(std::abs(ch.s_matrix) - 1.0) <= 1e-3;
    return ch;
}

double unwrap_phase(double previous, double raw)
{
    const double n = std::round((previous - raw) / std::numbers::pi);
    return raw + n * std::numbers::pi;
}

Amplitudes amplitudes(const ChannelResult& even, const ChannelResult& odd)
{
    if (even.parity != 0 || odd.parity != 1)
        throw std::invalid_argument("amplitudes: expected the (L=0, L=1) channel pair");
    if (std::abs(even.k - odd.k) > 1e-12 * std::max(1.0, even.k))
        throw std::invalid_argument("amplitudes: channels have mismatched momenta");

    const double k = even.k;
    Amplitudes amp;
    amp.f_partial[0] = k * std::exp(kI * even.delta) * std::sin(even.delta);
    amp.f_partial[1] = k * std::exp(kI * odd.delta) * std::sin(odd.delta);
    amp.f_plus = amp.f_partial[0] + amp.f_partial[1];
    amp.f_minus = amp.f_partial[0] - amp.f_partial[1];
    return amp;
}

std::pair<std::complex<double>, std::complex<double>>
alt_amplitudes(std::complex<double> f_plus, std::complex<double> f_minus, double k)
{
    return {kI / k * f_plus, kI / k * f_minus};
}

ScatteringReport cross_sections_and_rt(const ChannelResult& even, const ChannelResult& odd)
{
    const Amplitudes amp = amplitudes(even, odd);
    const double k = even.k;

    ScatteringReport rep;
    rep.k = k;
    rep.f_plus = amp.f_plus;
    rep.f_minus = amp.f_minus;
    std::tie(rep.ft_plus, rep.ft_minus) = alt_amplitudes(amp.f_plus, amp.f_minus, k);

    rep.sigma_plus = std::norm(amp.f_plus) / (k * k);
    rep.sigma_minus = std::norm(amp.f_minus) / (k * k);
    rep.sigma_tot = rep.sigma_plus + rep.sigma_minus;
    const double s0 = std::sin(even.delta), s1 = std::sin(odd.delta);
    rep.sigma_tot_phase_sum = 2.0 * (s0 * s0 + s1 * s1);

    rep.transmission = std::norm(1.0 + kI * amp.f_plus / k);
    rep.reflection = std::norm(kI * amp.f_minus / k);

    rep.optical_residual_13 = std::abs(rep.sigma_tot - 2.0 / k * amp.f_plus.imag());
    rep.optical_residual_14 = std::abs(rep.sigma_tot + 2.0 * rep.ft_plus.real());

    const double u0 = std::abs(even.t_onshell.imag() + std::norm(even.t_onshell) / k);
    const double u1 = std::abs(odd.t_onshell.imag() + std::norm(odd.t_onshell) / k);
    rep.unitarity_residual = std::max(u0, u1);
    return rep;
}

} // namespace scatter1d
