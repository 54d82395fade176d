#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "scatter1d/observables.hpp"

using namespace scatter1d;

namespace {
const std::complex<double> I(0.0, 1.0);
constexpr double kPi = std::numbers::pi;

ChannelResult channel_from_delta(double delta, double k, int parity)
{
    return phase_shift(-k * std::exp(I * delta) * std::sin(delta), k, parity);
}
} // namespace

TEST_CASE("no scattering: t = 0")
{
    const ChannelResult ch = phase_shift({0.0, 0.0}, 1.0, 0);
    CHECK(ch.delta == 0.0);
    CHECK(ch.s_matrix == std::complex<double>(1.0, 0.0));
    CHECK(ch.unitary);
}

TEST_CASE("delta potential phase shift")
{
    // lambda = 2, k = 1: t0 = (1 - i)/2, tan(delta0) = -1.
    const ChannelResult ch = phase_shift({0.5, -0.5}, 1.0, 0);
    CHECK(ch.delta == doctest::Approx(-kPi / 4.0).epsilon(1e-14));
    CHECK(std::abs(ch.s_matrix - std::complex<double>(0.0, -1.0)) < 1e-14);
    CHECK(ch.unitary);
}

TEST_CASE("resonant channel: S = -1")
{
    const double k = 2.0;
    const ChannelResult ch = phase_shift(-k * I, k, 0);
    CHECK(std::abs(ch.s_matrix - std::complex<double>(-1.0, 0.0)) < 1e-14);
    CHECK(std::abs(ch.delta) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
}

TEST_CASE("non-unitary input is flagged")
{
    const ChannelResult ch = phase_shift({1.0, 1.0}, 1.0, 0); // |S| far from 1
    CHECK_FALSE(ch.unitary);
    CHECK_THROWS_AS(phase_shift({0.0, 0.0}, 0.0, 0), std::invalid_argument);
}

TEST_CASE("phase parametrization round trip")
{
    for (double delta : {-1.2, -0.3, 0.0, 0.4, 1.5}) {
        const double k = 1.7;
        const ChannelResult ch = channel_from_delta(delta, k, 0);
        CHECK(ch.delta == doctest::Approx(delta).epsilon(1e-12));
        CHECK(std::abs(ch.t_onshell - (-k * std::exp(I * ch.delta) * std::sin(ch.delta))) < 1e-12);
        CHECK(std::abs(std::abs(ch.s_matrix) - 1.0) < 1e-12);
    }
}

TEST_CASE("phase unwrapping picks the minimal pi jump")
{
    CHECK(unwrap_phase(1.5, 1.4) == doctest::Approx(1.4));
    CHECK(unwrap_phase(1.5, -1.5) == doctest::Approx(-1.5 + kPi));
    CHECK(unwrap_phase(-2.0, 1.2) == doctest::Approx(1.2 - kPi));
    CHECK(unwrap_phase(4.0, 0.8) == doctest::Approx(0.8 + kPi));
}

TEST_CASE("amplitudes from the channel pair")
{
    const double k = 1.0;

    SUBCASE("no scattering")
    {
        const Amplitudes amp =
            amplitudes(channel_from_delta(0.0, k, 0), channel_from_delta(0.0, k, 1));
        CHECK(std::abs(amp.f_plus) == 0.0);
        CHECK(std::abs(amp.f_minus) == 0.0);
    }

    SUBCASE("delta potential values")
    {
        // delta0 = -pi/4, delta1 = 0 gives f(+) = f(-) = -(1 - i)/2.
        const Amplitudes amp =
            amplitudes(channel_from_delta(-kPi / 4.0, k, 0), channel_from_delta(0.0, k, 1));
        const std::complex<double> expected(-0.5, 0.5);
        CHECK(std::abs(amp.f_plus - expected) < 1e-14);
        CHECK(std::abs(amp.f_minus - expected) < 1e-14);
    }

    SUBCASE("odd-only scattering flips the backward amplitude")
    {
        const Amplitudes amp =
            amplitudes(channel_from_delta(0.0, k, 0), channel_from_delta(0.7, k, 1));
        CHECK(std::abs(amp.f_plus + amp.f_minus) < 1e-14);
    }

    SUBCASE("mismatched momenta are rejected")
    {
        CHECK_THROWS_AS(amplitudes(channel_from_delta(0.1, 1.0, 0), channel_from_delta(0.1, 2.0, 1)),
                        std::invalid_argument);
        CHECK_THROWS_AS(amplitudes(channel_from_delta(0.1, 1.0, 1), channel_from_delta(0.1, 1.0, 0)),
                        std::invalid_argument);
    }
}

TEST_CASE("alternative amplitude convention")
{
    const auto [ftp, ftm] = alt_amplitudes({-0.5, 0.5}, {-0.5, 0.5}, 1.0);
    CHECK(ftp.real() == doctest::Approx(-0.5));
    CHECK(ftp.imag() == doctest::Approx(-0.5));

    const auto [zp, zm] = alt_amplitudes({0.0, 0.0}, {0.0, 0.0}, 2.0);
    CHECK(std::abs(zp) == 0.0);
    CHECK(std::abs(zm) == 0.0);

    // |ft| = |f| / k always.
    const std::complex<double> f(0.3, -0.8);
    const auto [ft, unused] = alt_amplitudes(f, f, 4.0);
    CHECK(std::abs(ft) == doctest::Approx(std::abs(f) / 4.0).epsilon(1e-15));
}

TEST_CASE("delta potential cross sections and R/T")
{
    const double k = 1.0;
    const ScatteringReport rep = cross_sections_and_rt(channel_from_delta(-kPi / 4.0, k, 0),
                                                       channel_from_delta(0.0, k, 1));
    CHECK(rep.reflection == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.transmission == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.sigma_tot == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rep.sigma_plus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.sigma_minus == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rep.optical_residual_13 < 1e-12);
    CHECK(rep.optical_residual_14 < 1e-12);
    CHECK(rep.unitarity_residual < 1e-12);
    CHECK(rep.sigma_tot_phase_sum == doctest::Approx(rep.sigma_tot).epsilon(1e-12));
}

TEST_CASE("free propagation report")
{
    const ScatteringReport rep =
        cross_sections_and_rt(channel_from_delta(0.0, 2.0, 0), channel_from_delta(0.0, 2.0, 1));
    CHECK(rep.sigma_tot == 0.0);
    CHECK(rep.reflection == 0.0);
    CHECK(rep.transmission == doctest::Approx(1.0));
    CHECK(rep.optical_residual_13 == 0.0);
    CHECK(rep.optical_residual_14 == 0.0);
}

TEST_CASE("resonant even channel saturates the per-channel bound")
{
    const ScatteringReport rep = cross_sections_and_rt(channel_from_delta(kPi / 2.0, 1.0, 0),
                                                       channel_from_delta(0.0, 1.0, 1));
    CHECK(rep.sigma_tot == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.reflection + rep.transmission == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("R + T = 1 across random phase pairs")
{
    for (double d0 : {-1.1, -0.2, 0.9})
        for (double d1 : {-0.8, 0.0, 1.3}) {
            const ScatteringReport rep = cross_sections_and_rt(channel_from_delta(d0, 1.4, 0),
                                                               channel_from_delta(d1, 1.4, 1));
            CHECK(rep.reflection + rep.transmission == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(rep.sigma_tot ==
                  doctest::Approx(rep.sigma_tot_phase_sum).epsilon(1e-12).scale(1.0));
        }
}
