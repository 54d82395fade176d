#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "scatter1d/errors.hpp"
#include "scatter1d/quadgrid.hpp"
#include "testutil.hpp"

using namespace scatter1d;

namespace {

double apply_weights(const MomentumGrid& grid, double (*g)(double))
{
    double s = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        s += grid.weights[j] * g(grid.nodes[j]);
    return s;
}

std::complex<double> apply_singular(const MomentumGrid& grid, double k, double (*g)(double))
{
    const auto omega = singular_weights(grid, k);
    std::complex<double> s = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
        s += omega[j] * g(grid.nodes[j]);
    s += omega.back() * g(k);
    return s;
}

double lorentzian(double p) { return 1.0 / (1.0 + p * p); }
double gaussian_decay(double p) { return std::exp(-p * p); }
double one(double) { return 1.0; }

} // namespace

TEST_CASE("gauss_legendre low-order closed forms")
{
    const GaussRule r1 = gauss_legendre(1);
    CHECK(r1.nodes[0] == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r1.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

    const GaussRule r2 = gauss_legendre(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r2.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r2.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss_legendre degree exactness on monomials")
{
    // n-point rule integrates x^m exactly for m <= 2n - 1.
    for (std::size_t n : {3u, 5u, 8u}) {
        const GaussRule rule = gauss_legendre(n);
        for (std::size_t m = 0; m <= 2 * n - 1; ++m) {
            double quad = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                quad += rule.weights[j] * std::pow(rule.nodes[j], static_cast<double>(m));
            const double exact = m % 2 == 1 ? 0.0 : 2.0 / (static_cast<double>(m) + 1.0);
            CHECK(quad == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
        }
    }
    // x^4 with n = 3 sits exactly at the exactness edge.
    const GaussRule r3 = gauss_legendre(3);
    double quad = 0.0;
    for (std::size_t j = 0; j < 3; ++j)
        quad += r3.weights[j] * std::pow(r3.nodes[j], 4.0);
    CHECK(quad == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("mapped grid integrates benchmark integrals on the half line")
{
    const MomentumGrid grid = build_grid(48, 1.0, 1.3);
    CHECK(apply_weights(grid, lorentzian) ==
          doctest::Approx(std::numbers::pi / 2.0).epsilon(1e-12));
    CHECK(grid.benchmark_error < 1e-12);
    CHECK(apply_weights(grid, gaussian_decay) ==
          doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-10));
}

TEST_CASE("grid nodes positive, increasing, weights positive")
{
    const MomentumGrid grid = build_grid(8, 0.0, 2.0);
    REQUIRE(grid.size() == 8);
    CHECK(grid.map_scale == doctest::Approx(2.0)); // default max(1, k)
    for (std::size_t j = 0; j < grid.size(); ++j) {
        CHECK(grid.nodes[j] > 0.0);
        CHECK(grid.weights[j] > 0.0);
        if (j > 0)
            CHECK(grid.nodes[j] > grid.nodes[j - 1]);
    }
    CHECK(grid.point(grid.size()) == doctest::Approx(2.0));
}

TEST_CASE("grid refinement drives the benchmark error down")
{
    // With c != 1 the mapped integrand is not constant, so the error is
    // nontrivial and must shrink monotonically until machine precision.
    double previous = 1.0;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
        const MomentumGrid grid = build_grid(n, 3.0, 1.0);
        CHECK(grid.benchmark_error <= previous + 1e-15);
        previous = grid.benchmark_error;
    }
}

TEST_CASE("grid construction validates inputs and resolves node collisions")
{
    CHECK_THROWS_AS(build_grid(4, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid(16, 1.0, -1.0), std::invalid_argument);

    // Force a collision: reuse an existing node as the on-shell momentum.
    const MomentumGrid base = build_grid(24, 1.0, 1.0);
    const double clash = base.nodes[12];
    const MomentumGrid retried = build_grid(24, 1.0, clash);
    CHECK(retried.map_scale > 1.0); // nudged
    for (double p : retried.nodes)
        CHECK(std::abs(p - clash) >= 1e-10 * clash);
}

TEST_CASE("singular weights: constant g gives exactly -i/k")
{
    for (double k : {0.5, 1.0, 3.7}) {
        const MomentumGrid grid = build_grid(32, 0.0, k);
        const std::complex<double> s = apply_singular(grid, k, one);
        CHECK(s.real() == doctest::Approx(0.0).epsilon(1e-14).scale(1.0));
        CHECK(s.imag() == doctest::Approx(-1.0 / k).epsilon(1e-14));
    }
}

TEST_CASE("singular weights reproduce the principal-value oracle")
{
    // (2/pi) PV Int g/(k^2-p^2) - i g(k)/k for g = 1/(1+p^2), k = 1.
    // Partial fractions give PV = pi/4 analytically; the epsilon-extrapolated
    // oracle must agree with both that and the discrete weights.
    const double k = 1.0;
    const double pv_oracle = testutil::pv_integral(lorentzian, k);
    CHECK(pv_oracle == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-9));

    const MomentumGrid grid = build_grid(64, 1.0, k);
    const std::complex<double> s = apply_singular(grid, k, lorentzian);
    CHECK(s.real() == doctest::Approx(2.0 / std::numbers::pi * pv_oracle).epsilon(1e-9));
    CHECK(s.imag() == doctest::Approx(-lorentzian(k) / k).epsilon(1e-13));
}

TEST_CASE("singular weights: imaginary part isolates the on-shell delta term")
{
    const double k = 2.0;
    const MomentumGrid grid = build_grid(40, 0.0, k);
    for (auto g : {lorentzian, gaussian_decay}) {
        const std::complex<double> s = apply_singular(grid, k, g);
        CHECK(s.imag() == doctest::Approx(-g(k) / k).epsilon(1e-12));
    }
}

TEST_CASE("singular weights reject wrong momenta")
{
    const MomentumGrid grid = build_grid(16, 1.0, 1.0);
    CHECK_THROWS_AS(singular_weights(grid, 2.0), std::invalid_argument);
    CHECK_THROWS_AS(singular_weights(grid, -1.0), std::invalid_argument);
}

TEST_CASE("regular weights below threshold")
{
    const MomentumGrid grid = build_grid(64, 1.0, 1.0);

    auto sum_regular = [&](double e) {
        const auto w = regular_weights(grid, e);
        double s = 0.0;
        for (double v : w)
            s += v;
        return s;
    };
    // Int_0^inf dp/(E - p^2) = -pi/(2 sqrt(-E)).
    CHECK(sum_regular(-1.0) == doctest::Approx(-std::numbers::pi / 2.0).epsilon(1e-10));
    CHECK(sum_regular(-4.0) == doctest::Approx(-std::numbers::pi / 4.0).epsilon(1e-10));

    for (double v : regular_weights(grid, -1.0))
        CHECK(v < 0.0);

    CHECK_THROWS_AS(regular_weights(grid, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(regular_weights(grid, 1.0), std::invalid_argument);
}
