#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "scatter1d/potential.hpp"
#include "scatter1d/pwave.hpp"
#include "testutil.hpp"

using namespace scatter1d;

namespace {

// Quadrature oracle for the partial-wave transforms, independent of the
// library's closed forms and panel rules.
double v_partial_oracle(const PotentialModel& m, int parity, double q, double qp)
{
    auto integrand = [&](double r) {
        const double trig = parity == 0 ? std::cos(q * r) * std::cos(qp * r)
                                        : std::sin(q * r) * std::sin(qp * r);
        return m.evaluate(r) * trig;
    };
    return testutil::integrate(integrand, 0.0, m.range(), 1e-13);
}

double v_full_oracle(const PotentialModel& m, double q_out, double q_in)
{
    auto integrand = [&](double x) {
        return m.evaluate(std::abs(x)) * std::cos((q_in - q_out) * x);
    };
    return testutil::integrate(integrand, -m.range(), m.range(), 1e-13);
}

} // namespace

TEST_CASE("delta closed forms")
{
    const PotentialModel delta = PotentialModel::delta(3.5);
    CHECK(v_full(delta, 0.7, -2.1) == doctest::Approx(3.5));
    CHECK(v_partial(delta, 0, 0.3, 1.9) == doctest::Approx(1.75));
    CHECK(v_partial(delta, 1, 0.3, 1.9) == 0.0);
    CHECK(parity_reconstruction_residual(delta, 1, 0.4, 0.9) ==
          doctest::Approx(0.0).scale(1.0));
    CHECK(parity_reconstruction_residual(delta, -1, 0.4, 0.9) ==
          doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("square well full element")
{
    const PotentialModel well = PotentialModel::square_well(-4.0, 1.0);
    CHECK(v_full(well, 0.0, 0.0) == doctest::Approx(-8.0)); // 2 V0 a
    CHECK(v_full(well, 1.0, 0.0) == doctest::Approx(-8.0 * std::sin(1.0)));
    CHECK(v_full(well, 1.0, 0.0) == doctest::Approx(v_full_oracle(well, 1.0, 0.0)).epsilon(1e-11));
}

TEST_CASE("partial-wave closed forms match the quadrature oracle")
{
    const PotentialModel well = PotentialModel::square_well(-4.0, 1.0);
    const PotentialModel gauss = PotentialModel::gaussian(-2.0, 1.0);
    const PotentialModel expo = PotentialModel::exponential(1.5, 0.8);

    for (const auto* m : {&well, &gauss, &expo}) {
        for (int parity : {0, 1}) {
            for (auto [q, qp] : {std::pair{0.7, 1.3}, {0.0, 2.0}, {3.3, 3.3}, {0.4, 5.1}}) {
                CHECK(v_partial(*m, parity, q, qp) ==
                      doctest::Approx(v_partial_oracle(*m, parity, q, qp))
                          .epsilon(1e-10)
                          .scale(1.0));
            }
        }
    }
}

TEST_CASE("odd channel vanishes at zero momentum")
{
    const PotentialModel gauss = PotentialModel::gaussian(-2.0, 1.0);
    CHECK(v_partial(gauss, 1, 0.0, 1.7) == doctest::Approx(0.0).scale(1.0));
    CHECK(v_partial(gauss, 1, 2.2, 0.0) == doctest::Approx(0.0).scale(1.0));
    CHECK_THROWS_AS(v_partial(gauss, 1, -0.5, 1.0), std::invalid_argument);
}

TEST_CASE("coincident-momentum limit of the square well is continuous")
{
    const PotentialModel well = PotentialModel::square_well(-4.0, 1.0);
    const double exact = v_partial(well, 0, 2.0, 2.0);
    CHECK(v_partial(well, 0, 2.0, 2.0 + 1e-9) == doctest::Approx(exact).epsilon(1e-9));
    CHECK(v_partial(well, 0, 2.0, 2.0) ==
          doctest::Approx(v_partial_oracle(well, 0, 2.0, 2.0)).epsilon(1e-11));
}

TEST_CASE("kernel symmetry under momentum exchange")
{
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> mom(0.0, 8.0);
    const PotentialModel well = PotentialModel::square_well(-4.0, 1.0);
    const PotentialModel gauss = PotentialModel::gaussian(-2.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const double q = mom(rng), qp = mom(rng);
        for (int parity : {0, 1}) {
            CHECK(v_partial(well, parity, q, qp) ==
                  doctest::Approx(v_partial(well, parity, qp, q)).epsilon(1e-12).scale(1.0));
            CHECK(v_partial(gauss, parity, q, qp) ==
                  doctest::Approx(v_partial(gauss, parity, qp, q)).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("parity reconstruction identity via independent quadratures")
{
    const PotentialModel well = PotentialModel::square_well(-4.0, 1.0);
    const double q = 0.7, qp = 1.3;
    for (int eps : {1, -1}) {
        const double full = v_full_oracle(well, eps * q, qp);
        const double partial = 2.0 * (v_partial_oracle(well, 0, q, qp) +
                                      eps * v_partial_oracle(well, 1, q, qp));
        CHECK(std::abs(full - partial) < 1e-10);
        CHECK(parity_reconstruction_residual(well, eps, q, qp) < 1e-10);
    }
}

TEST_CASE("parity reconstruction holds for random momenta")
{
    std::mt19937 rng(99u);
    std::uniform_real_distribution<double> mom(0.0, 6.0);
    const PotentialModel gauss = PotentialModel::gaussian(-2.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const int eps = (i % 2) ? 1 : -1;
        CHECK(parity_reconstruction_residual(gauss, eps, mom(rng), mom(rng)) < 1e-10);
    }
}

TEST_CASE("half-line and full-line cosine transforms agree")
{
    // The even element can be written over [0, inf) or as half the full-line
    // integral; both quadratures must agree.
    const PotentialModel gauss = PotentialModel::gaussian(-2.0, 1.0);
    for (auto [q, qp] : {std::pair{0.9, 1.7}, {0.0, 0.0}, {2.4, 0.6}}) {
        const double half_line = v_partial_oracle(gauss, 0, q, qp);
        auto full_integrand = [&](double x) {
            return gauss.evaluate(std::abs(x)) * std::cos(q * x) * std::cos(qp * x);
        };
        const double full_line =
            0.5 * testutil::integrate(full_integrand, -gauss.range(), gauss.range(), 1e-14);
        CHECK(half_line == doctest::Approx(full_line).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("tabulated models go through radial quadrature")
{
    std::vector<double> r, v;
    for (int i = 0; i <= 400; ++i) {
        r.push_back(6.0 * i / 400.0);
        v.push_back(-2.0 * std::exp(-r.back() * r.back()));
    }
    const PotentialModel tab = PotentialModel::tabulated(r, v, 5.2);
    const PotentialModel gauss = PotentialModel::gaussian(-2.0, 1.0, 5.2);
    CHECK_FALSE(PartialWaveV(tab, 0).analytic());
    CHECK(PartialWaveV(gauss, 0).analytic());

    for (int parity : {0, 1}) {
        CHECK(v_partial(tab, parity, 0.8, 1.9) ==
              doctest::Approx(v_partial(gauss, parity, 0.8, 1.9)).epsilon(1e-7).scale(1.0));
    }
    CHECK(v_full(tab, 1.0, 0.25) ==
          doctest::Approx(v_full(gauss, 1.0, 0.25)).epsilon(1e-7).scale(1.0));
}
