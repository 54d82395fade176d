#include "scatter1d/quadgrid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "scatter1d/errors.hpp"

namespace scatter1d {

namespace {
constexpr double kPi = std::numbers::pi;
}

GaussRule gauss_legendre(std::size_t n)
{
    if (n == 0)
        throw std::invalid_argument("gauss_legendre: n must be >= 1");

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);

    // Newton iteration on the Legendre polynomial, one root per symmetric pair.
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double z = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15)
                break;
        }
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

namespace {

MomentumGrid map_to_halfline(const GaussRule& rule, double c, double k)
{
    MomentumGrid grid;
    grid.map_scale = c;
    grid.onshell_k = k;
    grid.nodes.reserve(rule.nodes.size());
    grid.weights.reserve(rule.nodes.size());
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double theta = kPi * (rule.nodes[j] + 1.0) / 4.0;
        const double cosv = std::cos(theta);
        grid.nodes.push_back(c * std::tan(theta));
        grid.weights.push_back(rule.weights[j] * c * (kPi / 4.0) / (cosv * cosv));
    }

    double benchmark = 0.0;
    for (std::size_t j = 0; j < grid.nodes.size(); ++j)
        benchmark += grid.weights[j] / (1.0 + grid.nodes[j] * grid.nodes[j]);
    grid.benchmark_error = std::abs(benchmark - kPi / 2.0);
    return grid;
}

bool collides(const MomentumGrid& grid, double k)
{
    const double tol = 1e-10 * k;
    return std::any_of(grid.nodes.begin(), grid.nodes.end(),
                       [&](double p) { return std::abs(p - k) < tol; });
}

} // namespace

MomentumGrid build_grid(std::size_t n, double map_scale, double k)
{
    if (n < 8)
        throw std::invalid_argument("build_grid: need at least 8 nodes");
    if (k <= 0.0 || !std::isfinite(k))
        throw std::invalid_argument("build_grid: on-shell momentum must be positive");

    double c = map_scale > 0.0 ? map_scale : std::max(1.0, k);
    const GaussRule rule = gauss_legendre(n);

    for (int attempt = 0; attempt < 5; ++attempt) {
        MomentumGrid grid = map_to_halfline(rule, c, k);
        if (!collides(grid, k))
            return grid;
        c *= 1.000001;
    }
    std::ostringstream msg;
    msg << "quadgrid: on-shell momentum k=" << k
        << " keeps colliding with mapped nodes (n=" << n << ", scale=" << c << ")";
    throw NumericError(msg.str());
}

std::vector<std::complex<double>> singular_weights(const MomentumGrid& grid, double k)
{
    if (k <= 0.0)
        throw std::invalid_argument("singular_weights: k must be positive");
    if (std::abs(k - grid.onshell_k) > 1e-14 * std::max(1.0, k))
        throw std::invalid_argument("singular_weights: grid was built for a different k");

    const std::size_t n = grid.size();
    std::vector<std::complex<double>> omega(n + 1);
    double subtraction_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double d = (2.0 / kPi) * grid.weights[j] / (k * k - grid.nodes[j] * grid.nodes[j]);
        omega[j] = d;
        subtraction_sum += d;
    }
    // PV int_0^inf dp / (k^2 - p^2) = 0, so the subtracted value comes back
    // with only the discrete counter-sum; the +i0 branch adds -i/k.
    omega[n] = std::complex<double>(-subtraction_sum, -1.0 / k);
    return omega;
}

std::vector<double> regular_weights(const MomentumGrid& grid, double e_negative)
{
    if (e_negative >= 0.0)
        throw std::invalid_argument("regular_weights: energy must be negative");

    std::vector<double> w(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
        w[j] = grid.weights[j] / (e_negative - grid.nodes[j] * grid.nodes[j]);
    return w;
}

} // namespace scatter1d
