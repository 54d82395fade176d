#include "scatter1d/oracle.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <vector>

#include "scatter1d/errors.hpp"
#include "scatter1d/observables.hpp"

namespace scatter1d {

namespace {

constexpr double kPi = std::numbers::pi;

double principal_mod_pi(double x)
{
    double y = std::fmod(x, kPi);
    if (y <= -kPi / 2.0)
        y += kPi;
    else if (y > kPi / 2.0)
        y -= kPi;
    return y;
}

// Integrates u'' + g(r) u = 0 outward from r = 0 and returns u and u' at the
// match index (5-point derivative stencil, consistent with the O(h^4) step).
struct MatchPoint {
    double u = 0.0;
    double du = 0.0;
};

MatchPoint numerov_outward(const std::function<double(double)>& g, double h,
                           std::size_t n_match, bool even_start)
{
    const std::size_t n_end = n_match + 2;
    std::vector<double> u(n_end + 1);

    auto gv = [&](std::size_t n) { return g(h * static_cast<double>(n)); };

    if (even_start) {
        // u(-h) = u(h) collapses the first Numerov step to a closed form.
        u[0] = 1.0;
        u[1] = u[0] * (1.0 - 5.0 * h * h * gv(0) / 12.0) / (1.0 + h * h * gv(1) / 12.0);
    } else {
        // Odd start: RK4 sub-steps carry (u, u') across the first interval.
        u[0] = 0.0;
        double y1 = 0.0, y2 = 1.0;
        const int sub = 4;
        const double hs = h / sub;
        for (int s = 0; s < sub; ++s) {
            const double r = hs * s;
            auto f2 = [&](double rr, double uu) { return -g(rr) * uu; };
            const double k1u = y2, k1v = f2(r, y1);
            const double k2u = y2 + 0.5 * hs * k1v, k2v = f2(r + 0.5 * hs, y1 + 0.5 * hs * k1u);
            const double k3u = y2 + 0.5 * hs * k2v, k3v = f2(r + 0.5 * hs, y1 + 0.5 * hs * k2u);
            const double k4u = y2 + hs * k3v, k4v = f2(r + hs, y1 + hs * k3u);
            y1 += hs / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
            y2 += hs / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
        u[1] = y1;
    }

    double g_prev = gv(0), g_cur = gv(1);
    for (std::size_t n = 1; n < n_end; ++n) {
        const double g_next = gv(n + 1);
        u[n + 1] = (2.0 * u[n] * (1.0 - 5.0 * h * h * g_cur / 12.0) -
                    u[n - 1] * (1.0 + h * h * g_prev / 12.0)) /
                   (1.0 + h * h * g_next / 12.0);
        g_prev = g_cur;
        g_cur = g_next;

        if (std::abs(u[n + 1]) > 1e250) { // rescale; the equation is linear
            for (std::size_t m = 0; m <= n + 1; ++m)
                u[m] *= 1e-250;
        }
    }

    MatchPoint mp;
    mp.u = u[n_match];
    mp.du = (u[n_match - 2] - 8.0 * u[n_match - 1] + 8.0 * u[n_match + 1] - u[n_match + 2]) /
            (12.0 * h);
    return mp;
}

ScatteringReport report_from_phases(double k, double delta0, double delta1)
{
    ChannelResult even = phase_shift(
        -k * std::exp(std::complex<double>(0.0, delta0)) * std::sin(delta0), k, 0);
    ChannelResult odd = phase_shift(
        -k * std::exp(std::complex<double>(0.0, delta1)) * std::sin(delta1), k, 1);
    return cross_sections_and_rt(even, odd);
}

} // namespace

OracleResult delta_closed_forms(double lambda, double k)
{
    if (k <= 0.0)
        throw std::invalid_argument("delta_closed_forms: k must be positive");

    OracleResult res;
    res.source = OracleResult::Source::AnalyticDelta;
    res.k = k;
    res.delta0 = std::atan(-lambda / (2.0 * k));
    res.delta1 = 0.0;
    const double denom = lambda * lambda + 4.0 * k * k;
    res.reflection = lambda * lambda / denom;
    res.transmission = 4.0 * k * k / denom;
    res.sigma_tot = 2.0 * lambda * lambda / denom;
    if (lambda < 0.0)
        res.bound_energies.push_back(-lambda * lambda / 4.0);
    return res;
}

OracleResult numerov_phase_shifts_single(const PotentialModel& model, double k, double step)
{
    if (model.is_delta())
        throw std::invalid_argument(
            "numerov_phase_shifts: delta has no pointwise profile; use a narrow well");
    if (k <= 0.0 || step <= 0.0)
        throw std::invalid_argument("numerov_phase_shifts: k and step must be positive");

    const double r_match_goal = model.range() + 2.0 * kPi / k;
    const std::size_t n_match = static_cast<std::size_t>(std::ceil(r_match_goal / step));
    const double r_match = step * static_cast<double>(n_match);

    auto g = [&](double r) { return k * k - model.evaluate(r); };

    OracleResult res;
    res.source = OracleResult::Source::Numerov;
    res.k = k;

    const MatchPoint even = numerov_outward(g, step, n_match, true);
    const MatchPoint odd = numerov_outward(g, step, n_match, false);

    // u_even ~ cos(kr + d0), u_odd ~ sin(kr + d1) beyond the support.
    res.delta0 = principal_mod_pi(std::atan2(-even.du, k * even.u) - k * r_match);
    res.delta1 = principal_mod_pi(std::atan2(k * odd.u, odd.du) - k * r_match);

    const ScatteringReport rep = report_from_phases(k, res.delta0, res.delta1);
    res.reflection = rep.reflection;
    res.transmission = rep.transmission;
    res.sigma_tot = rep.sigma_tot;
    return res;
}

OracleResult numerov_phase_shifts(const PotentialModel& model, double k, double step,
                                  double richardson_threshold)
{
    const OracleResult coarse = numerov_phase_shifts_single(model, k, step);
    OracleResult fine = numerov_phase_shifts_single(model, k, step / 2.0);

    const double d0 = std::abs(principal_mod_pi(fine.delta0 - coarse.delta0));
    const double d1 = std::abs(principal_mod_pi(fine.delta1 - coarse.delta1));
    fine.richardson_error = std::max(d0, d1);
    if (fine.richardson_error > richardson_threshold) {
        std::ostringstream msg;
        msg << "oracle: Numerov step " << step << " too coarse for " << model.describe()
            << " at k=" << k << " (Richardson disagreement " << fine.richardson_error << ")";
        throw NumericError(msg.str());
    }
    return fine;
}

std::vector<double> numerov_bound_states(const PotentialModel& model, int parity,
                                         double e_min, double e_max,
                                         std::size_t n_scan, double step)
{
    if (model.is_delta())
        throw std::invalid_argument("numerov_bound_states: delta is handled in closed form");
    if (!(e_min < e_max && e_max < 0.0))
        throw std::invalid_argument("numerov_bound_states: need e_min < e_max < 0");
    if (n_scan < 2)
        throw std::invalid_argument("numerov_bound_states: need at least 2 scan points");

    // Decay matching u' + kappa u = 0 just outside the support; this form has
    // no poles in E, so every sign change is a genuine state.
    auto mismatch = [&](double energy) {
        const double kappa = std::sqrt(-energy);
        const double r_match_goal = model.range() + 1.0;
        const std::size_t n_match = static_cast<std::size_t>(std::ceil(r_match_goal / step));
        auto g = [&](double r) { return energy - model.evaluate(r); };
        const MatchPoint mp = numerov_outward(g, step, n_match, parity == 0);
        const double scale = std::max({std::abs(mp.u), std::abs(mp.du) / kappa, 1e-300});
        return (mp.du + kappa * mp.u) / scale;
    };

    std::vector<double> roots;
    const double span = e_max - e_min;
    double e_prev = e_min;
    double f_prev = mismatch(e_prev);
    for (std::size_t i = 1; i < n_scan; ++i) {
        const double e = i + 1 == n_scan
                             ? e_max
                             : e_min + span * static_cast<double>(i) / static_cast<double>(n_scan - 1);
        const double f = mismatch(e);
        if (f_prev == 0.0) {
            roots.push_back(e_prev);
        } else if (f_prev * f < 0.0) {
            double lo = e_prev, hi = e;
            double flo = f_prev;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                const double fm = mismatch(mid);
                if (fm == 0.0) {
                    lo = hi = mid;
                    break;
                }
                if (flo * fm < 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        e_prev = e;
        f_prev = f;
    }
    return roots;
}

} // namespace scatter1d
