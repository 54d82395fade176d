#include "scatter1d/pwave.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "scatter1d/quadgrid.hpp"

namespace scatter1d {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// sin(kappa a) / kappa, stable through kappa = 0.
double sinc_scaled(double kappa, double a)
{
    const double z = kappa * a;
    if (std::abs(z) < 1e-6)
        return a * (1.0 - z * z / 6.0 * (1.0 - z * z / 20.0));
    return std::sin(z) / kappa;
}

// Fourier transform of the symmetric potential: 2 Int_0^inf V(r) cos(kappa r) dr.
// Closed forms for the analytic kinds.
double fourier_analytic(const PotentialModel& m, double kappa)
{
    switch (m.kind()) {
    case PotentialKind::Delta:
        return m.strength();
    case PotentialKind::SquareWell:
        return 2.0 * m.amplitude() * sinc_scaled(kappa, m.half_width());
    case PotentialKind::Gaussian: {
        const double w = m.width();
        return m.amplitude() * w * kSqrtPi * std::exp(-kappa * kappa * w * w / 4.0);
    }
    case PotentialKind::Exponential: {
        const double b = m.decay_range();
        return 2.0 * m.amplitude() * b / (1.0 + kappa * kappa * b * b);
    }
    case PotentialKind::Tabulated:
        break;
    }
    throw std::logic_error("fourier_analytic: tabulated kind has no closed form");
}

// Composite 16-point Gauss-Legendre over [0, R], one panel per oscillation
// period of the fastest trigonometric factor.
double radial_quadrature(const PotentialModel& m, double freq,
                         double (*trig)(double), double arg1, double arg2,
                         double (*trig2)(double))
{
    static const GaussRule rule16 = gauss_legendre(16);
    const double range = m.range();
    const auto periods = freq * range / (2.0 * std::numbers::pi);
    const std::size_t panels = std::max<std::size_t>(2, static_cast<std::size_t>(std::ceil(periods)) + 1);

    double sum = 0.0;
    const double h = range / static_cast<double>(panels);
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = h * static_cast<double>(p);
        for (std::size_t j = 0; j < rule16.nodes.size(); ++j) {
            const double r = lo + 0.5 * h * (rule16.nodes[j] + 1.0);
            sum += 0.5 * h * rule16.weights[j] * m.evaluate(r) * trig(arg1 * r) * trig2(arg2 * r);
        }
    }
    return sum;
}

double cos_wrap(double x) { return std::cos(x); }
double sin_wrap(double x) { return std::sin(x); }
double one_wrap(double) { return 1.0; }

} // namespace

double v_full(const PotentialModel& model, double q_out, double q_in)
{
    const double kappa = q_in - q_out;
    if (model.kind() == PotentialKind::Tabulated)
        return 2.0 * radial_quadrature(model, std::abs(kappa), cos_wrap, kappa, 0.0, one_wrap);
    return fourier_analytic(model, kappa);
}

double v_partial(const PotentialModel& model, int parity, double q, double qp)
{
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("v_partial: parity must be 0 or 1");
    if (q < 0.0 || qp < 0.0)
        throw std::invalid_argument("v_partial: momenta must be >= 0");

    if (model.kind() == PotentialKind::Tabulated) {
        if (parity == 0)
            return radial_quadrature(model, q + qp, cos_wrap, q, qp, cos_wrap);
        return radial_quadrature(model, q + qp, sin_wrap, q, qp, sin_wrap);
    }

    // cos(qr)cos(q'r) = [cos((q-q')r) + cos((q+q')r)] / 2,
    // sin(qr)sin(q'r) = [cos((q-q')r) - cos((q+q')r)] / 2.
    const double minus = fourier_analytic(model, q - qp);
    const double plus = fourier_analytic(model, q + qp);
    return parity == 0 ? 0.25 * (minus + plus) : 0.25 * (minus - plus);
}

double parity_reconstruction_residual(const PotentialModel& model, int eps,
                                      double q, double qp)
{
    if (eps != 1 && eps != -1)
        throw std::invalid_argument("parity_reconstruction_residual: eps must be +/-1");
    const double full = v_full(model, eps * q, qp);
    const double decomposed =
        2.0 * (v_partial(model, 0, q, qp) + eps * v_partial(model, 1, q, qp));
    return std::abs(full - decomposed);
}

PartialWaveV::PartialWaveV(const PotentialModel& model, int parity)
    : model_(&model), parity_(parity), analytic_(model.kind() != PotentialKind::Tabulated)
{
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("PartialWaveV: parity must be 0 or 1");
}

} // namespace scatter1d
