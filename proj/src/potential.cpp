#include "scatter1d/potential.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "scatter1d/errors.hpp"

namespace scatter1d {

namespace {
// Default effective-range rule: |V(R)| = 1e-12 * |V(0)|.
constexpr double kRangeCutoff = 1e-12;
}

PotentialModel::PotentialModel(PotentialKind kind, double p0, double p1, double range)
    : kind_(kind), p0_(p0), p1_(p1), range_(range)
{
}

PotentialModel PotentialModel::delta(double strength)
{
    return PotentialModel(PotentialKind::Delta, strength, 0.0, 0.0);
}

PotentialModel PotentialModel::square_well(double depth, double half_width)
{
    if (half_width <= 0.0)
        throw std::invalid_argument("square_well: half_width must be positive");
    return PotentialModel(PotentialKind::SquareWell, depth, half_width, half_width);
}

PotentialModel PotentialModel::gaussian(double amplitude, double width, double range)
{
    if (width <= 0.0)
        throw std::invalid_argument("gaussian: width must be positive");
    if (range <= 0.0)
        range = width * std::sqrt(-std::log(kRangeCutoff));
    return PotentialModel(PotentialKind::Gaussian, amplitude, width, range);
}

PotentialModel PotentialModel::exponential(double amplitude, double decay_range, double range)
{
    if (decay_range <= 0.0)
        throw std::invalid_argument("exponential: decay range must be positive");
    if (range <= 0.0)
        range = -decay_range * std::log(kRangeCutoff);
    return PotentialModel(PotentialKind::Exponential, amplitude, decay_range, range);
}

PotentialModel PotentialModel::tabulated(std::vector<double> r, std::vector<double> v, double range)
{
    if (r.size() < 4 || r.size() != v.size())
        throw std::invalid_argument("tabulated: need >= 4 matching (r, v) samples");
    if (!std::is_sorted(r.begin(), r.end()))
        throw std::invalid_argument("tabulated: r samples must be increasing");
    if (r.front() > 0.0 || r.back() < range)
        throw std::invalid_argument("tabulated: samples must cover [0, range]");
    PotentialModel model(PotentialKind::Tabulated, 0.0, 0.0, range);
    model.tab_r_ = std::move(r);
    model.tab_v_ = std::move(v);
    return model;
}

double PotentialModel::evaluate(double r) const
{
    if (r < 0.0)
        throw std::invalid_argument("evaluate: r must be >= 0");
    switch (kind_) {
    case PotentialKind::Delta:
        throw std::invalid_argument(
            "evaluate: delta is an analytic-only potential with no pointwise value");
    case PotentialKind::SquareWell:
        return r <= p1_ ? p0_ : 0.0;
    case PotentialKind::Gaussian:
        return p0_ * std::exp(-(r * r) / (p1_ * p1_));
    case PotentialKind::Exponential:
        return p0_ * std::exp(-r / p1_);
    case PotentialKind::Tabulated: {
        if (r > range_)
            return 0.0;
        // Local cubic Lagrange rule on the four samples around r.
        const auto& xs = tab_r_;
        const auto& ys = tab_v_;
        auto it = std::upper_bound(xs.begin(), xs.end(), r);
        std::size_t i = static_cast<std::size_t>(it - xs.begin());
        std::size_t lo = i >= 2 ? i - 2 : 0;
        lo = std::min(lo, xs.size() - 4);
        double value = 0.0;
        for (std::size_t a = lo; a < lo + 4; ++a) {
            double term = ys[a];
            for (std::size_t b = lo; b < lo + 4; ++b) {
                if (a == b)
                    continue;
                term *= (r - xs[b]) / (xs[a] - xs[b]);
            }
            value += term;
        }
        return value;
    }
    }
    return 0.0;
}

std::string PotentialModel::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case PotentialKind::Delta:
        os << "delta(strength=" << p0_ << ")";
        break;
    case PotentialKind::SquareWell:
        os << "square_well(depth=" << p0_ << ", half_width=" << p1_ << ")";
        break;
    case PotentialKind::Gaussian:
        os << "gaussian(amplitude=" << p0_ << ", width=" << p1_ << ")";
        break;
    case PotentialKind::Exponential:
        os << "exponential(amplitude=" << p0_ << ", decay_range=" << p1_ << ")";
        break;
    case PotentialKind::Tabulated:
        os << "tabulated(" << tab_r_.size() << " samples)";
        break;
    }
    os << ", range=" << range_;
    return os.str();
}

UnitBridge::UnitBridge(double m, double hb) : mass(m), hbar(hb)
{
    if (m <= 0.0 || hb <= 0.0)
        throw std::invalid_argument("UnitBridge: mass and hbar must be positive");
}

double UnitBridge::reduced_delta_strength(double v0_physical) const
{
    return 2.0 * mass * v0_physical / (hbar * hbar);
}

double UnitBridge::physical_delta_strength(double lambda) const
{
    return lambda * hbar * hbar / (2.0 * mass);
}

PotentialModel UnitBridge::delta_from_physical(double v0_physical) const
{
    return PotentialModel::delta(reduced_delta_strength(v0_physical));
}

double UnitBridge::physical_energy(double k_squared) const
{
    return hbar * hbar * k_squared / (2.0 * mass);
}

double UnitBridge::reduced_energy(double e_physical) const
{
    return 2.0 * mass * e_physical / (hbar * hbar);
}

} // namespace scatter1d
