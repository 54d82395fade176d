#ifndef SCATTER1D_POTENTIAL_HPP
#define SCATTER1D_POTENTIAL_HPP

#include <string>
#include <vector>

namespace scatter1d {

enum class PotentialKind { Delta, SquareWell, Gaussian, Exponential, Tabulated };

/// Centrally symmetric potential V(x) = V(|x|) in units where hbar^2/(2m) = 1.
///
/// Every model carries an effective support radius `range`: the solvers
/// truncate radial integrals there, so |V(r)| must already be negligible
/// for r > range. Models are immutable after construction and safe to
/// share across threads.
class PotentialModel {
public:
    static PotentialModel delta(double strength);
    static PotentialModel square_well(double depth, double half_width);
    // range = 0 picks the radius where |V| has fallen to 1e-12 * |V(0)|.
    static PotentialModel gaussian(double amplitude, double width, double range = 0.0);
    static PotentialModel exponential(double amplitude, double decay_range, double range = 0.0);
    // Samples of V(r) on an increasing r-grid that must reach `range`.
    static PotentialModel tabulated(std::vector<double> r, std::vector<double> v, double range);

    PotentialKind kind() const { return kind_; }
    double range() const { return range_; }
    bool is_delta() const { return kind_ == PotentialKind::Delta; }

    /// Pointwise V(r), r >= 0. Throws for the delta kind, which only has
    /// analytic matrix elements.
    double evaluate(double r) const;

    // Raw parameters (meaning depends on kind).
    double strength() const { return p0_; }   // delta: lambda
    double amplitude() const { return p0_; }  // well depth / gaussian / exponential amplitude
    double half_width() const { return p1_; } // square well a
    double width() const { return p1_; }      // gaussian w
    double decay_range() const { return p1_; }// exponential b

    std::string describe() const;

private:
    PotentialModel(PotentialKind kind, double p0, double p1, double range);

    PotentialKind kind_;
    double p0_ = 0.0;
    double p1_ = 0.0;
    double range_ = 0.0;
    std::vector<double> tab_r_;
    std::vector<double> tab_v_;
};

/// Conversions between physical units and the reduced units used by the
/// solver core (hbar^2/(2m) = 1, energies measured as k^2).
struct UnitBridge {
    double mass;
    double hbar;

    UnitBridge(double m, double hb);

    // Physical delta strength v0 -> reduced lambda = 2 m v0 / hbar^2.
    double reduced_delta_strength(double v0_physical) const;
    double physical_delta_strength(double lambda) const;
    PotentialModel delta_from_physical(double v0_physical) const;

    // E = hbar^2 k^2 / (2 m), applied to any reduced energy (k^2 may be < 0).
    double physical_energy(double k_squared) const;
    double reduced_energy(double e_physical) const;
};

} // namespace scatter1d

#endif
