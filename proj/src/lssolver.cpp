#include "scatter1d/lssolver.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>

#include "scatter1d/errors.hpp"
#include "scatter1d/pwave.hpp"

namespace scatter1d {

namespace {

struct SignLogDet {
    int sign = 0;
    double log_abs = 0.0;

    double value() const
    {
        if (sign == 0)
            return 0.0;
        return sign * std::exp(std::min(log_abs, 700.0));
    }
};

SignLogDet sign_log_det(const Eigen::MatrixXd& m)
{
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
    SignLogDet d;
    d.sign = lu.permutationP().determinant() > 0 ? 1 : -1;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        const double piv = lu.matrixLU()(i, i);
        if (piv == 0.0) {
            d.sign = 0;
            return d;
        }
        d.sign *= piv > 0.0 ? 1 : -1;
        d.log_abs += std::log(std::abs(piv));
    }
    return d;
}

} // namespace

HalfOffShellT solve_halfoffshell(const PotentialModel& model, int parity, double k,
                                 std::size_t n_grid, double map_scale)
{
    if (parity != 0 && parity != 1)
        throw std::invalid_argument("solve_halfoffshell: parity must be 0 or 1");
    if (k <= 0.0 || !std::isfinite(k))
        throw std::invalid_argument("solve_halfoffshell: k must be positive");

    HalfOffShellT result;
    result.parity = parity;
    result.k = k;
    result.grid = build_grid(n_grid, map_scale, k);

    const std::size_t n = result.grid.size();
    const auto omega = singular_weights(result.grid, k);

    // Potential kernel on the extended point set; symmetric, so fill one half.
    Eigen::MatrixXd v(n + 1, n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double qi = result.grid.point(i);
        for (std::size_t j = i; j <= n; ++j) {
            const double e = v_partial(model, parity, qi, result.grid.point(j));
            v(i, j) = e;
            v(j, i) = e;
        }
    }

    Eigen::MatrixXcd a = Eigen::MatrixXcd::Identity(n + 1, n + 1);
    Eigen::VectorXcd b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        for (std::size_t j = 0; j <= n; ++j)
            a(i, j) -= v(i, j) * omega[j];
        b(i) = v(i, n); // driving term at fixed second argument k
    }

    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
    const double rcond = lu.rcond();
    Eigen::VectorXcd t = lu.solve(b);

    result.condition_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
    result.condition_warning = result.condition_estimate > 1e12;
    result.solve_residual = (a * t - b).cwiseAbs().maxCoeff();

    if (!t.allFinite() || !std::isfinite(result.solve_residual) || result.solve_residual > 1e-6) {
        std::ostringstream msg;
        msg << "lssolver: singular or ill-conditioned system for " << model.describe()
            << " (L=" << parity << ", k=" << k << ", n=" << n_grid
            << ", condition~" << result.condition_estimate << ")";
        throw NumericError(msg.str());
    }

    result.values.assign(t.data(), t.data() + t.size());
    return result;
}

double born_term(const PotentialModel& model, int parity, double q, double qp)
{
    return v_partial(model, parity, q, qp);
}

BoundStateScan find_bound_states(const PotentialModel& model, int parity,
                                 double e_min, double e_max, std::size_t n_scan,
                                 std::size_t n_grid)
{
    if (!(e_min < e_max && e_max < 0.0))
        throw std::invalid_argument("find_bound_states: need e_min < e_max < 0");
    if (n_scan < 2)
        throw std::invalid_argument("find_bound_states: need at least 2 scan points");

    // The on-shell appendage plays no role below threshold; the grid only
    // supplies interior nodes. Scale follows the deepest momentum probed.
    const double scale = std::max(1.0, std::sqrt(-e_min));
    const MomentumGrid grid = build_grid(n_grid, scale, 1.0);
    const std::size_t n = grid.size();

    Eigen::MatrixXd v(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double e = v_partial(model, parity, grid.nodes[i], grid.nodes[j]);
            v(i, j) = e;
            v(j, i) = e;
        }

    auto determinant = [&](double energy) {
        const auto w = regular_weights(grid, energy);
        Eigen::MatrixXd sys = Eigen::MatrixXd::Identity(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sys(i, j) -= (2.0 / std::numbers::pi) * v(i, j) * w[j];
        return sign_log_det(sys);
    };

    BoundStateScan scan;
    const double step = (e_max - e_min) / static_cast<double>(n_scan - 1);

    SignLogDet prev = determinant(e_min);
    double e_prev = e_min;
    for (std::size_t i = 1; i < n_scan; ++i) {
        const double e = i + 1 == n_scan ? e_max : e_min + step * static_cast<double>(i);
        SignLogDet cur = determinant(e);
        if (prev.sign != 0 && cur.sign != 0 && prev.sign != cur.sign) {
            double lo = e_prev, hi = e;
            SignLogDet at_root;
            while (hi - lo > 1e-10) {
                const double mid = 0.5 * (lo + hi);
                at_root = determinant(mid);
                if (at_root.sign == 0)
                    break;
                if (at_root.sign == prev.sign)
                    lo = mid;
                else
                    hi = mid;
            }
            BoundState state;
            state.parity = parity;
            state.energy = 0.5 * (lo + hi);
            state.det_residual = std::abs(determinant(state.energy).value());
            scan.states.push_back(state);
        } else if (cur.sign == 0) {
            scan.states.push_back({parity, e, 0.0});
        }
        prev = cur;
        e_prev = e;
    }

    const double margin = 0.01 * (e_max - e_min);
    for (const auto& s : scan.states) {
        if (s.energy - e_min < margin || e_max - s.energy < margin) {
            std::ostringstream msg;
            msg << "bound state at E=" << s.energy << " sits within 1% of the window ["
                << e_min << ", " << e_max << "]; states outside may have been missed";
            scan.warnings.push_back(msg.str());
        }
    }
    return scan;
}

} // namespace scatter1d
