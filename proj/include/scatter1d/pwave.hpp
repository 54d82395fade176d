#ifndef SCATTER1D_PWAVE_HPP
#define SCATTER1D_PWAVE_HPP

#include "scatter1d/potential.hpp"

namespace scatter1d {

/// Full plane-wave matrix element <q|V|q'> = Int dx e^{-iqx} V(x) e^{iq'x},
/// real for symmetric real V. q and q' are signed.
double v_full(const PotentialModel& model, double q_out, double q_in);

/// Partial-wave element: cosine transform for parity L = 0, sine transform
/// for L = 1, both over the half line. Closed forms for the analytic kinds;
/// momentum-scaled Gauss-Legendre on [0, range] for tabulated models.
double v_partial(const PotentialModel& model, int parity, double q, double qp);

/// |<eps q|V|q'> - 2 sum_L eps^L <q|V_L|q'>| -- the parity decomposition
/// identity; should vanish to quadrature accuracy.
double parity_reconstruction_residual(const PotentialModel& model, int eps,
                                      double q, double qp);

/// Bound view of one parity channel of a potential.
class PartialWaveV {
public:
    PartialWaveV(const PotentialModel& model, int parity);

    double operator()(double q, double qp) const { return v_partial(*model_, parity_, q, qp); }
    int parity() const { return parity_; }
    bool analytic() const { return analytic_; }

private:
    const PotentialModel* model_;
    int parity_;
    bool analytic_;
};

} // namespace scatter1d

#endif
