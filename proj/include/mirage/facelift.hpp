#pragma once

#include "mirage/continuation.hpp"

namespace mirage {

// Lifted configuration over F + R^{I^c}: phi_i unchanged on I, phi_i + e_i on
// the complement. Carries the ascending complement index order used for the
// extra coordinates.
struct LiftedConfiguration {
    Configuration base;
    SubsetMask face_set = 0;
    std::vector<int> complement; // 0-based indices outside I, ascending
    Configuration lifted;
};

LiftedConfiguration lift(const Configuration& cfg, SubsetMask face_set);

// The lifted tope tau_I = {(lambda,y) : y > 0, lambda - sum y_i phi_i in tau_I}
// where tau_I is the Phi_I-tope containing the base tope.
Tope lifted_tope(const LiftedConfiguration& lc, const Tope& base_tope);

// (lambda, y) stacked in the lifted coordinate order.
RatVec lifted_parameter(const LiftedConfiguration& lc, const RatVec& lambda, const RatVec& y);
IntVec lifted_parameter(const LiftedConfiguration& lc, const IntVec& lambda, const IntVec& y);

// T(y)(x): Geom of the lifted Brianchon-Gram polynomial at x, times the
// indicator prod [y_i >= 0]. x must lie on the slice V(Phi~_I,(lambda,y)).
Int slice_value(const Configuration& cfg, const Tope& tau, SubsetMask face_set, const RatVec& lambda,
                const RatVec& y, const IntVec& x);

// P(y): the signed lattice sum of the lifted continuation over the slice,
// times the indicator prod [y_i >= 0]. Valid for lambda in the closure of tau.
Int slice_count(const Configuration& cfg, const Tope& tau, SubsetMask face_set, const IntVec& lambda,
                const IntVec& y);

// Quasi-polynomial fit of y -> slice_count over the transverse lattice grid
// D~ * {0..deg}^{|I^c|}, holdout-verified like quasipoly_fit.
QuasiPolyFit transverse_quasipoly_fit(const Configuration& cfg, const Tope& tau, SubsetMask face_set,
                                      const IntVec& lambda);

} // namespace mirage
