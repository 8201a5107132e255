// SPDX-License-Identifier: MIT
//
// Closed-form MTW quantity for radial costs on a round sphere, evaluated in the
// stereographic chart centred at the source point.
#pragma once

#include "mtwsphere/costjet.hpp"
#include "mtwsphere/orientation.hpp"
#include "mtwsphere/sphere_chart.hpp"

namespace mtwsphere {

/// E(d;R) = cot(d/R) / R and its first two d-derivatives.
/// E is the transverse eigenvalue of the coordinate Hessian of the distance.
struct EJet {
    real e0 = 0, e1 = 0, e2 = 0;
};

/// Throws DomainError unless 0 < d < R pi.
EJet e_jet(real d, real R);

struct PCoefficients {
    real p1 = 0, p2 = 0, p3 = 0, p4 = 0;
};

/// P1..P4 at distance d on the sphere of radius R.
/// Throws DomainError outside the valid domain, DegenerateCost when f' or f'' vanishes.
PCoefficients p_coefficients(const CostModel& model, real d, real R);

/// Same formulas from a precomputed cost jet and E jet.
PCoefficients p_coefficients(const Jet4& f, const EJet& e);

real o_value(const PCoefficients& c, OrientationCase oc);

/// MTW value for an arbitrary p and orthonormal pair xi, eta.
/// Throws OrthogonalityError if xi, eta are not orthonormal to 1e-12, DomainError if p = 0.
real mtw_general(const PCoefficients& c, const Vec& p, const Vec& xi, const Vec& eta);

struct LimitEstimate {
    double value = 0;
    double error = 0;  // magnitude of the last Richardson correction
};

/// lim_{d -> 0+} O(d) by Richardson extrapolation in d^2 over d = {1e-3, 1e-4, 1e-5} R.
/// Throws DivergentLimit when the samples grow instead of settling.
LimitEstimate small_d_limit(const CostModel& model, double R, OrientationCase oc);

/// Surface measure of the unit sphere S^n in R^{n+1}.
double unit_sphere_volume(int n);

/// Upper bound on the transport distance for densities bounded by rho_sup on the unit S^n.
/// Throws DomainError for n < 1 or rho_sup <= 0.
double gradient_bound(int n, double rho_sup);

}  // namespace mtwsphere
