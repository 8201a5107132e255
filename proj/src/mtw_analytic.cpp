// SPDX-License-Identifier: MIT
#include "mtwsphere/mtw_analytic.hpp"

#include "mtwsphere/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mtwsphere {

EJet e_jet(real d, real R) {
    if (!(R > 0) || !(d > 0) || !(d < R * std::numbers::pi_v<real>)) {
        std::ostringstream msg;
        msg << "E(d;R) needs 0 < d < R pi, got d = " << static_cast<double>(d)
            << ", R = " << static_cast<double>(R);
        throw DomainError(msg.str());
    }
    const real t = d / R;
    const real s = std::sin(t);
    const real c = std::cos(t);
    EJet e;
    e.e0 = c / (R * s);
    e.e1 = -1 / (R * R * s * s);
    e.e2 = 2 * c / (R * R * R * s * s * s);
    return e;
}

PCoefficients p_coefficients(const Jet4& f, const EJet& e) {
    const real f1 = f.f1, f2 = f.f2, f3 = f.f3, f4 = f.f4;
    const real E = e.e0, E1 = e.e1, E2 = e.e2;
    PCoefficients p;
    p.p1 = E / f1 + E1 / f2;
    p.p2 = f3 / (f1 * f2) - 2 * f2 / (f1 * f1) - E1 / f2 + E / f1;
    p.p3 = E1 / f2 - E / f1 + E2 * f1 / (f2 * f2) - E1 * f1 * f3 / (f2 * f2 * f2);
    p.p4 = f4 / (f2 * f2) - 5 * f3 / (f1 * f2) - f3 * f3 / (f2 * f2 * f2) + 8 * f2 / (f1 * f1) -
           E2 * f1 / (f2 * f2) + 3 * E1 / f2 + E1 * f1 * f3 / (f2 * f2 * f2) - 3 * E / f1;
    return p;
}

PCoefficients p_coefficients(const CostModel& model, real d, real R) {
    const EJet e = e_jet(d, R);
    const Jet4 f = profile_jet(model, d);
    if (is_negligible(f.f1, f) || is_negligible(f.f2, f)) {
        std::ostringstream msg;
        msg << model.label() << ": f' or f'' vanishes at d = " << static_cast<double>(d);
        throw DegenerateCost(msg.str());
    }
    return p_coefficients(f, e);
}

real o_value(const PCoefficients& c, OrientationCase oc) {
    switch (oc) {
    case OrientationCase::PerpToBoth:
        return c.p1;
    case OrientationCase::ParallelXi:
        return c.p1 + c.p2;
    case OrientationCase::ParallelEta:
        return c.p1 + c.p3;
    case OrientationCase::Diagonal:
        return c.p1 + c.p2 / 2 + c.p3 / 2 + c.p4 / 4;
    }
    return 0;
}

real mtw_general(const PCoefficients& c, const Vec& p, const Vec& xi, const Vec& eta) {
    constexpr double tol = 1e-12;
    if (p.size() != xi.size() || p.size() != eta.size())
        throw DimensionError("p, xi and eta must have the same dimension");
    if (std::abs(xi.dot(eta)) > tol || std::abs(xi.norm() - 1) > tol || std::abs(eta.norm() - 1) > tol)
        throw OrthogonalityError("xi and eta must be orthonormal");
    const double pp = p.squaredNorm();
    if (!(pp > 0))
        throw DomainError("p must be nonzero");
    const real a = static_cast<real>(p.dot(xi)) * p.dot(xi) / pp;
    const real b = static_cast<real>(p.dot(eta)) * p.dot(eta) / pp;
    return c.p1 + a * c.p2 + b * c.p3 + a * b * c.p4;
}

LimitEstimate small_d_limit(const CostModel& model, double R, OrientationCase oc) {
    const real scales[3] = {1e-3L, 1e-4L, 1e-5L};
    real x[3], v[3];
    for (int i = 0; i < 3; ++i) {
        const real d = scales[i] * R;
        x[i] = d * d;
        v[i] = o_value(p_coefficients(model, d, R), oc);
        if (!std::isfinite(v[i]))
            throw DivergentLimit(model.label() + ": O is not finite near d = 0");
    }
    const real diff1 = std::fabs(v[1] - v[0]);
    const real diff2 = std::fabs(v[2] - v[1]);
    if (diff2 > diff1 && diff2 > 1e-6L * (1 + std::fabs(v[1]))) {
        std::ostringstream msg;
        msg << model.label() << ", case " << case_name(oc) << ": O grows without bound as d -> 0";
        throw DivergentLimit(msg.str());
    }
    // Neville extrapolation to x = 0.
    const real a01 = (x[0] * v[1] - x[1] * v[0]) / (x[0] - x[1]);
    const real a12 = (x[1] * v[2] - x[2] * v[1]) / (x[1] - x[2]);
    const real a012 = (x[0] * a12 - x[2] * a01) / (x[0] - x[2]);
    return {static_cast<double>(a012), static_cast<double>(std::fabs(a012 - a12))};
}

double unit_sphere_volume(int n) {
    if (n < 0)
        throw DomainError("sphere dimension must be non-negative");
    const double k = (n + 1) / 2.0;
    return 2 * std::pow(std::numbers::pi, k) / std::tgamma(k);
}

double gradient_bound(int n, double rho_sup) {
    if (n < 1)
        throw DomainError("gradient bound needs n >= 1");
    if (!(rho_sup > 0))
        throw DomainError("gradient bound needs rho_sup > 0");
    const double ratio = n * unit_sphere_volume(n) / (2 * unit_sphere_volume(n - 1));
    const double braces = ratio * ratio / rho_sup;
    return std::numbers::pi - std::pow(braces, 1.0 / n) / (2 * std::numbers::pi);
}

}  // namespace mtwsphere
