// SPDX-License-Identifier: MIT
#include "mtwsphere/sphere_chart.hpp"

#include "mtwsphere/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace mtwsphere {

void SphereConfig::validate() const {
    if (!(R > 0) || !std::isfinite(R))
        throw DomainError("sphere radius must be positive and finite");
    if (n < 2)
        throw DomainError("sphere dimension must be at least 2");
}

Vec embed(const Vec& z, double R) {
    // Inverse stereographic projection; equals (sin t z/|z|, cos t) with
    // t = 2 atan(|z| / 2R) but has no removable singularity at z = 0.
    const double t2 = z.squaredNorm() / (4 * R * R);
    Vec u(z.size() + 1);
    u.head(z.size()) = (z / R) / (1 + t2);
    u(z.size()) = (1 - t2) / (1 + t2);
    return u;
}

double geodesic_distance(const ChartPoint& x, const ChartPoint& y, const SphereConfig& cfg) {
    if (x.coords.size() != y.coords.size())
        throw DomainError("chart points have different dimensions");
    if (!x.coords.allFinite() || !y.coords.allFinite())
        throw DomainError("chart point is not finite");
    const Vec u = embed(x.coords, cfg.R);
    const Vec v = embed(y.coords, cfg.R);
    if (u.dot(v) <= -1 + kAntipodalEps)
        throw AntipodalError("chart points are antipodal on the sphere");
    return cfg.R * 2 * std::atan2((u - v).norm(), (u + v).norm());
}

double chart_cost(const CostModel& model, const ChartPoint& x, const ChartPoint& y,
                  const SphereConfig& cfg) {
    const double d = geodesic_distance(x, y, cfg);
    if (d == 0) {
        const double s = model.sign() == Sign::Plus ? 1.0 : -1.0;
        switch (model.family()) {
        case CostFamily::HalfSquare:
        case CostFamily::Chordal:
            return 0;
        case CostFamily::PowerLaw:
            if (model.exponent() > 0) return 0;
            break;
        case CostFamily::SqrtOneMinusDsq:
        case CostFamily::SqrtOnePlusDsq:
            return s;
        default:
            break;
        }
    }
    return static_cast<double>(profile_jet(model, d).f0);
}

double radius_from_distance(double d, const SphereConfig& cfg) {
    if (!(d > 0) || !(d < cfg.R * std::numbers::pi)) {
        std::ostringstream msg;
        msg << "distance " << d << " outside (0, R pi)";
        throw DomainError(msg.str());
    }
    return 2 * cfg.R * std::tan(d / (2 * cfg.R));
}

ChartTarget target_from_case(double d, OrientationCase c, const CostModel& model,
                             const SphereConfig& cfg) {
    cfg.validate();
    if (!model.valid_domain(cfg.R).contains(d)) {
        std::ostringstream msg;
        msg << "distance " << d << " outside the valid domain of " << model.label();
        throw DomainError(msg.str());
    }
    if (c == OrientationCase::PerpToBoth && cfg.n < 3)
        throw DimensionError("p orthogonal to both xi and eta needs n >= 3");

    const Jet4 jet = profile_jet(model, d);
    if (is_negligible(jet.f1, jet))
        throw DegenerateCost("f'(d) vanishes; the target is not determined by p");

    const int n = cfg.n;
    Vec xi = Vec::Unit(n, 0);
    Vec eta = Vec::Unit(n, 1);
    Vec p;
    switch (c) {
    case OrientationCase::PerpToBoth:
        p = Vec::Unit(n, 2);
        break;
    case OrientationCase::ParallelXi:
        p = xi;
        break;
    case OrientationCase::ParallelEta:
        p = eta;
        break;
    case OrientationCase::Diagonal:
        p = (xi + eta) / std::sqrt(2.0);
        break;
    }
    // p = -f'(d) y / |y|, so y points against p when f' > 0.
    const double direction = jet.f1 > 0 ? -1.0 : 1.0;
    ChartTarget t;
    t.y = ChartPoint(radius_from_distance(d, cfg) * direction * p);
    t.p_dir = std::move(p);
    t.xi = std::move(xi);
    t.eta = std::move(eta);
    return t;
}

}  // namespace mtwsphere
