// SPDX-License-Identifier: MIT
//
// Full-sphere stereographic chart of a round sphere S^n of radius R.
// A chart point z corresponds to the sphere point at angle 2 atan(|z| / 2R)
// from the tangency point; only the antipode of the tangency point is missing.
#pragma once

#include "mtwsphere/costjet.hpp"
#include "mtwsphere/orientation.hpp"

#include <Eigen/Dense>

namespace mtwsphere {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct SphereConfig {
    double R = 1.0;
    int n = 3;

    /// Throws DomainError unless R > 0 and n >= 2.
    void validate() const;
};

struct ChartPoint {
    Vec coords;

    ChartPoint() = default;
    explicit ChartPoint(Vec c) : coords(std::move(c)) {}
    static ChartPoint origin(int n) { return ChartPoint(Vec::Zero(n)); }
};

/// Inner product below which two embedded unit vectors count as antipodal.
inline constexpr double kAntipodalEps = 1e-10;

/// Unit vector in R^{n+1} of the sphere point represented by chart coordinates z.
Vec embed(const Vec& z, double R);

/// Great-circle distance between two chart points, in [0, R pi).
/// Throws AntipodalError when the points are (numerically) antipodal.
double geodesic_distance(const ChartPoint& x, const ChartPoint& y, const SphereConfig& cfg);

/// Cost f(d(x, y)) of two chart points.
double chart_cost(const CostModel& model, const ChartPoint& x, const ChartPoint& y,
                  const SphereConfig& cfg);

/// Chart radius |y| = 2R tan(d / 2R) of the point at distance d from the origin.
double radius_from_distance(double d, const SphereConfig& cfg);

struct ChartTarget {
    ChartPoint y;
    Vec p_dir;  // unit transport direction p / |p|
    Vec xi;
    Vec eta;
};

/// Target point realizing distance d and the given alignment of p = grad_x c
/// at base point x = 0, with xi = e1, eta = e2.
ChartTarget target_from_case(double d, OrientationCase c, const CostModel& model,
                             const SphereConfig& cfg);

}  // namespace mtwsphere
