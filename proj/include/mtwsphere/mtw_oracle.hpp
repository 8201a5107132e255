// SPDX-License-Identifier: MIT
//
// Formula-free MTW tensor from finite differences of the chart cost.
#pragma once

#include "mtwsphere/costjet.hpp"
#include "mtwsphere/orientation.hpp"
#include "mtwsphere/sphere_chart.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace mtwsphere {

struct StencilConfig {
    double h_x = 0;  // 0 selects 1e-2 max(1, |y|)
    double h_y = 0;
    int scheme = 2;  // central-difference order, 2 or 4

    /// Steps resolved against the target point; throws DomainError for a bad scheme or step.
    [[nodiscard]] StencilConfig resolved(const Vec& y) const;
    [[nodiscard]] StencilConfig halved() const { return {h_x / 2, h_y / 2, scheme}; }
};

struct OracleResult {
    double value = 0;
    double est_error = 0;
    double condition = 0;  // 2-norm condition number of [c_{i,j}]
};

using ChartCostFn = std::function<double(const Vec& x, const Vec& y)>;

/// One directional factor of a mixed derivative: `order` derivatives along `dir`.
struct DirPower {
    Vec dir;
    int order = 0;
};

/// Tensor-product central difference of a mixed directional derivative.
/// Total order is limited to 4. Throws StencilDomainError if the cost fails at any node.
double directional_partial(const ChartCostFn& cost, const Vec& x, const Vec& y,
                           const std::vector<DirPower>& x_parts,
                           const std::vector<DirPower>& y_parts, const StencilConfig& cfg);

/// Mixed partial along coordinate axes, e.g. x_dirs = {0, 0}, y_dirs = {1} for c_{11,2}.
double mixed_partial(const ChartCostFn& cost, const Vec& x, const Vec& y,
                     const std::vector<int>& x_dirs, const std::vector<int>& y_dirs,
                     const StencilConfig& cfg);

/// Chart cost of a model as a callable.
ChartCostFn model_cost(const CostModel& model, const SphereConfig& cfg);

/// MTW tensor contracted with xi, xi, eta, eta at (x, y), for a generic chart cost.
OracleResult mtw_tensor_fd(const ChartCostFn& cost, const Vec& x, const Vec& y, const Vec& xi,
                           const Vec& eta, const StencilConfig& stencil);

/// MTW tensor at base point 0 and target y for a radial cost.
OracleResult mtw_tensor_fd(const CostModel& model, const SphereConfig& cfg, const ChartPoint& y,
                           const Vec& xi, const Vec& eta, const StencilConfig& stencil = {});

struct InvarianceResult {
    OracleResult original;
    OracleResult transformed;
};

/// Tensor before and after the linear change of source coordinates x' = g x.
/// Throws DomainError if cond(g) >= 50.
InvarianceResult invariance_check(const CostModel& model, const SphereConfig& cfg,
                                  const ChartPoint& y, const Vec& xi, const Vec& eta,
                                  const Mat& g, const StencilConfig& stencil = {});

struct OracleTask {
    CostModel model;
    double R = 1;
    double d = 1;
    OrientationCase oc = OrientationCase::ParallelXi;
};

struct OracleComparison {
    OracleTask task;
    double analytic = 0;
    OracleResult oracle;
    bool ok = false;
    std::string error;  // non-empty if either side threw
};

/// Acceptance band max(1e-3 (1 + |analytic|), 5 est_error).
[[nodiscard]] bool oracle_agrees(double analytic, const OracleResult& r);

/// Oracle dimension: 3 for PerpToBoth, 2 otherwise.
[[nodiscard]] inline int oracle_dimension(OrientationCase oc) {
    return oc == OrientationCase::PerpToBoth ? 3 : 2;
}

OracleComparison compare_one(const OracleTask& task, const StencilConfig& stencil = {});

/// Parallel sweep; results are ordered as `tasks`.
std::vector<OracleComparison> oracle_sweep(const std::vector<OracleTask>& tasks,
                                           const StencilConfig& stencil = {});
/// Serial reference for oracle_sweep.
std::vector<OracleComparison> oracle_sweep_serial(const std::vector<OracleTask>& tasks,
                                                  const StencilConfig& stencil = {});

}  // namespace mtwsphere
