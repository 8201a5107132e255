// SPDX-License-Identifier: MIT
#include "mtwsphere/mtw_oracle.hpp"

#include "mtwsphere/errors.hpp"
#include "mtwsphere/mtw_analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

namespace mtwsphere {

namespace {

struct Stencil1D {
    std::vector<double> offsets;  // in units of h
    std::vector<double> weights;  // divided by h^order
};

Stencil1D make_stencil(int order, int scheme) {
    // Weights listed on symmetric nodes -k..k; zeros are dropped.
    std::vector<double> w;
    if (scheme == 2) {
        switch (order) {
        case 1: w = {-0.5, 0, 0.5}; break;
        case 2: w = {1, -2, 1}; break;
        case 3: w = {-0.5, 1, 0, -1, 0.5}; break;
        case 4: w = {1, -4, 6, -4, 1}; break;
        }
    } else {
        switch (order) {
        case 1: w = {1.0 / 12, -2.0 / 3, 0, 2.0 / 3, -1.0 / 12}; break;
        case 2: w = {-1.0 / 12, 4.0 / 3, -2.5, 4.0 / 3, -1.0 / 12}; break;
        case 3: w = {1.0 / 8, -1, 13.0 / 8, 0, -13.0 / 8, 1, -1.0 / 8}; break;
        case 4: w = {-1.0 / 6, 2, -6.5, 28.0 / 3, -6.5, 2, -1.0 / 6}; break;
        }
    }
    Stencil1D s;
    const int k = static_cast<int>(w.size()) / 2;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (w[i] == 0)
            continue;
        s.offsets.push_back(i - k);
        s.weights.push_back(w[i]);
    }
    return s;
}

struct Node {
    Vec dx;
    Vec dy;
    double weight;
};

void expand(std::vector<Node>& nodes, const DirPower& part, double h, int scheme, bool on_x) {
    if (part.order == 0)
        return;
    const double len = part.dir.norm();
    if (!(len > 0) || !std::isfinite(len))
        throw DomainError("derivative direction must be nonzero and finite");
    // Step along the unit direction; D_v^k = |v|^k D_u^k.
    const Vec unit = part.dir / len;
    const Stencil1D s = make_stencil(part.order, scheme);
    const double scale = std::pow(len / h, part.order);
    std::vector<Node> out;
    out.reserve(nodes.size() * s.offsets.size());
    for (const Node& n : nodes) {
        for (std::size_t i = 0; i < s.offsets.size(); ++i) {
            Node m = n;
            (on_x ? m.dx : m.dy) += s.offsets[i] * h * unit;
            m.weight *= s.weights[i] * scale;
            out.push_back(std::move(m));
        }
    }
    nodes = std::move(out);
}

double eval_at(const ChartCostFn& cost, const Vec& x, const Vec& y) {
    double v;
    try {
        v = cost(x, y);
    } catch (const Error& e) {
        throw StencilDomainError(std::string("stencil node outside the domain: ") + e.what());
    }
    if (!std::isfinite(v))
        throw StencilDomainError("cost is not finite at a stencil node");
    return v;
}

std::vector<DirPower> axis_parts(const std::vector<int>& dirs, int n) {
    std::map<int, int> count;
    for (int a : dirs) {
        if (a < 0 || a >= n)
            throw DimensionError("derivative axis out of range");
        ++count[a];
    }
    std::vector<DirPower> parts;
    for (auto [axis, k] : count)
        parts.push_back({Vec::Unit(n, axis), k});
    return parts;
}

Mat mixed_hessian(const ChartCostFn& cost, const Vec& x, const Vec& y, const StencilConfig& st) {
    const int n = static_cast<int>(x.size());
    Mat C(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            C(i, j) = directional_partial(cost, x, y, {{Vec::Unit(n, i), 1}}, {{Vec::Unit(n, j), 1}}, st);
    return C;
}

std::pair<double, double> extreme_singular_values(const Mat& C) {
    Eigen::JacobiSVD<Mat> svd(C);
    const auto& sv = svd.singularValues();
    return {sv(0), sv(C.rows() - 1)};
}

// Singular when the smallest singular value is not resolved above its own discretisation error.
void require_invertible(const Mat& coarse, const Mat& fine) {
    const auto [cmax, cmin] = extreme_singular_values(coarse);
    const auto [smax, smin] = extreme_singular_values(fine);
    if (!std::isfinite(smax) || !std::isfinite(cmax) || !(smin > 1e-12 * smax) ||
        !(smin > std::abs(cmin - smin)))
        throw SingularMixedHessian("mixed Hessian [c_{i,j}] is singular");
}

OracleResult tensor_once(const ChartCostFn& cost, const Vec& x, const Vec& y, const Vec& xi,
                         const Vec& eta, const StencilConfig& st, const Mat& C) {
    const int n = static_cast<int>(x.size());
    const auto [smax, smin] = extreme_singular_values(C);
    Eigen::PartialPivLU<Mat> lu(C);

    // zeta = C^{-1} eta carries the target-side indices.
    const Vec zeta = lu.solve(eta);
    Vec A(n), B(n);
    for (int q = 0; q < n; ++q)
        A(q) = directional_partial(cost, x, y, {{xi, 2}}, {{Vec::Unit(n, q), 1}}, st);
    for (int r = 0; r < n; ++r)
        B(r) = directional_partial(cost, x, y, {{Vec::Unit(n, r), 1}}, {{zeta, 2}}, st);
    const double D = directional_partial(cost, x, y, {{xi, 2}}, {{zeta, 2}}, st);
    // A^T C^{-1} B, with A indexed by y and B by x.
    const Vec w = lu.solve(B);
    OracleResult r;
    r.value = -(A.dot(w) - D);
    r.condition = smax / smin;
    return r;
}

}  // namespace

StencilConfig StencilConfig::resolved(const Vec& y) const {
    if (scheme != 2 && scheme != 4)
        throw DomainError("stencil scheme must be 2 or 4");
    if (h_x < 0 || h_y < 0 || !std::isfinite(h_x) || !std::isfinite(h_y))
        throw DomainError("stencil steps must be non-negative and finite");
    const double def = 1e-2 * std::max(1.0, y.norm());
    return {h_x > 0 ? h_x : def, h_y > 0 ? h_y : def, scheme};
}

double directional_partial(const ChartCostFn& cost, const Vec& x, const Vec& y,
                           const std::vector<DirPower>& x_parts,
                           const std::vector<DirPower>& y_parts, const StencilConfig& cfg) {
    int total = 0;
    for (const auto& p : x_parts)
        total += p.order;
    for (const auto& p : y_parts)
        total += p.order;
    if (total > 4)
        throw DomainError("mixed partial order exceeds 4");
    const StencilConfig st = cfg.resolved(y);

    std::vector<Node> nodes{{Vec::Zero(x.size()), Vec::Zero(y.size()), 1.0}};
    for (const auto& p : x_parts)
        expand(nodes, p, st.h_x, st.scheme, true);
    for (const auto& p : y_parts)
        expand(nodes, p, st.h_y, st.scheme, false);

    double acc = 0;
    for (const Node& nd : nodes)
        acc += nd.weight * eval_at(cost, x + nd.dx, y + nd.dy);
    return acc;
}

double mixed_partial(const ChartCostFn& cost, const Vec& x, const Vec& y,
                     const std::vector<int>& x_dirs, const std::vector<int>& y_dirs,
                     const StencilConfig& cfg) {
    if (x_dirs.size() + y_dirs.size() > 4)
        throw DomainError("mixed partial order exceeds 4");
    return directional_partial(cost, x, y, axis_parts(x_dirs, static_cast<int>(x.size())),
                               axis_parts(y_dirs, static_cast<int>(y.size())), cfg);
}

ChartCostFn model_cost(const CostModel& model, const SphereConfig& cfg) {
    return [model, cfg](const Vec& x, const Vec& y) {
        return chart_cost(model, ChartPoint(x), ChartPoint(y), cfg);
    };
}

OracleResult mtw_tensor_fd(const ChartCostFn& cost, const Vec& x, const Vec& y, const Vec& xi,
                           const Vec& eta, const StencilConfig& stencil) {
    if (x.size() != y.size() || xi.size() != x.size() || eta.size() != x.size())
        throw DimensionError("x, y, xi and eta must have the same dimension");
    const StencilConfig st = stencil.resolved(y);
    const StencilConfig half = st.halved();
    const Mat c_coarse = mixed_hessian(cost, x, y, st);
    const Mat c_fine = mixed_hessian(cost, x, y, half);
    require_invertible(c_coarse, c_fine);
    const OracleResult coarse = tensor_once(cost, x, y, xi, eta, st, c_coarse);
    OracleResult fine = tensor_once(cost, x, y, xi, eta, half, c_fine);
    fine.est_error = std::abs(coarse.value - fine.value) / 3;
    return fine;
}

OracleResult mtw_tensor_fd(const CostModel& model, const SphereConfig& cfg, const ChartPoint& y,
                           const Vec& xi, const Vec& eta, const StencilConfig& stencil) {
    cfg.validate();
    if (y.coords.size() != cfg.n)
        throw DimensionError("target point dimension differs from the sphere dimension");
    if (std::abs(xi.dot(eta)) > 1e-12)
        throw OrthogonalityError("xi and eta must be orthogonal");
    const StencilConfig st = stencil.resolved(y.coords);
    const ChartPoint x = ChartPoint::origin(cfg.n);
    const double d = geodesic_distance(x, y, cfg);
    const double reach_x = st.scheme == 2 ? st.h_x : 2 * st.h_x;
    const double reach_y = st.scheme == 2 ? st.h_y : 2 * st.h_y;
    // conformal factor bounds the sphere displacement of a chart step
    const double near = std::max(0.0, y.coords.norm() - reach_y);
    const double move_x = 2 * cfg.R * std::atan(reach_x / (2 * cfg.R));
    const double move_y = reach_y / (1 + near * near / (4 * cfg.R * cfg.R));
    if (!(move_x + move_y < (cfg.R * std::numbers::pi - d) / 2))
        throw AntipodalError("stencil reaches the antipodal set of the base point");
    return mtw_tensor_fd(model_cost(model, cfg), x.coords, y.coords, xi, eta, stencil);
}

InvarianceResult invariance_check(const CostModel& model, const SphereConfig& cfg,
                                  const ChartPoint& y, const Vec& xi, const Vec& eta,
                                  const Mat& g, const StencilConfig& stencil) {
    if (g.rows() != cfg.n || g.cols() != cfg.n)
        throw DimensionError("linear map has the wrong shape");
    Eigen::JacobiSVD<Mat> svd(g);
    const auto& sv = svd.singularValues();
    if (!(sv(cfg.n - 1) > 0) || !(sv(0) / sv(cfg.n - 1) < 50))
        throw DomainError("linear map must have condition number below 50");

    InvarianceResult out;
    out.original = mtw_tensor_fd(model, cfg, y, xi, eta, stencil);

    const Mat ginv = g.inverse();
    const ChartCostFn base = model_cost(model, cfg);
    const ChartCostFn moved = [base, ginv](const Vec& xp, const Vec& yy) { return base(ginv * xp, yy); };
    const Vec xi2 = g * xi;
    const Vec eta2 = ginv.transpose() * eta;
    out.transformed = mtw_tensor_fd(moved, Vec::Zero(cfg.n), y.coords, xi2, eta2, stencil);
    return out;
}

bool oracle_agrees(double analytic, const OracleResult& r) {
    const double diff = std::abs(r.value - analytic);
    return diff <= std::max(1e-3 * (1 + std::abs(analytic)), 5 * r.est_error);
}

OracleComparison compare_one(const OracleTask& task, const StencilConfig& stencil) {
    OracleComparison out{task, 0, {}, false, {}};
    try {
        SphereConfig cfg{task.R, oracle_dimension(task.oc)};
        out.analytic = static_cast<double>(o_value(p_coefficients(task.model, task.d, task.R), task.oc));
        const ChartTarget t = target_from_case(task.d, task.oc, task.model, cfg);
        out.oracle = mtw_tensor_fd(task.model, cfg, t.y, t.xi, t.eta, stencil);
        out.ok = oracle_agrees(out.analytic, out.oracle);
    } catch (const Error& e) {
        out.error = e.what();
    }
    return out;
}

std::vector<OracleComparison> oracle_sweep(const std::vector<OracleTask>& tasks,
                                           const StencilConfig& stencil) {
    std::vector<std::optional<OracleComparison>> slots(tasks.size());
    const long n = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
        slots[i] = compare_one(tasks[i], stencil);
    std::vector<OracleComparison> out;
    out.reserve(tasks.size());
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

std::vector<OracleComparison> oracle_sweep_serial(const std::vector<OracleTask>& tasks,
                                                  const StencilConfig& stencil) {
    std::vector<OracleComparison> out;
    out.reserve(tasks.size());
    for (const auto& t : tasks)
        out.push_back(compare_one(t, stencil));
    return out;
}

}  // namespace mtwsphere
