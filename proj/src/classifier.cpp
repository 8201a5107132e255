// SPDX-License-Identifier: MIT
#include "mtwsphere/classifier.hpp"

#include "mtwsphere/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mtwsphere {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct PointValues {
    std::array<double, 4> p{kNaN, kNaN, kNaN, kNaN};
    std::array<double, 4> o{kNaN, kNaN, kNaN, kNaN};
    bool degenerate = true;
};

PointValues evaluate(const CostModel& model, double d, double R) {
    PointValues v;
    try {
        const PCoefficients c = p_coefficients(model, d, R);
        v.p = {static_cast<double>(c.p1), static_cast<double>(c.p2), static_cast<double>(c.p3),
               static_cast<double>(c.p4)};
        for (auto oc : kAllCases)
            v.o[case_index(oc)] = static_cast<double>(o_value(c, oc));
        v.degenerate = false;
        for (double x : v.o)
            if (!std::isfinite(x))
                v.degenerate = true;
    } catch (const DegenerateCost&) {
    }
    if (v.degenerate) {
        v.p.fill(kNaN);
        v.o.fill(kNaN);
    }
    return v;
}

ScanReport assemble(const CostModel& model, const SphereConfig& cfg, std::vector<double> grid,
                    const std::vector<PointValues>& vals) {
    ScanReport r;
    r.model_label = model.label();
    r.R = cfg.R;
    r.grid = std::move(grid);
    const std::size_t n = r.grid.size();
    r.p_values.resize(n);
    r.degenerate.resize(n);
    for (auto& o : r.o_values)
        o.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.p_values[i] = vals[i].p;
        r.degenerate[i] = vals[i].degenerate;
        for (int k = 0; k < 4; ++k)
            r.o_values[k][i] = vals[i].o[k];
    }
    for (int k = 0; k < 4; ++k) {
        const auto& o = r.o_values[k];
        double sup = kNaN, at = kNaN;
        for (std::size_t i = 0; i < n; ++i) {
            if (r.degenerate[i])
                continue;
            if (std::isnan(sup) || o[i] > sup) {
                sup = o[i];
                at = r.grid[i];
            }
        }
        r.sup_values[k] = sup;
        r.sup_at[k] = at;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (r.degenerate[i] || r.degenerate[i + 1])
                continue;
            if ((o[i] < 0 && o[i + 1] > 0) || (o[i] > 0 && o[i + 1] < 0))
                r.sign_changes[k].push_back({r.grid[i], r.grid[i + 1]});
        }
    }
    return r;
}

double bisect(const std::function<double(double)>& g, double a, double b, double tol, double& ga) {
    double fa = g(a);
    while (b - a > tol) {
        const double mid = a + (b - a) / 2;
        if (mid <= a || mid >= b)
            break;
        const double fm = g(mid);
        if (fm == 0) {
            ga = 0;
            return mid;
        }
        if ((fm < 0) == (fa < 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    const double root = a + (b - a) / 2;
    ga = g(root);
    return root;
}

}  // namespace

void ScanOptions::validate() const {
    if (grid_size < 64)
        throw DomainError("grid size must be at least 64");
    if (!(margin > 0 && margin < 0.5))
        throw DomainError("margin must lie in (0, 0.5)");
    if (log_points < 0)
        throw DomainError("log point count must be non-negative");
    if (!(log_floor > 0 && log_floor < 1))
        throw DomainError("log floor must lie in (0, 1)");
}

std::vector<double> scan_grid(const CostModel& model, const SphereConfig& cfg, const ScanOptions& opt) {
    cfg.validate();
    opt.validate();
    const double top = cfg.R * std::numbers::pi;
    const Interval valid = model.valid_domain(cfg.R);
    if (valid.empty())
        throw EmptyDomain(model.label() + ": empty valid domain");

    const bool lower_cut = opt.lower && *opt.lower > valid.lo;
    const bool upper_cut = opt.upper && *opt.upper < valid.hi;
    const double a = lower_cut ? *opt.lower : valid.lo + opt.margin * top;
    const double b = upper_cut ? *opt.upper : valid.hi - opt.margin * top;
    if (!(a < b))
        throw EmptyDomain(model.label() + ": nothing left of the domain after truncation");

    const int m = opt.grid_size;
    std::vector<double> grid;
    for (int i = 0; i < m; ++i)
        grid.push_back(i == m - 1 ? b : a + (b - a) * i / (m - 1));

    if (!lower_cut && valid.lo == 0 && opt.log_points > 0) {
        const double floor = opt.log_floor * top;
        const int L = opt.log_points;
        std::vector<double> refine;
        if (floor < a) {
            const double ratio = std::log(a / floor);
            for (int k = 0; k < L; ++k)
                refine.push_back(floor * std::exp(ratio * k / L));
        } else if (m > 1) {
            // refine inside the first linear cell
            const double ratio = std::log(grid[1] / a);
            for (int k = 1; k <= L; ++k)
                refine.push_back(a * std::exp(ratio * k / (L + 1)));
        }
        grid.insert(grid.end(), refine.begin(), refine.end());
        std::sort(grid.begin(), grid.end());
    }
    return grid;
}

ScanReport scan(const CostModel& model, const SphereConfig& cfg, const ScanOptions& opt) {
    std::vector<double> grid = scan_grid(model, cfg, opt);
    std::vector<PointValues> vals(grid.size());
    const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
        vals[i] = evaluate(model, grid[i], cfg.R);
    return assemble(model, cfg, std::move(grid), vals);
}

ScanReport scan_serial(const CostModel& model, const SphereConfig& cfg, const ScanOptions& opt) {
    std::vector<double> grid = scan_grid(model, cfg, opt);
    std::vector<PointValues> vals;
    vals.reserve(grid.size());
    for (double d : grid)
        vals.push_back(evaluate(model, d, cfg.R));
    return assemble(model, cfg, std::move(grid), vals);
}

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::StrongA3:
        return "StrongA3";
    case Verdict::A3w:
        return "A3w";
    case Verdict::Violated:
        return "Violated";
    case Verdict::Indeterminate:
        return "Indeterminate";
    }
    return "?";
}

std::optional<Verdict> parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::StrongA3, Verdict::A3w, Verdict::Violated, Verdict::Indeterminate})
        if (s == verdict_name(v))
            return v;
    return std::nullopt;
}

std::vector<OrientationCase> considered_cases(int n) {
    if (n < 2)
        throw DimensionError("classification needs n >= 2");
    if (n == 2)
        return {OrientationCase::ParallelXi, OrientationCase::ParallelEta, OrientationCase::Diagonal};
    return {kAllCases.begin(), kAllCases.end()};
}

ClassificationReport classify(const ScanReport& report, int n, double strictness) {
    if (!(strictness >= 0))
        throw DomainError("strictness must be non-negative");
    ClassificationReport c;
    c.dimension = n;
    c.considered = considered_cases(n);
    c.resolution = static_cast<int>(report.grid.size());

    double M = kNaN;
    for (auto oc : c.considered) {
        const double s = report.sup_values[case_index(oc)];
        if (std::isnan(s))
            continue;
        if (std::isnan(M) || s > M) {
            M = s;
            c.witness = Witness{report.sup_at[case_index(oc)], oc, s};
        }
    }
    c.sup = M;
    if (std::isnan(M))
        c.verdict = Verdict::Indeterminate;
    else if (M > strictness)
        c.verdict = Verdict::Violated;
    else if (M < 0 && M <= -strictness) {
        c.verdict = Verdict::StrongA3;
        c.constant = -M;
    } else if (M <= 0)
        c.verdict = Verdict::A3w;
    else
        c.verdict = Verdict::Indeterminate;
    return c;
}

BifurcationResult refine_root(const CostModel& model, const SphereConfig& cfg, OrientationCase oc,
                              SignChange bracket) {
    cfg.validate();
    auto g = [&](double d) {
        return static_cast<double>(o_value(p_coefficients(model, d, cfg.R), oc));
    };
    const double ga = g(bracket.lo);
    const double gb = g(bracket.hi);
    if (!((ga < 0 && gb > 0) || (ga > 0 && gb < 0))) {
        if (ga == 0 || gb == 0) {
            const double root = ga == 0 ? bracket.lo : bracket.hi;
            return {"d", bracket, root, 0.0};
        }
        std::ostringstream msg;
        msg << model.label() << ", case " << case_name(oc) << ": no sign change on [" << bracket.lo
            << ", " << bracket.hi << "]";
        throw NoSignChange(msg.str());
    }
    double res = 0;
    const double root = bisect(g, bracket.lo, bracket.hi, 1e-12 * cfg.R * std::numbers::pi, res);
    return {"d", bracket, root, res};
}

std::vector<BifurcationResult> roots_on_scan(const CostModel& model, const SphereConfig& cfg,
                                             OrientationCase oc, const ScanReport& report) {
    std::vector<BifurcationResult> out;
    for (const SignChange& sc : report.sign_changes[case_index(oc)]) {
        try {
            out.push_back(refine_root(model, cfg, oc, sc));
        } catch (const Error&) {
        }
    }
    return out;
}

double eq4_numerator(double d, double m, double R) {
    if (!(R > 0) || !(d > 0) || !(d < R * std::numbers::pi))
        throw DomainError("eq4_numerator needs 0 < d < R pi");
    if (m == 1)
        throw DomainError("eq4_numerator needs m != 1");
    const double s = std::sin(d / (2 * R));
    const double c = std::cos(d / (2 * R));
    const double a = m - 1;
    const double b = m - 2;
    return -2 * std::pow(d, 5) * c + (6 * m - 5) * 2 * R * std::pow(d, 4) * s -
           a * a * 4 * R * R * std::pow(d, 3) * s * s * c -
           2 * a * (m * m - 2 * m + 2) * 8 * R * R * R * d * d * s * s * s -
           a * a * b * b * 8 * R * R * R * std::pow(d, m) * s * s * s;
}

BifurcationResult mstar_cubic() {
    auto g = [](double m) { return -2 * m * m * m + 5 * m * m - 4; };
    double res = 0;
    const double root = bisect(g, -1.0, 0.0, 1e-15, res);
    return {"m", {-1.0, 0.0}, root, res};
}

BifurcationResult mstar_positive(double R_large) {
    if (!(R_large >= 1e3))
        throw DomainError("mstar_positive needs R_large >= 1e3");
    const double d = R_large * std::numbers::pi * (1 - 1e-6);
    auto g = [&](double m) {
        const CostModel model = CostModel::power_law(Sign::Plus, m);
        return static_cast<double>(o_value(p_coefficients(model, d, R_large), OrientationCase::Diagonal));
    };
    constexpr int steps = 200;
    double prev_m = 0.0025, prev = g(prev_m);
    for (int k = 1; k <= steps; ++k) {
        const double m = 0.0025 + (0.995 - 0.0025) * k / steps;
        const double cur = g(m);
        if ((prev < 0 && cur > 0) || (prev > 0 && cur < 0)) {
            double res = 0;
            const double root = bisect(g, prev_m, m, 1e-12, res);
            return {"m", {prev_m, m}, root, res};
        }
        prev_m = m;
        prev = cur;
    }
    std::ostringstream msg;
    msg << "O4 of +d^m/m at d = R pi (1 - 1e-6), R = " << R_large << " keeps one sign for m in (0, 1)";
    throw NoSignChange(msg.str());
}

BifurcationResult published_o4_large_radius_root() {
    const double pi2 = std::numbers::pi * std::numbers::pi;
    auto g = [pi2](double m) { return -(6 * m - 5) * pi2 + 8 * (m - 1) * (m * m - 2 * m + 2); };
    double res = 0;
    const double root = bisect(g, 0.0, 1.0, 1e-15, res);
    return {"m", {0.0, 1.0}, root, res};
}

std::vector<Scenario> suite_scenarios() {
    const double pi = std::numbers::pi;
    std::vector<Scenario> s;
    auto add = [&](std::string name, CostModel model, double R, int n, ScanOptions opt,
                   std::vector<Verdict> expected, bool gating, std::string note = {},
                   double strictness = 1e-9) {
        Scenario sc{std::move(name), std::move(model), R, n, opt, std::move(expected), strictness,
                    gating, std::move(note)};
        s.push_back(std::move(sc));
    };
    const ScanOptions full{};
    auto capped = [](double hi) {
        ScanOptions o;
        o.upper = hi;
        return o;
    };

    add("half-square", CostModel::half_square(), 1, 3, full, {Verdict::StrongA3}, true);
    add("chordal, d < R pi/2", CostModel::chordal(1), 1, 3, capped(pi / 2 * (1 - 1e-6)),
        {Verdict::StrongA3}, true, "half-sphere");
    add("chordal, full sphere", CostModel::chordal(1), 1, 3, full, {Verdict::StrongA3}, false,
        "f'' = cos(d/R) vanishes at d = R pi/2");
    add("sqrt-plus(+)", CostModel::sqrt_one_plus_dsq(Sign::Plus), 1, 3, full, {Verdict::StrongA3}, true);
    add("sqrt-plus(-)", CostModel::sqrt_one_plus_dsq(Sign::Minus), 1, 3, full, {Verdict::Violated}, true);
    add("sqrt-minus(+), d <= 0.99", CostModel::sqrt_one_minus_dsq(Sign::Plus), 1, 3, capped(0.99),
        {Verdict::StrongA3}, true, "R > sqrt(2/3), Diam < 1");
    add("sqrt-minus(-)", CostModel::sqrt_one_minus_dsq(Sign::Minus), 1, 3, full, {Verdict::Violated},
        false, "R >= sqrt(2/3)");
    add("log(+)", CostModel::log_profile(Sign::Plus), 1, 3, full, {Verdict::Violated}, true,
        "lim P1 = 2 for every R");
    add("log(-)", CostModel::log_profile(Sign::Minus), 1, 3, full, {Verdict::A3w}, true);
    add("log(-), d <= 0.9 R pi", CostModel::log_profile(Sign::Minus), 1, 3, capped(0.9 * pi),
        {Verdict::StrongA3}, true);
    for (double m : {2.0, 3.0, 4.0})
        add("power(-,m=" + std::to_string(static_cast<int>(m)) + ")",
            CostModel::power_law(Sign::Minus, m), 1, 3, full, {Verdict::Violated}, true);
    for (double m : {-0.5, -1.0, -3.0}) {
        std::ostringstream name;
        name << "power(+,m=" << m << ")";
        add(name.str(), CostModel::power_law(Sign::Plus, m), 1, 3, full, {Verdict::Violated}, true);
    }
    add("power(-,m=1.5), n=3", CostModel::power_law(Sign::Minus, 1.5), 1, 3, full,
        {Verdict::Violated}, false);
    {
        // Diameter below the first root of O4 on S^2.
        const CostModel model = CostModel::power_law(Sign::Minus, 1.5);
        const SphereConfig cfg{1, 2};
        const ScanReport r = scan_serial(model, cfg, full);
        const auto roots = roots_on_scan(model, cfg, OrientationCase::Diagonal, r);
        ScanOptions o = full;
        std::string note;
        if (roots.empty()) {
            o.upper = 0.5 * pi;
            note = "O4 has no root; capped at R pi/2";
        } else {
            o.upper = roots.front().root * (1 - 1e-9);
            note = "capped below the first root of O4";
        }
        add("power(-,m=1.5), n=2, d < h*", model, 1, 2, o, {Verdict::StrongA3}, false, note);
    }
    for (double R : {10.0, 100.0}) {
        std::ostringstream name;
        name << "power(-,m=-0.5), R=" << R;
        add(name.str(), CostModel::power_law(Sign::Minus, -0.5), R, 3, full,
            {Verdict::A3w, Verdict::StrongA3}, false, "m* < m < 0", 1e-6);
    }
    return s;
}

std::vector<ScenarioOutcome> example_suite() {
    std::vector<ScenarioOutcome> out;
    for (Scenario& sc : suite_scenarios()) {
        const SphereConfig cfg{sc.R, sc.n};
        ScenarioOutcome o{sc, classify(scan(sc.model, cfg, sc.options), sc.n, sc.strictness), false, {}};
        o.match = std::find(sc.expected.begin(), sc.expected.end(), o.computed.verdict) != sc.expected.end();
        std::ostringstream detail;
        try {
            const LimitEstimate lim = small_d_limit(sc.model, sc.R, OrientationCase::PerpToBoth);
            detail << "lim P1 = " << lim.value;
        } catch (const Error&) {
            detail << "lim P1 diverges";
        }
        o.detail = detail.str();
        out.push_back(std::move(o));
    }
    return out;
}

}  // namespace mtwsphere
