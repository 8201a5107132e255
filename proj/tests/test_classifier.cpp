// SPDX-License-Identifier: MIT
#include "mtwsphere/classifier.hpp"
#include "mtwsphere/errors.hpp"
#include "mtwsphere/mtw_oracle.hpp"

#include "reference_forms.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace mtwsphere;

namespace {

constexpr double pi = std::numbers::pi;

bool all_below(const std::vector<double>& v, double t) {
    for (double x : v)
        if (!(x < t))
            return false;
    return true;
}

bool any_above(const std::vector<double>& v, double t) {
    for (double x : v)
        if (x > t)
            return true;
    return false;
}

int severity(Verdict v) {
    switch (v) {
    case Verdict::StrongA3:
        return 0;
    case Verdict::A3w:
        return 1;
    case Verdict::Indeterminate:
        return 2;
    case Verdict::Violated:
        return 3;
    }
    return 4;
}

ScanOptions band(double lo, double hi, int grid = 512) {
    ScanOptions o;
    o.grid_size = grid;
    o.lower = lo;
    o.upper = hi;
    return o;
}

}  // namespace

TEST(Scan, HalfSquareNegative) {
    ScanOptions o;
    o.grid_size = 512;
    const ScanReport r = scan(CostModel::half_square(), {1, 3}, o);
    EXPECT_EQ(r.grid.size(), 512u + 32u);
    for (const auto& col : r.o_values)
        EXPECT_TRUE(all_below(col, 0));
}

TEST(Scan, SqrtPlusMinusPositive) {
    const ScanReport r = scan(CostModel::sqrt_one_plus_dsq(Sign::Minus), {1, 3});
    for (const auto& col : r.o_values)
        for (double x : col)
            EXPECT_GT(x, 0);
}

TEST(Scan, PowerMinusThree) {
    const ScanReport r = scan(CostModel::power_law(Sign::Minus, 3), {1, 3});
    EXPECT_TRUE(any_above(r.o_values[1], 0));
    EXPECT_TRUE(any_above(r.o_values[2], 0));
}

TEST(Scan, GridShape) {
    for (const CostModel& m : {CostModel::half_square(), CostModel::sqrt_one_minus_dsq(Sign::Plus)}) {
        const ScanReport r = scan(m, {2, 3});
        ASSERT_FALSE(r.grid.empty());
        EXPECT_GT(r.grid.front(), 0);
        EXPECT_NEAR(r.grid.front(), 1e-6 * 2 * pi, 1e-18);
        EXPECT_LT(r.grid.back(), m.valid_domain(2).hi);
        for (std::size_t i = 1; i < r.grid.size(); ++i)
            EXPECT_LT(r.grid[i - 1], r.grid[i]);
    }
    const ScanReport t = scan(CostModel::half_square(), {1, 2}, band(0.5, 1.5, 64));
    EXPECT_EQ(t.grid.size(), 64u);
    EXPECT_EQ(t.grid.front(), 0.5);
    EXPECT_EQ(t.grid.back(), 1.5);
}

TEST(Scan, Errors) {
    EXPECT_THROW(scan(CostModel::sqrt_one_minus_dsq(Sign::Plus), {1, 3}, band(1.5, 2.0)), EmptyDomain);
    ScanOptions small;
    small.grid_size = 10;
    EXPECT_THROW(scan(CostModel::half_square(), {1, 3}, small), DomainError);
    ScanOptions wide;
    wide.margin = 0.6;
    EXPECT_THROW(scan(CostModel::half_square(), {1, 3}, wide), DomainError);
}

TEST(Scan, DegenerateEntriesMarked) {
    // The linear grid from 0.25 pi to 0.75 pi with 65 points hits pi/2 exactly.
    const ScanReport r = scan(CostModel::chordal(1), {1, 3}, band(0.25 * pi, 0.75 * pi, 65));
    int marked = 0;
    for (std::size_t i = 0; i < r.grid.size(); ++i)
        if (r.degenerate[i]) {
            ++marked;
            EXPECT_NEAR(r.grid[i], pi / 2, 1e-15);
            EXPECT_TRUE(std::isnan(r.o_values[0][i]));
        }
    EXPECT_EQ(marked, 1);
    EXPECT_TRUE(r.sign_changes[0].empty());
}

TEST(Scan, ParallelMatchesSerial) {
    for (const CostModel& m : {CostModel::half_square(), CostModel::chordal(1), CostModel::power_law(Sign::Minus, 1.5),
                               CostModel::log_profile(Sign::Plus)}) {
        const ScanReport a = scan(m, {1, 3});
        const ScanReport b = scan_serial(m, {1, 3});
        ASSERT_EQ(a.grid, b.grid);
        for (int k = 0; k < 4; ++k) {
            ASSERT_EQ(a.o_values[k].size(), b.o_values[k].size());
            for (std::size_t i = 0; i < a.grid.size(); ++i) {
                const double x = a.o_values[k][i], y = b.o_values[k][i];
                EXPECT_TRUE(x == y || (std::isnan(x) && std::isnan(y)));
            }
            EXPECT_EQ(a.sign_changes[k].size(), b.sign_changes[k].size());
        }
    }
}

TEST(Classify, ConsideredCases) {
    EXPECT_EQ(considered_cases(2).size(), 3u);
    EXPECT_EQ(considered_cases(2).front(), OrientationCase::ParallelXi);
    EXPECT_EQ(considered_cases(3).size(), 4u);
    EXPECT_THROW(considered_cases(1), DimensionError);
}

TEST(Classify, HalfSquareStrong) {
    const ScanReport r = scan(CostModel::half_square(), {1, 3});
    const ClassificationReport c = classify(r, 3);
    ASSERT_EQ(c.verdict, Verdict::StrongA3);
    double sup = -INFINITY;
    for (int k = 0; k < 4; ++k)
        for (double x : r.o_values[k])
            sup = std::max(sup, x);
    EXPECT_NEAR(c.constant, -sup, 1e-12);
    EXPECT_NEAR(c.constant, 2.0 / 3, 1e-6);
}

TEST(Classify, ChordalHalfSphere) {
    const ClassificationReport c =
        classify(scan(CostModel::chordal(1), {1, 3}, band(1e-6, pi / 2 * (1 - 1e-6), 2048)), 3);
    ASSERT_EQ(c.verdict, Verdict::StrongA3);
    EXPECT_NEAR(c.constant, 1.0, 1e-6);
    const ClassificationReport full = classify(scan(CostModel::chordal(1), {1, 3}), 3);
    EXPECT_EQ(full.verdict, Verdict::Violated);
}

TEST(Classify, LogMinusBands) {
    const CostModel m = CostModel::log_profile(Sign::Minus);
    EXPECT_EQ(classify(scan(m, {1, 3}), 3, 0).verdict, Verdict::Violated);
    EXPECT_EQ(classify(scan(m, {1, 3}, band(1e-6, 0.9 * pi, 2048)), 3, 0).verdict, Verdict::Violated);
    ScanOptions half;
    half.upper = pi / 2;
    EXPECT_EQ(classify(scan(m, {1, 3}, half), 3, 1e-9).verdict, Verdict::A3w);
    ScanOptions inner;
    inner.upper = 0.45 * pi;
    EXPECT_EQ(classify(scan(m, {1, 3}, inner), 3).verdict, Verdict::StrongA3);
}

TEST(Classify, PowerMinusOneAndAHalf) {
    const CostModel m = CostModel::power_law(Sign::Minus, 1.5);
    EXPECT_EQ(classify(scan(m, {1, 3}), 3).verdict, Verdict::Violated);
    // O4 stays positive near d = 0, so no diameter cap helps on S^2 either.
    const ScanReport r = scan(m, {1, 2});
    EXPECT_TRUE(r.sign_changes[3].empty());
    EXPECT_GT(r.o_values[3].front(), 0);
    EXPECT_EQ(classify(r, 2).verdict, Verdict::Violated);
}

TEST(Classify, NegativePowerBetweenCriticalExponentAndZero) {
    const double mstar = mstar_cubic().root;
    for (double R : {10.0, 100.0})
        for (double m : {mstar / 2, -0.5, -0.1}) {
            const ClassificationReport c =
                classify(scan(CostModel::power_law(Sign::Minus, m), {R, 3}), 3, 1e-6);
            EXPECT_EQ(c.verdict, Verdict::Violated) << "R=" << R << " m=" << m;
        }
}

TEST(Classify, VerdictBands) {
    ScanReport r;
    r.grid = {1.0};
    r.degenerate = {false};
    auto with_sup = [&](double s) {
        for (int k = 0; k < 4; ++k) {
            r.o_values[k] = {s};
            r.sup_values[k] = s;
            r.sup_at[k] = 1.0;
        }
        return classify(r, 3, 1e-9).verdict;
    };
    EXPECT_EQ(with_sup(-1), Verdict::StrongA3);
    EXPECT_EQ(with_sup(-1e-12), Verdict::A3w);
    EXPECT_EQ(with_sup(0), Verdict::A3w);
    EXPECT_EQ(with_sup(1e-12), Verdict::Indeterminate);
    EXPECT_EQ(with_sup(1e-3), Verdict::Violated);
    r.sup_values.fill(std::nan(""));
    EXPECT_EQ(classify(r, 3).verdict, Verdict::Indeterminate);
}

TEST(Classify, ShrinkingNeverWorsens) {
    const std::vector<CostModel> models{CostModel::half_square(), CostModel::chordal(1),
                                        CostModel::log_profile(Sign::Minus), CostModel::power_law(Sign::Plus, 1.5),
                                        CostModel::power_law(Sign::Minus, -0.5), CostModel::sqrt_one_minus_dsq(Sign::Plus)};
    for (const CostModel& m : models) {
        const Interval v = m.valid_domain(1);
        int prev = -1;
        for (double frac : {1.0, 0.8, 0.6, 0.4, 0.2}) {
            ScanOptions o;
            o.grid_size = 512;
            if (frac < 1)
                o.upper = v.lo + frac * (std::min(v.hi, pi) - v.lo);
            const int s = severity(classify(scan(m, {1, 3}, o), 3).verdict);
            if (prev >= 0) {
                EXPECT_LE(s, prev) << m.label() << " frac " << frac;
            }
            prev = s;
        }
    }
}

TEST(Classify, ViolatedWitnessConfirmedByOracle) {
    for (const Scenario& sc : suite_scenarios()) {
        const Interval v = sc.model.valid_domain(sc.R);
        const double lo = std::max(v.lo, 0.1 * sc.R * pi);
        double hi = std::min(v.hi - 0.05 * sc.R * pi, 0.9 * sc.R * pi);
        if (sc.options.upper)
            hi = std::min(hi, *sc.options.upper);
        if (!(lo < hi))
            continue;
        const ClassificationReport c = classify(scan(sc.model, {sc.R, sc.n}, band(lo, hi)), sc.n);
        if (c.verdict != Verdict::Violated)
            continue;
        ASSERT_TRUE(c.witness);
        const OracleComparison o = compare_one({sc.model, sc.R, c.witness->d, c.witness->oc});
        ASSERT_TRUE(o.error.empty()) << sc.name << ": " << o.error;
        EXPECT_GT(o.oracle.value + 5 * o.oracle.est_error, 0) << sc.name;
    }
}

TEST(RefineRoot, PowerPlusOneAndAHalf) {
    const CostModel m = CostModel::power_law(Sign::Plus, 1.5);
    const BifurcationResult b = refine_root(m, {1, 2}, OrientationCase::ParallelXi, {0.1, 3.0});
    EXPECT_GT(b.root, 0.1);
    EXPECT_LT(b.root, 3.0);
    EXPECT_LT(std::abs(b.residual), 1e-9);
    const BifurcationResult c = refine_root(m, {1, 2}, OrientationCase::ParallelEta, {0.1, 3.0});
    EXPECT_NEAR(b.root, c.root, 1e-11);
    // Sign structure depends only on d / R.
    const BifurcationResult big = refine_root(m, {3, 2}, OrientationCase::ParallelXi, {0.3, 9.0});
    EXPECT_NEAR(big.root / 3, b.root, 1e-10);
}

TEST(RefineRoot, HalfSquareHasNone) {
    for (auto oc : kAllCases)
        EXPECT_THROW(refine_root(CostModel::half_square(), {1, 3}, oc, {0.1, 3.0}), NoSignChange);
}

TEST(RefineRoot, NegativePowerDiagonal) {
    const CostModel m = CostModel::power_law(Sign::Minus, -1);
    const SphereConfig cfg{1, 2};
    const ScanReport r = scan(m, cfg);
    const auto roots = roots_on_scan(m, cfg, OrientationCase::Diagonal, r);
    ASSERT_FALSE(roots.empty());
    EXPECT_GT(roots.front().root, 1.0);
    for (const auto& b : roots) {
        const double lo = static_cast<double>(o_value(p_coefficients(m, b.root * (1 - 1e-6), 1), OrientationCase::Diagonal));
        const double hi = static_cast<double>(o_value(p_coefficients(m, b.root * (1 + 1e-6), 1), OrientationCase::Diagonal));
        EXPECT_LT(lo * hi, 0);
    }
}

TEST(Homogeneity, PowerLawScalesWithRadius) {
    for (double m : {-3.0, -0.5, 0.5, 1.5, 3.0})
        for (double lambda : {0.5, 3.0}) {
            const CostModel model = CostModel::power_law(Sign::Plus, m);
            for (double t : {0.2, 1.0, 2.5}) {
                const PCoefficients a = p_coefficients(model, t, 1);
                const PCoefficients b = p_coefficients(model, lambda * t, lambda);
                for (auto oc : kAllCases) {
                    const long double want = o_value(a, oc) * std::pow(static_cast<long double>(lambda), -m);
                    EXPECT_LE(std::fabs(o_value(b, oc) - want), 1e-12L * std::fabs(want));
                }
            }
        }
}

TEST(Eq4Numerator, Values) {
    EXPECT_NEAR(eq4_numerator(0.5, -1, 1), -8.636147, 1e-6);
    for (double d : {0.3, 1.2})
        for (double R : {0.5, 2.0}) {
            const double s = std::sin(d / (2 * R)), c = std::cos(d / (2 * R));
            const double first_four = -2 * std::pow(d, 5) * c + 7 * 2 * R * std::pow(d, 4) * s -
                                      4 * R * R * std::pow(d, 3) * s * s * c - 2 * 2 * 8 * R * R * R * d * d * s * s * s;
            EXPECT_NEAR(eq4_numerator(d, 2, R), first_four, 1e-12 * std::abs(first_four));
        }
    EXPECT_THROW(eq4_numerator(0, -1, 1), DomainError);
    EXPECT_THROW(eq4_numerator(1, 1, 1), DomainError);
}

TEST(Eq4Numerator, SignFollowsHalfAngleO4) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> um(-4, -0.05), ut(0.02, 0.98), ur(0.3, 5);
    for (int i = 0; i < 300; ++i) {
        const double m = um(rng), R = ur(rng), d = ut(rng) * R * pi;
        const double o4 = ref::power_o(d, R, m, -1)[3];
        EXPECT_EQ(std::signbit(eq4_numerator(d, m, R)), std::signbit(o4)) << "m=" << m << " R=" << R << " d=" << d;
    }
}

TEST(Bifurcation, CriticalExponentCubic) {
    const BifurcationResult b = mstar_cubic();
    EXPECT_NEAR(b.root, -0.7807764064, 1e-8);
    EXPECT_LE(std::abs(b.residual), 1e-9);
    EXPECT_GE(b.root, b.bracket.lo);
    EXPECT_LE(b.root, b.bracket.hi);
    auto poly = [](double m) { return -2 * m * m * m + 5 * m * m - 4; };
    EXPECT_EQ(poly(0), -4);
}

TEST(Bifurcation, LargeRadiusPositiveExponent) {
    EXPECT_THROW(mstar_positive(10), DomainError);
    // O4 near the antipode is dominated by E' and stays negative for every m in (0, 1).
    EXPECT_THROW(mstar_positive(1e4), NoSignChange);
    EXPECT_THROW(mstar_positive(1e3), NoSignChange);
    const BifurcationResult p = published_o4_large_radius_root();
    EXPECT_NEAR(p.root, 0.806, 5e-3);
    EXPECT_LE(std::abs(p.residual), 1e-9);
}

TEST(Suite, OracleVerifiedVerdicts) {
    for (const ScenarioOutcome& o : example_suite()) {
        const bool log_minus = o.scenario.model.family() == CostFamily::LogProfile &&
                               o.scenario.model.sign() == Sign::Minus;
        if (o.scenario.gating && !log_minus) {
            EXPECT_TRUE(o.match) << o.scenario.name << " computed " << verdict_name(o.computed.verdict);
        }
        if (log_minus) {
            EXPECT_EQ(o.computed.verdict, Verdict::Violated);
        }
        if (o.scenario.name == "log(+)") {
            EXPECT_EQ(o.detail.rfind("lim P1 = 2", 0), 0u) << o.detail;
        }
    }
}
