// SPDX-License-Identifier: MIT
//
// Radial cost profiles c(x,y) = f(d(x,y)) and their exact derivative jets.
#pragma once

#include <functional>
#include <string>

namespace mtwsphere {

/// Working precision of the analytic kernels. The MTW coefficients cancel
/// terms of size 1/d^2, so small-distance limits need the extra mantissa.
using real = long double;

/// f and its first four derivatives at a distance d.
struct Jet4 {
    real d = 0;
    real f0 = 0, f1 = 0, f2 = 0, f3 = 0, f4 = 0;
};

enum class CostFamily {
    HalfSquare,
    Chordal,
    PowerLaw,
    LogProfile,
    SqrtOneMinusDsq,
    SqrtOnePlusDsq,
    Custom,
};

enum class Sign { Plus, Minus };

/// Open interval (lo, hi) of distances.
struct Interval {
    double lo = 0;
    double hi = 0;

    [[nodiscard]] bool empty() const { return !(lo < hi); }
    [[nodiscard]] bool contains(double d) const { return d > lo && d < hi; }
};

using ProfileFn = std::function<Jet4(real)>;

class CostModel {
public:
    static CostModel half_square();
    /// f(d) = 2 R^2 sin^2(d / 2R); R is a parameter of the profile.
    static CostModel chordal(double radius);
    /// f(d) = +-d^m / m. Rejects m == 0 (use log_profile) and m == 1.
    static CostModel power_law(Sign sign, double m);
    static CostModel log_profile(Sign sign);
    static CostModel sqrt_one_minus_dsq(Sign sign);
    static CostModel sqrt_one_plus_dsq(Sign sign);
    /// User profile supplying its own four derivatives on `domain`.
    static CostModel custom(std::string name, ProfileFn profile, Interval domain);

    [[nodiscard]] CostFamily family() const { return family_; }
    [[nodiscard]] Sign sign() const { return sign_; }
    [[nodiscard]] double exponent() const { return m_; }
    [[nodiscard]] double profile_radius() const { return radius_; }

    /// Distances in (0, R pi) where f' and f'' are finite, for a sphere of radius R.
    [[nodiscard]] Interval valid_domain(double sphere_radius) const;

    /// Interval on which the profile itself is finite, independent of any sphere.
    [[nodiscard]] Interval profile_domain() const;

    /// Short human-readable label, e.g. "power(-,m=1.5)".
    [[nodiscard]] std::string label() const;

    [[nodiscard]] const ProfileFn& custom_profile() const { return custom_; }

private:
    CostModel(CostFamily family, Sign sign, double m, double radius)
        : family_(family), sign_(sign), m_(m), radius_(radius) {}

    CostFamily family_;
    Sign sign_;
    double m_;
    double radius_;
    std::string custom_name_;
    ProfileFn custom_;
    Interval custom_domain_{};
};

/// Closed-form jet without the f'' degeneracy check; throws DomainError only.
Jet4 profile_jet(const CostModel& model, real d);

/// Closed-form jet of the profile at d.
/// Throws DomainError outside profile_domain(), DegenerateCost when f''(d) vanishes.
Jet4 jet_eval(const CostModel& model, real d);

/// Degeneracy threshold applied to f' and f'': 1e-12 (1 + |f| / max(d, 1e-12)).
[[nodiscard]] bool is_negligible(real value, const Jet4& jet);

[[nodiscard]] inline real sign_factor(Sign s) { return s == Sign::Plus ? 1.0L : -1.0L; }

}  // namespace mtwsphere
