// SPDX-License-Identifier: MIT
#include "mtwsphere/costjet.hpp"

#include "mtwsphere/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace mtwsphere {

namespace {

// d^e with exact repeated multiplication for small integer exponents, so that
// power(+, m=2) reproduces the half-square jet bit for bit.
real power(real d, real e) {
    if (e == std::nearbyint(e) && std::fabs(e) <= 16) {
        const int k = static_cast<int>(std::fabs(e));
        real acc = 1;
        for (int i = 0; i < k; ++i)
            acc *= d;
        return e < 0 ? 1 / acc : acc;
    }
    return std::pow(d, e);
}

}  // namespace

CostModel CostModel::half_square() { return {CostFamily::HalfSquare, Sign::Plus, 2.0, 0.0}; }

CostModel CostModel::chordal(double radius) {
    if (!(radius > 0) || !std::isfinite(radius))
        throw DomainError("chordal cost needs a positive finite radius");
    return {CostFamily::Chordal, Sign::Plus, 2.0, radius};
}

CostModel CostModel::power_law(Sign sign, double m) {
    if (!std::isfinite(m))
        throw DomainError("power-law exponent must be finite");
    if (m == 0.0)
        throw DomainError("power-law exponent m = 0 is the log profile; use log_profile");
    if (m == 1.0)
        throw DomainError("power-law exponent m = 1 is excluded: f'' vanishes identically");
    return {CostFamily::PowerLaw, sign, m, 0.0};
}

CostModel CostModel::log_profile(Sign sign) { return {CostFamily::LogProfile, sign, 0.0, 0.0}; }

CostModel CostModel::sqrt_one_minus_dsq(Sign sign) {
    return {CostFamily::SqrtOneMinusDsq, sign, 0.0, 0.0};
}

CostModel CostModel::sqrt_one_plus_dsq(Sign sign) {
    return {CostFamily::SqrtOnePlusDsq, sign, 0.0, 0.0};
}

CostModel CostModel::custom(std::string name, ProfileFn profile, Interval domain) {
    if (!profile)
        throw DomainError("custom cost needs a profile function");
    if (domain.empty())
        throw DomainError("custom cost needs a non-empty domain");
    CostModel model{CostFamily::Custom, Sign::Plus, 0.0, 0.0};
    model.custom_name_ = std::move(name);
    model.custom_ = std::move(profile);
    model.custom_domain_ = domain;
    return model;
}

Interval CostModel::profile_domain() const {
    constexpr double inf = std::numeric_limits<double>::infinity();
    switch (family_) {
    case CostFamily::SqrtOneMinusDsq:
        return {0.0, 1.0};
    case CostFamily::Custom:
        return custom_domain_;
    default:
        return {0.0, inf};
    }
}

Interval CostModel::valid_domain(double sphere_radius) const {
    if (!(sphere_radius > 0))
        throw DomainError("sphere radius must be positive");
    const Interval p = profile_domain();
    const double top = sphere_radius * std::numbers::pi;
    return {std::max(p.lo, 0.0), std::min(p.hi, top)};
}

std::string CostModel::label() const {
    const char* s = sign_ == Sign::Plus ? "+" : "-";
    std::ostringstream out;
    switch (family_) {
    case CostFamily::HalfSquare:
        out << "half-square";
        break;
    case CostFamily::Chordal:
        out << "chordal(R=" << radius_ << ")";
        break;
    case CostFamily::PowerLaw:
        out << "power(" << s << ",m=" << m_ << ")";
        break;
    case CostFamily::LogProfile:
        out << "log(" << s << ")";
        break;
    case CostFamily::SqrtOneMinusDsq:
        out << "sqrt-minus(" << s << ")";
        break;
    case CostFamily::SqrtOnePlusDsq:
        out << "sqrt-plus(" << s << ")";
        break;
    case CostFamily::Custom:
        out << "custom(" << custom_name_ << ")";
        break;
    }
    return out.str();
}

bool is_negligible(real value, const Jet4& jet) {
    const real scale = 1 + std::fabs(jet.f0) / std::max(jet.d, 1e-12L);
    return std::fabs(value) < 1e-12L * scale;
}

Jet4 profile_jet(const CostModel& model, real d) {
    const Interval dom = model.profile_domain();
    if (!std::isfinite(d) || !(d > dom.lo) || !(d < dom.hi)) {
        // The chordal profile is entire; allow its closed endpoint d = R pi.
        if (!(model.family() == CostFamily::Chordal && d > 0 && std::isfinite(d))) {
            std::ostringstream msg;
            msg << "distance " << static_cast<double>(d) << " outside the domain of " << model.label();
            throw DomainError(msg.str());
        }
    }

    const real s = sign_factor(model.sign());
    Jet4 j;
    j.d = d;
    switch (model.family()) {
    case CostFamily::HalfSquare:
        j.f0 = d * d / 2;
        j.f1 = d;
        j.f2 = 1;
        j.f3 = 0;
        j.f4 = 0;
        break;
    case CostFamily::Chordal: {
        const real R = model.profile_radius();
        const real half = std::sin(d / (2 * R));
        const real sn = std::sin(d / R);
        const real cs = std::cos(d / R);
        j.f0 = 2 * R * R * half * half;
        j.f1 = R * sn;
        j.f2 = cs;
        j.f3 = -sn / R;
        j.f4 = -cs / (R * R);
        break;
    }
    case CostFamily::PowerLaw: {
        const real m = model.exponent();
        j.f0 = s * power(d, m) / m;
        j.f1 = s * power(d, m - 1);
        j.f2 = s * (m - 1) * power(d, m - 2);
        j.f3 = s * (m - 1) * (m - 2) * power(d, m - 3);
        j.f4 = s * (m - 1) * (m - 2) * (m - 3) * power(d, m - 4);
        break;
    }
    case CostFamily::LogProfile:
        j.f0 = s * std::log(d);
        j.f1 = s / d;
        j.f2 = -s / (d * d);
        j.f3 = 2 * s / (d * d * d);
        j.f4 = -6 * s / (d * d * d * d);
        break;
    case CostFamily::SqrtOneMinusDsq: {
        const real g = 1 - d * d;
        const real r = std::sqrt(g);
        j.f0 = s * r;
        j.f1 = -s * d / r;
        j.f2 = -s / (g * r);
        j.f3 = -3 * s * d / (g * g * r);
        j.f4 = -3 * s / (g * g * r) - 15 * s * d * d / (g * g * g * r);
        break;
    }
    case CostFamily::SqrtOnePlusDsq: {
        const real g = 1 + d * d;
        const real r = std::sqrt(g);
        j.f0 = s * r;
        j.f1 = s * d / r;
        j.f2 = s / (g * r);
        j.f3 = -3 * s * d / (g * g * r);
        j.f4 = -3 * s / (g * g * r) + 15 * s * d * d / (g * g * g * r);
        break;
    }
    case CostFamily::Custom:
        j = model.custom_profile()(d);
        j.d = d;
        break;
    }

    if (!std::isfinite(j.f0) || !std::isfinite(j.f1) || !std::isfinite(j.f2) ||
        !std::isfinite(j.f3) || !std::isfinite(j.f4)) {
        std::ostringstream msg;
        msg << model.label() << " jet is not finite at d = " << static_cast<double>(d);
        throw DomainError(msg.str());
    }
    return j;
}

Jet4 jet_eval(const CostModel& model, real d) {
    Jet4 j = profile_jet(model, d);
    if (is_negligible(j.f2, j)) {
        std::ostringstream msg;
        msg << model.label() << ": f''(" << static_cast<double>(d) << ") vanishes";
        throw DegenerateCost(msg.str());
    }
    return j;
}

}  // namespace mtwsphere
