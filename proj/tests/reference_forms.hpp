// SPDX-License-Identifier: MIT
//
// Closed forms in half-angle variables a = d / 2R, kept independent of the
// library so they can be compared against the generic coefficient path.
#pragma once

#include <array>
#include <cmath>

namespace ref {

// Half-square cost, P1..P4.
template <class T = double>
std::array<T, 4> half_square_p(T d, T R) {
    using std::sin, std::cos;
    const T a = d / (2 * R), s = sin(a), c = cos(a);
    const T A = c / (2 * R * d * s);
    const T B = 1 / (4 * R * R * s * s);
    const T C = d * c / (8 * R * R * R * s * s * s);
    return {A - B, -2 / (d * d) + A + B, -A - B + 2 * C, 8 / (d * d) - 2 * C - 3 * A - 3 * B};
}

// Chordal cost, P1..P4.
inline std::array<double, 4> chordal_p(double d, double R) {
    const double a = d / (2 * R), s = std::sin(a), c = std::cos(a);
    const double c2 = c * c, c4 = c2 * c2, c6 = c4 * c2;
    return {1 / (4 * R * R * (1 - 2 * c2)),
            4 * s * s * c2 / (4 * R * R * (1 - 8 * c6 + 12 * c4 - 6 * c2)), 0.0,
            2 * s * s * s * s * c2 / (4 * R * R * (8 * c6 - 12 * c4 + 6 * c2 - 1))};
}

// Power-law cost sign * d^m / m, O1..O4.
inline std::array<double, 4> power_o(double d, double R, double m, double sign) {
    const double a = d / (2 * R), s = std::sin(a), c = std::cos(a);
    const double m1 = m - 1;
    const double o1 = sign * (m1 * 2 * R * s * c - d) / (m1 * 4 * R * R * std::pow(d, m - 1) * s * s);
    const double num = m * 2 * R * s - 2 * d * c;
    const double o2 = -sign * num / (2 * R * std::pow(d, m) * s);
    const double o3 = -sign * num / (m1 * m1 * 8 * R * R * R * std::pow(d, m - 2) * s * s * s);
    const double o4 = sign * c / (2 * m1 * m1 * 8 * R * R * R * std::pow(d, m - 3) * s * s * s) +
                      sign * c / (8 * R * std::pow(d, m - 1) * s) -
                      sign * (6 * m - 5) / (4 * m1 * m1 * 4 * R * R * std::pow(d, m - 2) * s * s) +
                      sign * (m * m - 2 * m + 2) / (2 * m1 * std::pow(d, m)) -
                      (m - 2) * (m - 2) / (4 * d * d);
    return {o1, o2, o3, o4};
}

// |got - want| / (1 + |want|), for quantities that pass through zero.
inline double scaled_err(double got, double want) { return std::abs(got - want) / (1 + std::abs(want)); }

inline double rel_err(double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

}  // namespace ref
