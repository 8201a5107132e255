// SPDX-License-Identifier: MIT
#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mtwsphere {

/// Canonical alignments of the transport vector p against an orthonormal pair xi, eta.
enum class OrientationCase {
    PerpToBoth,   // p orthogonal to span(xi, eta): O1
    ParallelXi,   // p || xi: O2
    ParallelEta,  // p || eta: O3
    Diagonal,     // p in span(xi, eta), p.xi == p.eta: O4
};

inline constexpr std::array<OrientationCase, 4> kAllCases = {
    OrientationCase::PerpToBoth, OrientationCase::ParallelXi, OrientationCase::ParallelEta,
    OrientationCase::Diagonal};

[[nodiscard]] constexpr int case_index(OrientationCase c) { return static_cast<int>(c); }

[[nodiscard]] constexpr std::string_view case_name(OrientationCase c) {
    switch (c) {
    case OrientationCase::PerpToBoth:
        return "perp";
    case OrientationCase::ParallelXi:
        return "xi";
    case OrientationCase::ParallelEta:
        return "eta";
    case OrientationCase::Diagonal:
        return "diag";
    }
    return "?";
}

[[nodiscard]] constexpr std::optional<OrientationCase> parse_case(std::string_view s) {
    for (auto c : kAllCases)
        if (case_name(c) == s)
            return c;
    return std::nullopt;
}

}  // namespace mtwsphere
