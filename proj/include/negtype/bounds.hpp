#pragma once

#include "negtype/rational.hpp"
#include "negtype/space.hpp"

#include <string>
#include <utility>
#include <vector>

namespace negtype {

/// c(n) = 1 - (1/2)(1/floor(n/2) + 1/ceil(n/2)), exact. Requires n >= 2.
Rational c_of_n(int n);

/// Diameter divided by the minimum nonzero distance. Requires >= 2 points.
Rational scaled_diameter(const SemiMetricSpace& s);

/// One evaluated lower bound on the supremal p-negative type, with every
/// intermediate quantity echoed for auditing.
struct BoundReport {
    enum class Which { direct, combined };
    Which which = Which::direct;
    double p = 0;
    /// Gap after the internal rescaling for the direct bound; the composed
    /// gap for the combined bound.
    double gap_used = 0;
    Rational scaled_diam;    // direct only
    Rational rescale_factor; // direct only: distances were divided by this
    int n = 0;               // point count the bound was evaluated at
    Rational c_n;
    double lower_bound = 0;

    struct ComponentInput {
        std::string name;
        int points = 0;
        double diam = 0;
        double gap = 0;
    };
    std::vector<ComponentInput> components; // combined only
    double diam_power_sum = 0;              // combined only: sum of diam^p
};

/// Lower bound on the supremal p-negative type from a positive gap at p.
/// The space is first rescaled so its minimum nonzero distance is 1 (the
/// gap rescales by homogeneity). Requires n >= 3, gap > 0, and a scaled
/// diameter above 1 (equilateral spaces make the bound inapplicable).
BoundReport lower_bound_direct(const SemiMetricSpace& s, double p, double gap_value);

/// Lower bound for any combination of the given components, built only from
/// per-component diameters, point counts and gaps. Every component must
/// have minimum nonzero distance exactly 1 and a strictly positive gap.
BoundReport lower_bound_combined(
    const std::vector<std::pair<SemiMetricSpace, double>>& components, double p);

} // namespace negtype
