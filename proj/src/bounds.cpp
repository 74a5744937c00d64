#include "negtype/bounds.hpp"

#include "negtype/errors.hpp"

#include <cmath>
#include <sstream>

namespace negtype {

Rational c_of_n(int n) {
    if (n < 2) throw DomainError("c(n) requires n >= 2");
    int lo = n / 2;
    int hi = n - lo;
    return Rational(1) - (Rational(1, lo) + Rational(1, hi)) / 2;
}

Rational scaled_diameter(const SemiMetricSpace& s) {
    return diameter(s) / min_nonzero_distance(s);
}

BoundReport lower_bound_direct(const SemiMetricSpace& s, double p, double gap_value) {
    if (s.size() < 3) throw DomainError("the direct bound requires at least 3 points");
    if (gap_value <= 0) throw DomainError("the direct bound requires a positive gap");
    if (p <= 0) throw DomainError("p must be positive");

    BoundReport report;
    report.which = BoundReport::Which::direct;
    report.p = p;
    report.n = s.size();
    report.c_n = c_of_n(s.size());
    report.scaled_diam = scaled_diameter(s);
    report.rescale_factor = min_nonzero_distance(s);

    if (report.scaled_diam == 1)
        throw BoundInapplicableError("bound inapplicable: the space is equilateral "
                                     "(scaled diameter 1)");

    // Rescale so the minimum nonzero distance is 1; gamma is homogeneous of
    // degree one in d^p, so the gap divides by min^p.
    double min_d = to_double(report.rescale_factor);
    report.gap_used = gap_value / std::pow(min_d, p);

    double diam = to_double(report.scaled_diam); // diameter after rescaling
    double cn = to_double(report.c_n);
    report.lower_bound =
        p + std::log1p(report.gap_used / (std::pow(diam, p) * cn)) / std::log(diam);
    return report;
}

BoundReport lower_bound_combined(
    const std::vector<std::pair<SemiMetricSpace, double>>& components, double p) {
    if (components.empty()) throw DomainError("the combined bound needs components");
    if (p <= 0) throw DomainError("p must be positive");

    BoundReport report;
    report.which = BoundReport::Which::combined;
    report.p = p;

    int total_points = 0;
    double inv_gap_sum = 0;
    double diam_pow_sum = 0;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const auto& [space, gap_value] = components[i];
        if (space.size() < 2) throw DomainError("components need at least 2 points");
        if (min_nonzero_distance(space) != 1) {
            std::ostringstream msg;
            msg << "component " << i << " has minimum nonzero distance "
                << to_fraction_string(min_nonzero_distance(space))
                << "; the combined bound requires exactly 1";
            throw DomainError(msg.str());
        }
        if (gap_value <= 0) throw DomainError("component gaps must be strictly positive");
        double diam = to_double(diameter(space));
        total_points += space.size();
        inv_gap_sum += 1.0 / gap_value;
        diam_pow_sum += std::pow(diam, p);
        report.components.push_back({"", space.size(), diam, gap_value});
    }

    int n_combined = total_points - static_cast<int>(components.size()) + 1;
    if (n_combined < 3)
        throw DomainError("the combined bound requires at least 3 points in the combination");
    report.n = n_combined;
    report.c_n = c_of_n(n_combined);
    report.diam_power_sum = diam_pow_sum;
    report.gap_used = 1.0 / inv_gap_sum;

    if (diam_pow_sum <= 1.0)
        throw BoundInapplicableError("bound inapplicable: combined diameter bound is 1");

    // The combined diameter is at most (sum of diam^p)^(1/p); substituting
    // that bound for the diameter in the direct estimate gives
    //   p + p * ln(1 + gap / (sum * c(n))) / ln(sum).
    double cn = to_double(report.c_n);
    report.lower_bound =
        p + p * std::log1p(report.gap_used / (diam_pow_sum * cn)) / std::log(diam_pow_sum);
    return report;
}

} // namespace negtype
