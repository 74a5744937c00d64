#pragma once

#include "negtype/rational.hpp"
#include "negtype/space.hpp"

#include <vector>

namespace negtype {

struct WeightedPoint {
    int point = 0;     // index into a SemiMetricSpace
    Rational weight;   // >= 0
    bool operator==(const WeightedPoint&) const = default;
};

/// Two teams of weighted points with equal totals (within a small balance
/// tolerance for weights that came from floating point). Points may repeat
/// within a team and across teams; zero weights are allowed.
class WeightedSimplex {
public:
    WeightedSimplex() = default; // the empty (degenerate) simplex
    WeightedSimplex(std::vector<WeightedPoint> a_team, std::vector<WeightedPoint> b_team);

    const std::vector<WeightedPoint>& a_team() const { return a_; }
    const std::vector<WeightedPoint>& b_team() const { return b_; }

    Rational a_total() const;
    Rational b_total() const;
    /// Largest referenced point index, -1 when both teams are empty.
    int max_point() const;
    bool empty() const { return a_.empty() && b_.empty(); }

    bool operator==(const WeightedSimplex&) const = default;

private:
    std::vector<WeightedPoint> a_, b_;
};

/// A simplex in canonical refined form: distinct points, strictly positive
/// weights, teams sorted by point index, team orientation fixed by the rule
/// that the lexicographically smaller index sequence is the a-team.
/// A degenerate simplex refines to empty teams with weight zero.
struct RefinedSimplex {
    WeightedSimplex simplex;
    Rational weight; // the common team total of the refinement
};

/// Merge duplicate same-team points, cancel points shared across teams,
/// and drop zero weights, producing the canonical refinement.
RefinedSimplex refine(const WeightedSimplex& d);

/// The weight of a simplex (team total of its refinement; 0 if degenerate).
Rational simplex_weight(const WeightedSimplex& d);

/// Divide all weights by the simplex weight; errors on degenerate input.
WeightedSimplex normalize(const WeightedSimplex& d);

/// True when both simplices have the same canonical refinement.
bool equivalent(const WeightedSimplex& d1, const WeightedSimplex& d2);

/// Multiply every weight by t >= 0.
WeightedSimplex scale_weights(const WeightedSimplex& d, const Rational& t);

/// Cross-team sum of m_i n_j d(a_i, b_j)^p.
double cross_sum(const SemiMetricSpace& s, const WeightedSimplex& d, double p);
/// Within-team sum over unordered pairs of each team.
double within_sum(const SemiMetricSpace& s, const WeightedSimplex& d, double p);
/// Simplex gap: cross_sum - within_sum. Nonnegative for every simplex
/// exactly when the space has p-negative type.
double gamma(const SemiMetricSpace& s, const WeightedSimplex& d, double p);

/// Exact counterparts for integer exponents. Exact with respect to the
/// stored distances and weights.
Rational cross_sum_exact(const SemiMetricSpace& s, const WeightedSimplex& d, unsigned p);
Rational within_sum_exact(const SemiMetricSpace& s, const WeightedSimplex& d, unsigned p);
Rational gamma_exact(const SemiMetricSpace& s, const WeightedSimplex& d, unsigned p);

} // namespace negtype
