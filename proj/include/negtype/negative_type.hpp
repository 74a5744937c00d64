#pragma once

#include "negtype/rational.hpp"
#include "negtype/simplex.hpp"
#include "negtype/space.hpp"

#include <Eigen/Dense>

#include <optional>

namespace negtype {

/// Outcome of the p-negative type test.
///
/// The space has p-negative type when the quadratic form with matrix
/// d(x_i,x_j)^p is nonpositive on the zero-sum hyperplane; the test
/// computes the largest eigenvalue of the form restricted to that
/// hyperplane and compares it against a relative threshold tol*|M|_inf.
struct TypeVerdict {
    double p = 0;
    bool has_type = false;
    bool strict = false;
    /// The decisive eigenvalue landed inside the tolerance band.
    bool marginal = false;
    /// Largest value of the quadratic form on unit vectors of the zero-sum
    /// hyperplane (0 for single-point spaces).
    double max_form_value = 0;
    /// Zero-sum certificate with positive form value, present when the
    /// verdict is negative.
    std::optional<Eigen::VectorXd> violation;
};

TypeVerdict has_negative_type(const SemiMetricSpace& s, double p, double tol = 1e-9);

/// Supremal p-negative type by bisection over [0, p_max]. Returns the lower
/// end of the final bracket (a p certified to have negative type, within tol
/// of the supremum), or nullopt when the space still has negative type at
/// p_max — the "+infinity" sentinel.
std::optional<double> supremal_p(const SemiMetricSpace& s, double p_max = 8.0,
                                 double tol = 1e-6);

struct GapOptions {
    /// Enumerate all team sign patterns up to this point count; sample
    /// patterns randomly beyond it.
    int exact_cutoff = 12;
    int pattern_samples = 2048;
    int restarts = 32;
    int max_iter = 600;
    unsigned seed = 0;
    /// Tolerance handed to the negative-type verdict embedded in the result.
    double type_tol = 1e-9;
    /// Attempt exact recovery of the optimum by solving the stationarity
    /// system in rational arithmetic (exact spaces, integer p only).
    bool try_exact = true;
};

enum class GapMethod { formula, optimizer, oracle };

/// The p-negative type gap: the minimum of gamma over normalized simplices.
struct GapResult {
    double p = 0;
    double gap = 0;
    /// Exact value when rational recovery succeeded.
    std::optional<Rational> gap_exact;
    WeightedSimplex witness;
    GapMethod method = GapMethod::optimizer;
    /// Heuristic certificate radius derived from the first-order residual
    /// at the reported witness (0 when the value is exact).
    double certified_tol = 0;
    /// Negative-type verdict at this p; when false the gap may be negative.
    bool negative_type_holds = true;
};

GapResult gap(const SemiMetricSpace& s, double p, const GapOptions& opts = {});

/// Independent brute-force upper bound on the gap: dense grids over every
/// team sign pattern plus seeded random restarts, refined by pairwise
/// weight-transfer descent down to the stated resolution. Used to validate
/// gap(); deliberately shares no search machinery with it.
double gap_oracle(const SemiMetricSpace& s, double p, double resolution = 1e-4,
                  unsigned seed = 1);

} // namespace negtype
