#pragma once

#include "negtype/rational.hpp"

#include <Eigen/Dense>

#include <string>
#include <string_view>
#include <vector>

namespace negtype {

class SemiMetricSpace;

namespace detail {
SemiMetricSpace make_space(std::vector<std::string> labels,
                           std::vector<Rational> dist,
                           bool exact,
                           bool is_metric);
} // namespace detail

/// A finite semi-metric space: distinct labels, a symmetric nonnegative
/// distance matrix with zero diagonal and strictly positive off-diagonal
/// entries. Distances are stored exactly as rationals (doubles embed
/// exactly); `exact()` reports whether they came from exact inputs, which
/// gates the exact-arithmetic fast paths. `is_metric()` records whether
/// the triangle inequality has been verified; semi-metric inputs are
/// first-class and never rejected for triangle violations.
class SemiMetricSpace {
public:
    static SemiMetricSpace from_matrix(std::vector<std::string> labels,
                                       const std::vector<std::vector<Rational>>& matrix,
                                       bool exact_inputs,
                                       bool check_triangle);

    int size() const { return n_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Index of a label, or -1 when absent.
    int find(std::string_view label) const;
    /// Index of a label; throws ValidationError when absent.
    int index_of(std::string_view label) const;

    const Rational& dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
    double dist_d(int i, int j) const { return distd_(i, j); }
    const Eigen::MatrixXd& matrix() const { return distd_; }

    bool exact() const { return exact_; }
    bool is_metric() const { return is_metric_; }

    /// Elementwise d^p as doubles, with the convention 0^p := 0.
    Eigen::MatrixXd power_matrix(double p) const;
    /// Elementwise d^p exactly (row-major n*n).
    std::vector<Rational> power_matrix_exact(unsigned p) const;

    /// Re-check the triangle inequality (exactly when exact()).
    bool triangle_holds() const;

private:
    SemiMetricSpace() = default;
    friend class CombinationSpace; // holds a space member filled in later
    friend SemiMetricSpace detail::make_space(std::vector<std::string>,
                                              std::vector<Rational>,
                                              bool,
                                              bool);

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Rational> dist_; // row-major n*n
    Eigen::MatrixXd distd_;
    bool exact_ = false;
    bool is_metric_ = false;
};

/// Connected weighted graph; vertices are labels, edge lengths positive.
struct WeightedGraph {
    struct Edge {
        std::string u, v;
        Rational length;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    bool exact_lengths = true;
};

/// Shortest-path metric of a connected weighted graph. Always a metric.
SemiMetricSpace space_from_graph(const WeightedGraph& g);

/// Raise every distance to the power c > 0 (exactly when possible).
/// For c <= 1 the metric flag is preserved; for c > 1 the triangle
/// inequality is re-verified and the flag updated.
SemiMetricSpace power_transform(const SemiMetricSpace& s, const Rational& c);
SemiMetricSpace power_transform(const SemiMetricSpace& s, double c);

/// Multiply every distance by factor > 0.
SemiMetricSpace scale_distances(const SemiMetricSpace& s, const Rational& factor);

Rational min_nonzero_distance(const SemiMetricSpace& s);
Rational diameter(const SemiMetricSpace& s);

} // namespace negtype
