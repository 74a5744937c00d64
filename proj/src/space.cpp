#include "negtype/space.hpp"

#include "negtype/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace negtype {

namespace {

void validate_common(const std::vector<std::string>& labels, std::size_t n) {
    if (n == 0) throw ValidationError("space must contain at least one point");
    if (labels.size() != n)
        throw ValidationError("label count does not match matrix dimension");
    std::set<std::string_view> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (!seen.insert(labels[i]).second) {
            std::ostringstream msg;
            msg << "duplicate label '" << labels[i] << "' at index " << i;
            throw ValidationError(msg.str());
        }
    }
}

bool check_triangle_exact(int n, const std::vector<Rational>& d) {
    auto at = [&](int i, int j) -> const Rational& { return d[static_cast<std::size_t>(i) * n + j]; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (at(i, k) > at(i, j) + at(j, k)) return false;
    return true;
}

bool check_triangle_double(const Eigen::MatrixXd& d) {
    int n = static_cast<int>(d.rows());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (d(i, k) > d(i, j) + d(j, k)) return false;
    return true;
}

Eigen::MatrixXd to_double_matrix(int n, const std::vector<Rational>& d) {
    Eigen::MatrixXd m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = to_double(d[static_cast<std::size_t>(i) * n + j]);
    return m;
}

} // namespace

namespace detail {

SemiMetricSpace make_space(std::vector<std::string> labels,
                           std::vector<Rational> dist,
                           bool exact,
                           bool is_metric) {
    SemiMetricSpace s;
    s.n_ = static_cast<int>(labels.size());
    s.labels_ = std::move(labels);
    s.dist_ = std::move(dist);
    s.distd_ = to_double_matrix(s.n_, s.dist_);
    s.exact_ = exact;
    s.is_metric_ = is_metric;
    return s;
}

} // namespace detail

SemiMetricSpace SemiMetricSpace::from_matrix(std::vector<std::string> labels,
                                             const std::vector<std::vector<Rational>>& matrix,
                                             bool exact_inputs,
                                             bool check_triangle) {
    const std::size_t n = matrix.size();
    validate_common(labels, n);
    std::vector<Rational> flat(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix[i].size() != n) {
            std::ostringstream msg;
            msg << "matrix is not square: row " << i << " has " << matrix[i].size()
                << " entries, expected " << n;
            throw ValidationError(msg.str());
        }
        for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = matrix[i][j];
    }
    auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return flat[i * n + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        if (at(i, i) != 0) {
            std::ostringstream msg;
            msg << "nonzero diagonal entry at (" << i << "," << i << ")";
            throw ValidationError(msg.str());
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j) < 0) {
                std::ostringstream msg;
                msg << "negative entry at (" << i << "," << j << ")";
                throw ValidationError(msg.str());
            }
            if (i != j && at(i, j) == 0) {
                std::ostringstream msg;
                msg << "zero off-diagonal entry at (" << i << "," << j << ")";
                throw ValidationError(msg.str());
            }
            if (j > i && at(i, j) != at(j, i)) {
                std::ostringstream msg;
                msg << "asymmetric at (" << i << "," << j << ")";
                throw ValidationError(msg.str());
            }
        }
    }
    bool metric = false;
    if (check_triangle) metric = check_triangle_exact(static_cast<int>(n), flat);
    return detail::make_space(std::move(labels), std::move(flat), exact_inputs, metric);
}

int SemiMetricSpace::find(std::string_view label) const {
    for (int i = 0; i < n_; ++i)
        if (labels_[static_cast<std::size_t>(i)] == label) return i;
    return -1;
}

int SemiMetricSpace::index_of(std::string_view label) const {
    int i = find(label);
    if (i < 0) throw ValidationError("unknown point label '" + std::string(label) + "'");
    return i;
}

Eigen::MatrixXd SemiMetricSpace::power_matrix(double p) const {
    Eigen::MatrixXd m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            double d = distd_(i, j);
            m(i, j) = d == 0.0 ? 0.0 : std::pow(d, p);
        }
    return m;
}

std::vector<Rational> SemiMetricSpace::power_matrix_exact(unsigned p) const {
    std::vector<Rational> m(static_cast<std::size_t>(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            const Rational& d = dist(i, j);
            m[static_cast<std::size_t>(i) * n_ + j] =
                d == 0 ? Rational(0) : pow_rational(d, static_cast<long>(p));
        }
    return m;
}

bool SemiMetricSpace::triangle_holds() const {
    return exact_ ? check_triangle_exact(n_, dist_) : check_triangle_double(distd_);
}

SemiMetricSpace space_from_graph(const WeightedGraph& g) {
    const std::size_t n = g.vertices.size();
    validate_common(g.vertices, n);
    auto index_of = [&](const std::string& v) {
        auto it = std::find(g.vertices.begin(), g.vertices.end(), v);
        if (it == g.vertices.end())
            throw ValidationError("edge references unknown vertex '" + v + "'");
        return static_cast<std::size_t>(it - g.vertices.begin());
    };

    // Floyd-Warshall in exact arithmetic; spaces are desk-scale.
    const Rational unreachable(-1);
    std::vector<Rational> d(n * n, unreachable);
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
    for (const auto& e : g.edges) {
        if (e.length <= 0) throw ValidationError("edge length must be strictly positive");
        std::size_t u = index_of(e.u), v = index_of(e.v);
        if (u == v) throw ValidationError("self-loop at vertex '" + e.u + "'");
        if (d[u * n + v] == unreachable || e.length < d[u * n + v]) {
            d[u * n + v] = e.length;
            d[v * n + u] = e.length;
        }
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i * n + k] == unreachable) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (d[k * n + j] == unreachable) continue;
                Rational via = d[i * n + k] + d[k * n + j];
                if (d[i * n + j] == unreachable || via < d[i * n + j]) d[i * n + j] = via;
            }
        }

    std::vector<std::size_t> stranded;
    for (std::size_t j = 0; j < n; ++j)
        if (d[j] == unreachable) stranded.push_back(j);
    if (!stranded.empty()) {
        std::ostringstream msg;
        msg << "graph is disconnected; unreachable from '" << g.vertices[0] << "':";
        for (std::size_t j : stranded) msg << " '" << g.vertices[j] << "'";
        throw ValidationError(msg.str());
    }
    return detail::make_space(g.vertices, std::move(d), g.exact_lengths, true);
}

namespace {

// The metric flag survives snowflaking (c <= 1); for c > 1 the triangle
// inequality may fail and is re-verified on the transformed distances.
bool transformed_metric_flag(bool was_metric, bool c_above_one, int n,
                             const std::vector<Rational>& dist) {
    if (!c_above_one) return was_metric;
    return check_triangle_exact(n, dist);
}

SemiMetricSpace power_transform_double_impl(const SemiMetricSpace& s, double c) {
    if (c <= 0) throw DomainError("power transform exponent must be positive");
    int n = s.size();
    std::vector<Rational> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double d = s.dist_d(i, j);
            out[static_cast<std::size_t>(i) * n + j] = Rational(d == 0.0 ? 0.0 : std::pow(d, c));
        }
    bool metric = transformed_metric_flag(s.is_metric(), c > 1.0, n, out);
    return detail::make_space(s.labels(), std::move(out), false, metric);
}

} // namespace

SemiMetricSpace power_transform(const SemiMetricSpace& s, const Rational& c) {
    if (c <= 0) throw DomainError("power transform exponent must be positive");
    if (c == 1) return s;
    int n = s.size();
    if (s.exact() && numerator(c) <= Int(std::numeric_limits<long>::max()) &&
        denominator(c) <= Int(std::numeric_limits<unsigned>::max())) {
        long num = numerator(c).convert_to<long>();
        unsigned den = denominator(c).convert_to<unsigned>();
        std::vector<Rational> out(static_cast<std::size_t>(n) * n);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                const Rational& d = s.dist(i, j);
                Rational powered = d == 0 ? Rational(0) : pow_rational(d, num);
                if (den == 1) {
                    out[static_cast<std::size_t>(i) * n + j] = powered;
                } else if (auto root = nth_root_exact(powered, den)) {
                    out[static_cast<std::size_t>(i) * n + j] = *root;
                } else {
                    ok = false;
                }
            }
        if (ok) {
            bool metric = transformed_metric_flag(s.is_metric(), c > 1, n, out);
            return detail::make_space(s.labels(), std::move(out), true, metric);
        }
    }
    return power_transform_double_impl(s, to_double(c));
}

SemiMetricSpace power_transform(const SemiMetricSpace& s, double c) {
    if (c == 1.0) return s;
    return power_transform_double_impl(s, c);
}

SemiMetricSpace scale_distances(const SemiMetricSpace& s, const Rational& factor) {
    if (factor <= 0) throw DomainError("scale factor must be positive");
    int n = s.size();
    std::vector<Rational> out(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i) * n + j] = s.dist(i, j) * factor;
    return detail::make_space(s.labels(), std::move(out), s.exact(), s.is_metric());
}

Rational min_nonzero_distance(const SemiMetricSpace& s) {
    if (s.size() < 2)
        throw DomainError("min_nonzero_distance requires at least two points");
    Rational best = s.dist(0, 1);
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (s.dist(i, j) < best) best = s.dist(i, j);
    return best;
}

Rational diameter(const SemiMetricSpace& s) {
    Rational best(0);
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j)
            if (s.dist(i, j) > best) best = s.dist(i, j);
    return best;
}

} // namespace negtype
