#include "negtype/simplex.hpp"

#include "negtype/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace negtype {

namespace {

// |sum(a) - sum(b)| <= 1e-12 * max(1, sum(a)); exact inputs balance exactly.
const Rational kBalanceTol(1, Int("1000000000000"));

Rational team_total(const std::vector<WeightedPoint>& team) {
    Rational t(0);
    for (const auto& e : team) t += e.weight;
    return t;
}

} // namespace

WeightedSimplex::WeightedSimplex(std::vector<WeightedPoint> a_team,
                                 std::vector<WeightedPoint> b_team)
    : a_(std::move(a_team)), b_(std::move(b_team)) {
    for (const auto* team : {&a_, &b_})
        for (const auto& e : *team) {
            if (e.point < 0) throw ValidationError("negative point index in simplex");
            if (e.weight < 0) throw ValidationError("negative weight in simplex");
        }
    Rational ta = team_total(a_), tb = team_total(b_);
    Rational diff = ta >= tb ? ta - tb : tb - ta;
    Rational scale = ta > 1 ? ta : Rational(1);
    if (diff > kBalanceTol * scale) {
        std::ostringstream msg;
        msg << "unbalanced simplex: team totals " << to_fraction_string(ta) << " vs "
            << to_fraction_string(tb);
        throw ValidationError(msg.str());
    }
}

Rational WeightedSimplex::a_total() const { return team_total(a_); }
Rational WeightedSimplex::b_total() const { return team_total(b_); }

int WeightedSimplex::max_point() const {
    int m = -1;
    for (const auto* team : {&a_, &b_})
        for (const auto& e : *team) m = std::max(m, e.point);
    return m;
}

RefinedSimplex refine(const WeightedSimplex& d) {
    // Net weight per point: merging same-team duplicates, cancelling the
    // smaller of a cross-team pair and dropping zeros all compose into one
    // signed aggregation.
    std::map<int, Rational> net;
    for (const auto& e : d.a_team()) net[e.point] += e.weight;
    for (const auto& e : d.b_team()) net[e.point] -= e.weight;

    std::vector<WeightedPoint> a, b;
    Rational lambda(0);
    for (const auto& [point, w] : net) {
        if (w > 0) {
            a.push_back({point, w});
            lambda += w;
        } else if (w < 0) {
            b.push_back({point, -w});
        }
    }
    // Orientation rule: the team with the lexicographically smaller index
    // sequence plays the a-team. Teams are disjoint here, so the rule is
    // unambiguous for non-degenerate simplices.
    auto indices = [](const std::vector<WeightedPoint>& t) {
        std::vector<int> ix;
        ix.reserve(t.size());
        for (const auto& e : t) ix.push_back(e.point);
        return ix;
    };
    if (indices(b) < indices(a)) std::swap(a, b);
    Rational weight = a.empty() ? Rational(0) : team_total(a);
    return RefinedSimplex{WeightedSimplex(std::move(a), std::move(b)), std::move(weight)};
}

Rational simplex_weight(const WeightedSimplex& d) { return refine(d).weight; }

WeightedSimplex normalize(const WeightedSimplex& d) {
    Rational lambda = simplex_weight(d);
    if (lambda == 0) throw DomainError("cannot normalize a degenerate simplex");
    return scale_weights(d, Rational(1) / lambda);
}

bool equivalent(const WeightedSimplex& d1, const WeightedSimplex& d2) {
    auto r1 = refine(d1), r2 = refine(d2);
    return r1.simplex == r2.simplex;
}

WeightedSimplex scale_weights(const WeightedSimplex& d, const Rational& t) {
    if (t < 0) throw DomainError("weight scale factor must be nonnegative");
    std::vector<WeightedPoint> a = d.a_team(), b = d.b_team();
    for (auto& e : a) e.weight *= t;
    for (auto& e : b) e.weight *= t;
    return WeightedSimplex(std::move(a), std::move(b));
}

namespace {

void check_indices(const SemiMetricSpace& s, const WeightedSimplex& d) {
    if (d.max_point() >= s.size()) {
        std::ostringstream msg;
        msg << "simplex references point index " << d.max_point() << " but the space has "
            << s.size() << " points";
        throw ValidationError(msg.str());
    }
}

template <class T, class Dist>
T cross_sum_impl(const WeightedSimplex& d, Dist dp) {
    T acc{};
    for (const auto& ea : d.a_team())
        for (const auto& eb : d.b_team()) acc += dp(ea, eb);
    return acc;
}

template <class T, class Dist>
T within_sum_impl(const WeightedSimplex& d, Dist dp) {
    T acc{};
    for (const auto* team : {&d.a_team(), &d.b_team()})
        for (std::size_t i = 0; i < team->size(); ++i)
            for (std::size_t j = i + 1; j < team->size(); ++j) acc += dp((*team)[i], (*team)[j]);
    return acc;
}

} // namespace

double cross_sum(const SemiMetricSpace& s, const WeightedSimplex& d, double p) {
    check_indices(s, d);
    auto dp = [&](const WeightedPoint& x, const WeightedPoint& y) {
        double dist = s.dist_d(x.point, y.point);
        return to_double(x.weight) * to_double(y.weight) * (dist == 0.0 ? 0.0 : std::pow(dist, p));
    };
    return cross_sum_impl<double>(d, dp);
}

double within_sum(const SemiMetricSpace& s, const WeightedSimplex& d, double p) {
    check_indices(s, d);
    auto dp = [&](const WeightedPoint& x, const WeightedPoint& y) {
        double dist = s.dist_d(x.point, y.point);
        return to_double(x.weight) * to_double(y.weight) * (dist == 0.0 ? 0.0 : std::pow(dist, p));
    };
    return within_sum_impl<double>(d, dp);
}

double gamma(const SemiMetricSpace& s, const WeightedSimplex& d, double p) {
    return cross_sum(s, d, p) - within_sum(s, d, p);
}

Rational cross_sum_exact(const SemiMetricSpace& s, const WeightedSimplex& d, unsigned p) {
    check_indices(s, d);
    auto dp = [&](const WeightedPoint& x, const WeightedPoint& y) {
        const Rational& dist = s.dist(x.point, y.point);
        if (dist == 0) return Rational(0);
        return Rational(x.weight * y.weight * pow_rational(dist, static_cast<long>(p)));
    };
    return cross_sum_impl<Rational>(d, dp);
}

Rational within_sum_exact(const SemiMetricSpace& s, const WeightedSimplex& d, unsigned p) {
    check_indices(s, d);
    auto dp = [&](const WeightedPoint& x, const WeightedPoint& y) {
        const Rational& dist = s.dist(x.point, y.point);
        if (dist == 0) return Rational(0);
        return Rational(x.weight * y.weight * pow_rational(dist, static_cast<long>(p)));
    };
    return within_sum_impl<Rational>(d, dp);
}

Rational gamma_exact(const SemiMetricSpace& s, const WeightedSimplex& d, unsigned p) {
    return cross_sum_exact(s, d, p) - within_sum_exact(s, d, p);
}

} // namespace negtype
