#pragma once

// Shared test fixtures: the worked example spaces, random generators, and
// independent oracles (brute-force shortest paths, the quadratic-form
// evaluation of gamma).

#include "negtype/combine.hpp"
#include "negtype/rational.hpp"
#include "negtype/simplex.hpp"
#include "negtype/space.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace negtype::testing {

// Unit 5-cycle x - v2 - v3 - v4 - v5 - x.
inline WeightedGraph c5_graph() {
    WeightedGraph g;
    g.vertices = {"x", "v2", "v3", "v4", "v5"};
    for (auto [u, v] : {std::pair{"x", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"},
                        {"v5", "x"}})
        g.edges.push_back({u, v, Rational(1)});
    return g;
}

// Unit star with center v6 and leaves v9, v7, v8.
inline WeightedGraph star_graph() {
    WeightedGraph g;
    g.vertices = {"v9", "v6", "v7", "v8"};
    for (auto [u, v] : {std::pair{"v9", "v6"}, {"v6", "v7"}, {"v6", "v8"}})
        g.edges.push_back({u, v, Rational(1)});
    return g;
}

// The 8-point space: the 5-cycle glued to the star at x.
inline WeightedGraph g_graph() {
    WeightedGraph g;
    g.vertices = {"x", "v2", "v3", "v4", "v5", "v6", "v7", "v8"};
    for (auto [u, v] : {std::pair{"x", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"},
                        {"v5", "x"}, {"x", "v6"}, {"v6", "v7"}, {"v6", "v8"}})
        g.edges.push_back({u, v, Rational(1)});
    return g;
}

inline GluePlan g_plan() {
    GluePlan plan;
    plan.components.emplace_back("cycle", space_from_graph(c5_graph()));
    plan.components.emplace_back("star", space_from_graph(star_graph()));
    plan.steps.push_back({"cycle", "x", "star", "v9"});
    plan.p = 1;
    return plan;
}

// Brute-force shortest paths by DFS over all simple paths; deliberately
// independent of the library's Floyd-Warshall.
inline Rational dfs_shortest_path(const WeightedGraph& g, const std::string& from,
                                  const std::string& to) {
    auto index = [&](const std::string& v) {
        return static_cast<int>(std::find(g.vertices.begin(), g.vertices.end(), v) -
                                g.vertices.begin());
    };
    int n = static_cast<int>(g.vertices.size());
    std::vector<std::vector<std::pair<int, Rational>>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges) {
        int u = index(e.u), v = index(e.v);
        adj[static_cast<std::size_t>(u)].push_back({v, e.length});
        adj[static_cast<std::size_t>(v)].push_back({u, e.length});
    }
    int src = index(from), dst = index(to);
    Rational best(-1);
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    std::function<void(int, Rational)> walk = [&](int at, Rational len) {
        if (at == dst) {
            if (best < 0 || len < best) best = len;
            return;
        }
        visited[static_cast<std::size_t>(at)] = true;
        for (const auto& [next, w] : adj[static_cast<std::size_t>(at)])
            if (!visited[static_cast<std::size_t>(next)]) walk(next, len + w);
        visited[static_cast<std::size_t>(at)] = false;
    };
    walk(src, Rational(0));
    return best;
}

// gamma via the zero-sum quadratic form: aggregate signed weights per point
// and evaluate -(1/2) sum d^p alpha_i alpha_j. Ties the simplex view to the
// coefficient-vector view; used as an independent check of gamma().
inline Rational gamma_quadratic_form(const SemiMetricSpace& s, const WeightedSimplex& d,
                                     unsigned p) {
    std::map<int, Rational> alpha;
    for (const auto& e : d.a_team()) alpha[e.point] += e.weight;
    for (const auto& e : d.b_team()) alpha[e.point] -= e.weight;
    Rational acc(0);
    for (const auto& [i, ai] : alpha)
        for (const auto& [j, aj] : alpha) {
            if (s.dist(i, j) == 0) continue;
            acc += pow_rational(s.dist(i, j), static_cast<long>(p)) * ai * aj;
        }
    return -acc / 2;
}

// --- random generators (all deterministic via the caller's engine) ---

inline Rational random_length(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 6), den(1, 3);
    return Rational(num(rng), den(rng));
}

inline WeightedGraph random_connected_graph(std::mt19937_64& rng, int max_vertices,
                                            bool unit_min_distance = false) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    int n = nv(rng);
    WeightedGraph g;
    for (int i = 0; i < n; ++i) g.vertices.push_back("p" + std::to_string(i));
    // Random spanning tree, then a few extra edges.
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        g.edges.push_back({g.vertices[static_cast<std::size_t>(parent(rng))],
                           g.vertices[static_cast<std::size_t>(i)], random_length(rng)});
    }
    std::uniform_int_distribution<int> extra(0, n / 2);
    int extras = extra(rng);
    for (int e = 0; e < extras; ++e) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        g.edges.push_back({g.vertices[static_cast<std::size_t>(u)],
                           g.vertices[static_cast<std::size_t>(v)], random_length(rng)});
    }
    if (unit_min_distance) {
        // Rescale every edge so the resulting metric's minimum distance is 1.
        SemiMetricSpace s = space_from_graph(g);
        Rational m = min_nonzero_distance(s);
        for (auto& e : g.edges) e.length /= m;
    }
    return g;
}

inline SemiMetricSpace random_metric_space(std::mt19937_64& rng, int max_points) {
    return space_from_graph(random_connected_graph(rng, max_points));
}

// A random balanced simplex over a space; teams may repeat points and may
// share points across teams.
inline WeightedSimplex random_simplex(std::mt19937_64& rng, int n_points, int max_team = 4) {
    std::uniform_int_distribution<int> team_size(1, max_team);
    std::uniform_int_distribution<int> pt(0, n_points - 1);
    std::uniform_int_distribution<int> w_num(1, 9);
    std::uniform_int_distribution<int> w_den(1, 4);
    auto make_team = [&] {
        std::vector<WeightedPoint> t(static_cast<std::size_t>(team_size(rng)));
        for (auto& e : t) e = {pt(rng), Rational(w_num(rng), w_den(rng))};
        return t;
    };
    std::vector<WeightedPoint> a = make_team(), b = make_team();
    Rational ta(0), tb(0);
    for (const auto& e : a) ta += e.weight;
    for (const auto& e : b) tb += e.weight;
    for (auto& e : b) e.weight *= ta / tb; // exact balance
    return WeightedSimplex(std::move(a), std::move(b));
}

// A random plan over 'count' random components of at most max_points each.
inline GluePlan random_plan(std::mt19937_64& rng, int count, int max_points) {
    GluePlan plan;
    plan.p = 1;
    for (int i = 0; i < count; ++i) {
        auto s = random_metric_space(rng, max_points);
        plan.components.emplace_back("c" + std::to_string(i), std::move(s));
    }
    for (int i = 1; i < count; ++i) {
        std::uniform_int_distribution<int> left(0, i - 1);
        int l = left(rng);
        const auto& lspace = plan.components[static_cast<std::size_t>(l)].second;
        const auto& rspace = plan.components[static_cast<std::size_t>(i)].second;
        std::uniform_int_distribution<int> lp(0, lspace.size() - 1), rp(0, rspace.size() - 1);
        plan.steps.push_back({plan.components[static_cast<std::size_t>(l)].first,
                              lspace.label(lp(rng)),
                              plan.components[static_cast<std::size_t>(i)].first,
                              rspace.label(rp(rng))});
    }
    return plan;
}

} // namespace negtype::testing
