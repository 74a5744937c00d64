#include "negtype/combine.hpp"

#include "negtype/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace negtype {

namespace {

int component_index(const GluePlan& plan, const std::string& name) {
    for (std::size_t i = 0; i < plan.components.size(); ++i)
        if (plan.components[i].first == name) return static_cast<int>(i);
    throw ValidationError("glue step references unknown component '" + name + "'");
}

void validate_plan(const GluePlan& plan) {
    if (plan.components.empty()) throw ValidationError("plan has no components");
    if (plan.p <= 0) throw DomainError("plan exponent p must be positive");
    std::set<std::string> names;
    for (const auto& [name, space] : plan.components) {
        (void)space;
        if (name.empty()) throw ValidationError("component name must not be empty");
        if (!names.insert(name).second)
            throw ValidationError("duplicate component name '" + name + "'");
    }
    if (plan.steps.size() + 1 != plan.components.size()) {
        std::ostringstream msg;
        msg << "plan with " << plan.components.size() << " components needs "
            << plan.components.size() - 1 << " glue steps, got " << plan.steps.size();
        throw ValidationError(msg.str());
    }
}

} // namespace

CombinationSpace build_combination(const GluePlan& plan) {
    validate_plan(plan);
    CombinationSpace out;
    out.p_ = plan.p;
    for (const auto& [name, space] : plan.components) {
        out.names_.push_back(name);
        out.components_.push_back(space);
    }

    const bool unit_p = plan.p == 1;
    std::vector<SemiMetricSpace> powered;
    powered.reserve(plan.components.size());
    for (const auto& [name, space] : plan.components) {
        (void)name;
        powered.push_back(unit_p ? space : power_transform(space, plan.p));
    }

    // Merge order: the first step introduces two components, later steps one
    // more each. merged[i] true once component i is part of the intermediate.
    std::vector<bool> merged(plan.components.size(), false);

    // State of the growing intermediate, in the p-th power metric.
    std::vector<std::string> labels;
    std::vector<Rational> pdist; // row-major, grows per step
    bool pexact = true;
    out.component_points_.assign(plan.components.size(), {});

    auto pd = [&](std::size_t i, std::size_t j) -> Rational& {
        return pdist[i * labels.size() + j];
    };

    auto add_component_points = [&](int ci, int glue_final, int glue_in_comp) {
        // Appends all points of component ci except its glue point (mapped to
        // glue_final, or -1 when ci is the very first component).
        const SemiMetricSpace& comp = plan.components[static_cast<std::size_t>(ci)].second;
        const std::string& cname = plan.components[static_cast<std::size_t>(ci)].first;
        std::vector<int>& cpts = out.component_points_[static_cast<std::size_t>(ci)];
        cpts.assign(static_cast<std::size_t>(comp.size()), -1);
        std::set<std::string> taken(labels.begin(), labels.end());
        for (int k = 0; k < comp.size(); ++k) {
            if (k == glue_in_comp) {
                cpts[static_cast<std::size_t>(k)] = glue_final;
                out.provenance_[static_cast<std::size_t>(glue_final)].push_back(
                    {cname, comp.label(k)});
                continue;
            }
            std::string lab = comp.label(k);
            if (taken.count(lab)) {
                std::string renamed = cname + "." + lab;
                int suffix = 2;
                while (taken.count(renamed)) renamed = cname + "." + lab + "#" + std::to_string(suffix++);
                out.renames_.push_back({{cname, lab}, renamed});
                lab = renamed;
            }
            taken.insert(lab);
            cpts[static_cast<std::size_t>(k)] = static_cast<int>(labels.size());
            labels.push_back(lab);
            out.provenance_.push_back({{cname, comp.label(k)}});
        }
        merged[static_cast<std::size_t>(ci)] = true;
    };

    // Seed the intermediate with the first component of the first step (or
    // the lone component of a single-component plan).
    int first_comp = plan.steps.empty() ? 0 : component_index(plan, plan.steps[0].left);
    out.provenance_.clear();
    add_component_points(first_comp, -1, -1);
    {
        const SemiMetricSpace& comp = powered[static_cast<std::size_t>(first_comp)];
        pdist.assign(labels.size() * labels.size(), Rational(0));
        for (int i = 0; i < comp.size(); ++i)
            for (int j = 0; j < comp.size(); ++j)
                pd(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = comp.dist(i, j);
        pexact = comp.exact();
    }

    for (const auto& step : plan.steps) {
        int left_ci = component_index(plan, step.left);
        int right_ci = component_index(plan, step.right);
        if (!merged[static_cast<std::size_t>(left_ci)])
            throw ValidationError("glue step's left component '" + step.left +
                                  "' is not part of the construction yet");
        if (merged[static_cast<std::size_t>(right_ci)])
            throw ValidationError("component '" + step.right + "' is glued more than once");

        const SemiMetricSpace& left_comp = plan.components[static_cast<std::size_t>(left_ci)].second;
        const SemiMetricSpace& right_pow = powered[static_cast<std::size_t>(right_ci)];
        int left_local = left_comp.index_of(step.left_point);
        int glue_final = out.component_points_[static_cast<std::size_t>(left_ci)]
                                              [static_cast<std::size_t>(left_local)];
        int right_local = plan.components[static_cast<std::size_t>(right_ci)].second.index_of(
            step.right_point);

        const std::size_t before = labels.size();
        out.glue_points_.push_back(glue_final);
        out.steps_.push_back({glue_final, static_cast<int>(before), right_ci});

        std::vector<Rational> old = std::move(pdist);
        auto od = [&](std::size_t i, std::size_t j) -> const Rational& {
            return old[i * before + j];
        };
        add_component_points(right_ci, glue_final, right_local);
        const std::size_t after = labels.size();
        pdist.assign(after * after, Rational(0));
        for (std::size_t i = 0; i < before; ++i)
            for (std::size_t j = 0; j < before; ++j) pd(i, j) = od(i, j);

        const auto& rpts = out.component_points_[static_cast<std::size_t>(right_ci)];
        for (int a = 0; a < right_pow.size(); ++a) {
            std::size_t fa = static_cast<std::size_t>(rpts[static_cast<std::size_t>(a)]);
            if (fa < before && fa != static_cast<std::size_t>(glue_final)) continue;
            for (int b = 0; b < right_pow.size(); ++b) {
                std::size_t fb = static_cast<std::size_t>(rpts[static_cast<std::size_t>(b)]);
                pd(fa, fb) = right_pow.dist(a, b);
            }
        }
        // Distances across the glue point add in the powered metric.
        for (std::size_t i = 0; i < before; ++i) {
            if (i == static_cast<std::size_t>(glue_final)) continue;
            for (std::size_t j = before; j < after; ++j) {
                Rational through = od(i, static_cast<std::size_t>(glue_final)) +
                                   pd(static_cast<std::size_t>(glue_final), j);
                pd(i, j) = through;
                pd(j, i) = std::move(through);
            }
        }
        pexact = pexact && right_pow.exact();
    }

    // Assemble the final matrix. Pairs inside one component copy that
    // component's own distances so the embeddings are exact by construction;
    // everything else takes the 1/p-th root of the powered distance.
    const std::size_t n = labels.size();
    std::vector<Rational> final_dist(n * n, Rational(0));
    std::vector<char> assigned(n * n, 0);
    bool final_exact = true;
    for (std::size_t ci = 0; ci < plan.components.size(); ++ci) {
        const SemiMetricSpace& comp = plan.components[ci].second;
        final_exact = final_exact && comp.exact();
        const auto& cpts = out.component_points_[ci];
        for (int a = 0; a < comp.size(); ++a)
            for (int b = 0; b < comp.size(); ++b) {
                std::size_t fa = static_cast<std::size_t>(cpts[static_cast<std::size_t>(a)]);
                std::size_t fb = static_cast<std::size_t>(cpts[static_cast<std::size_t>(b)]);
                final_dist[fa * n + fb] = comp.dist(a, b);
                assigned[fa * n + fb] = 1;
            }
    }
    bool need_roots = false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!assigned[i * n + j] && i != j) need_roots = true;
    if (need_roots) {
        long pnum = 0;
        unsigned pden = 1;
        bool p_small = numerator(plan.p) <= Int(std::numeric_limits<long>::max()) &&
                       denominator(plan.p) <= Int(std::numeric_limits<unsigned>::max());
        if (p_small) {
            pnum = numerator(plan.p).convert_to<long>();
            pden = denominator(plan.p).convert_to<unsigned>();
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (assigned[i * n + j] || i == j) continue;
                const Rational& powered_val = pdist[i * n + j];
                if (unit_p) {
                    final_dist[i * n + j] = powered_val;
                    continue;
                }
                // Invert d -> d^p: raise to 1/p = pden/pnum.
                std::optional<Rational> exact_root;
                if (pexact && p_small && pnum > 0) {
                    Rational raised = pow_rational(powered_val, static_cast<long>(pden));
                    exact_root = nth_root_exact(raised, static_cast<unsigned>(pnum));
                }
                if (exact_root) {
                    final_dist[i * n + j] = *exact_root;
                } else {
                    final_exact = false;
                    final_dist[i * n + j] =
                        Rational(std::pow(to_double(powered_val), 1.0 / to_double(plan.p)));
                }
            }
    }
    final_exact = final_exact && (unit_p ? pexact : true);

    SemiMetricSpace assembled =
        detail::make_space(labels, std::move(final_dist), final_exact, false);
    bool metric = assembled.triangle_holds();
    {
        std::vector<Rational> copy(&assembled.dist(0, 0), &assembled.dist(0, 0) + n * n);
        out.space_ = detail::make_space(labels, std::move(copy), final_exact, metric);
    }
    return out;
}

std::vector<WeightedSimplex> simplex_components(const CombinationSpace& c,
                                                const WeightedSimplex& d) {
    const int ncomp = c.component_count();
    if (d.max_point() >= c.space().size())
        throw ValidationError("simplex references points outside the combination space");

    // Final-space index -> index inside component ci.
    auto to_component = [&](int ci, const WeightedSimplex& s) {
        const auto& cpts = c.component_points(ci);
        std::map<int, int> inverse;
        for (std::size_t k = 0; k < cpts.size(); ++k) inverse[cpts[k]] = static_cast<int>(k);
        auto map_team = [&](const std::vector<WeightedPoint>& team) {
            std::vector<WeightedPoint> out;
            out.reserve(team.size());
            for (const auto& e : team) out.push_back({inverse.at(e.point), e.weight});
            return out;
        };
        return WeightedSimplex(map_team(s.a_team()), map_team(s.b_team()));
    };

    std::vector<WeightedSimplex> result(static_cast<std::size_t>(ncomp));
    WeightedSimplex current = d;

    // Peel components off in reverse construction order. At each step the
    // right side is the component added there; everything else collapses to
    // the glue point for that component's simplex, and vice versa.
    for (auto it = c.steps().rbegin(); it != c.steps().rend(); ++it) {
        const auto& step = *it;
        auto in_right = [&](int point) {
            return point == step.glue_point || point >= step.points_before;
        };
        auto substitute = [&](const std::vector<WeightedPoint>& team, bool keep_right) {
            std::vector<WeightedPoint> out;
            out.reserve(team.size());
            for (const auto& e : team) {
                bool right = in_right(e.point);
                int point = (right == keep_right) ? e.point : step.glue_point;
                out.push_back({point, e.weight});
            }
            return out;
        };
        WeightedSimplex right_part(substitute(current.a_team(), true),
                                   substitute(current.b_team(), true));
        WeightedSimplex left_part(substitute(current.a_team(), false),
                                  substitute(current.b_team(), false));
        result[static_cast<std::size_t>(step.component)] =
            to_component(step.component, right_part);
        current = std::move(left_part);
    }
    int first = c.steps().empty() ? 0 : [&] {
        // The component that seeded the construction is the one whose points
        // fill the prefix; it is the only one never appearing as a step's
        // right side.
        std::vector<bool> used(static_cast<std::size_t>(ncomp), false);
        for (const auto& step : c.steps()) used[static_cast<std::size_t>(step.component)] = true;
        for (int i = 0; i < ncomp; ++i)
            if (!used[static_cast<std::size_t>(i)]) return i;
        return 0;
    }();
    result[static_cast<std::size_t>(first)] = to_component(first, current);
    return result;
}

Rational compose_gaps(const std::vector<Rational>& gaps) {
    if (gaps.empty()) throw DomainError("compose_gaps needs at least one gap");
    Rational acc(0);
    for (const auto& g : gaps) {
        if (g <= 0) throw DomainError("compose_gaps requires strictly positive gaps");
        acc += Rational(1) / g;
    }
    return Rational(1) / acc;
}

double compose_gaps(const std::vector<double>& gaps) {
    if (gaps.empty()) throw DomainError("compose_gaps needs at least one gap");
    double acc = 0;
    for (double g : gaps) {
        if (g <= 0) throw DomainError("compose_gaps requires strictly positive gaps");
        acc += 1.0 / g;
    }
    return 1.0 / acc;
}

Rational tree_gap(const WeightedGraph& g) {
    if (g.edges.size() + 1 != g.vertices.size()) {
        std::ostringstream msg;
        msg << "not a tree: " << g.vertices.size() << " vertices need "
            << (g.vertices.empty() ? 0 : g.vertices.size() - 1) << " edges, got " << g.edges.size()
            << (g.edges.size() + 1 > g.vertices.size() ? " (graph has a cycle)" : "");
        throw DomainError(msg.str());
    }
    if (g.edges.empty()) throw DomainError("tree gap needs at least one edge");
    space_from_graph(g); // connectivity check; throws when disconnected
    Rational acc(0);
    for (const auto& e : g.edges) {
        if (e.length <= 0) throw ValidationError("edge length must be strictly positive");
        acc += Rational(1) / e.length;
    }
    return Rational(1) / acc;
}

namespace {

// Orient a witness so the glue point is not on its b-team, and express it in
// final-space indices. The refinement makes the orientation well defined.
WeightedSimplex oriented_witness(const CombinationSpace& c, int ci, const WeightedSimplex& w,
                                 int glue_final) {
    const auto& cpts = c.component_points(ci);
    auto map_team = [&](const std::vector<WeightedPoint>& team) {
        std::vector<WeightedPoint> out;
        out.reserve(team.size());
        for (const auto& e : team) {
            if (e.point < 0 || e.point >= static_cast<int>(cpts.size()))
                throw ValidationError("witness references a point outside its component");
            out.push_back({cpts[static_cast<std::size_t>(e.point)], e.weight});
        }
        return out;
    };
    RefinedSimplex refined =
        refine(WeightedSimplex(map_team(w.a_team()), map_team(w.b_team())));
    if (refined.weight == 0) throw ValidationError("extremal witness must be non-degenerate");
    Rational diff = refined.weight >= 1 ? refined.weight - 1 : Rational(1) - refined.weight;
    if (diff > Rational(1, 1000000000)) {
        throw ValidationError("extremal witness must be normalized (weight 1), got " +
                              to_fraction_string(refined.weight));
    }
    WeightedSimplex s = refined.weight == 1
                            ? refined.simplex
                            : scale_weights(refined.simplex, Rational(1) / refined.weight);
    for (const auto& e : s.b_team())
        if (e.point == glue_final) return WeightedSimplex(s.b_team(), s.a_team());
    return s;
}

// Swap the teams when the glue point sits on the b-team; the gap value is
// unchanged and the construction below requires the glue point on the a-side.
WeightedSimplex reorient_away_from_b(const WeightedSimplex& s, int glue_final) {
    for (const auto& e : s.b_team())
        if (e.point == glue_final && e.weight > 0)
            return WeightedSimplex(s.b_team(), s.a_team());
    return s;
}

WeightedSimplex merge_at_glue(const WeightedSimplex& left, const WeightedSimplex& right,
                              int glue_final) {
    std::vector<WeightedPoint> a, b;
    Rational glue_weight(0);
    for (const auto* part : {&left, &right}) {
        for (const auto& e : part->a_team()) {
            if (e.point == glue_final)
                glue_weight += e.weight;
            else
                a.push_back(e);
        }
        for (const auto& e : part->b_team()) b.push_back(e);
    }
    if (glue_weight > 0) a.push_back({glue_final, std::move(glue_weight)});
    return WeightedSimplex(std::move(a), std::move(b));
}

} // namespace

WeightedSimplex extremal_simplex(
    const CombinationSpace& c,
    const std::vector<std::pair<WeightedSimplex, Rational>>& witnesses) {
    if (static_cast<int>(witnesses.size()) != c.component_count())
        throw ValidationError("need exactly one witness per component");
    for (const auto& [w, g] : witnesses) {
        (void)w;
        if (g <= 0) throw DomainError("witness gaps must be strictly positive");
    }
    if (c.steps().empty()) {
        // Single component: its witness, mapped onto the (identical) space.
        return oriented_witness(c, 0, witnesses[0].first, -1);
    }

    int first = [&] {
        std::vector<bool> used(static_cast<std::size_t>(c.component_count()), false);
        for (const auto& step : c.steps()) used[static_cast<std::size_t>(step.component)] = true;
        for (int i = 0; i < c.component_count(); ++i)
            if (!used[static_cast<std::size_t>(i)]) return i;
        return 0;
    }();

    WeightedSimplex current =
        oriented_witness(c, first, witnesses[static_cast<std::size_t>(first)].first,
                         c.steps().front().glue_point);
    Rational current_gap = witnesses[static_cast<std::size_t>(first)].second;

    for (const auto& step : c.steps()) {
        const auto& [w, g] = witnesses[static_cast<std::size_t>(step.component)];
        // The current side keeps lambda_1 of the mass, the new component
        // lambda_2, split in inverse proportion to the gaps.
        Rational lambda1 = g / (current_gap + g);
        Rational lambda2 = current_gap / (current_gap + g);
        WeightedSimplex left = scale_weights(
            reorient_away_from_b(current, step.glue_point), lambda1);
        WeightedSimplex right = scale_weights(
            oriented_witness(c, step.component, w, step.glue_point), lambda2);
        current = merge_at_glue(left, right, step.glue_point);
        current_gap = Rational(1) / (Rational(1) / current_gap + Rational(1) / g);
    }
    return refine(current).simplex;
}

} // namespace negtype
