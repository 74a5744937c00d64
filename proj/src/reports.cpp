#include "negtype/reports.hpp"

#include "negtype/errors.hpp"

#include <cmath>

namespace negtype {

namespace {

Json rational_json(const Rational& q) {
    return Json{{"value", to_double(q)}, {"exact", to_fraction_string(q)}};
}

const char* method_name(GapMethod m) {
    switch (m) {
    case GapMethod::formula: return "formula";
    case GapMethod::optimizer: return "optimizer";
    case GapMethod::oracle: return "oracle";
    }
    return "unknown";
}

} // namespace

Json verdict_to_json(const TypeVerdict& v) {
    Json out{{"p", v.p},
             {"has_negative_type", v.has_type},
             {"strict", v.strict},
             {"marginal", v.marginal},
             {"max_form_value", v.max_form_value}};
    if (v.violation) {
        Json alpha = Json::array();
        for (int i = 0; i < v.violation->size(); ++i) alpha.push_back((*v.violation)(i));
        out["violation"] = std::move(alpha);
    }
    return out;
}

Json gap_result_to_json(const GapResult& r, const SemiMetricSpace& s) {
    Json out{{"p", r.p},
             {"gap", r.gap},
             {"method", method_name(r.method)},
             {"certified_tol", r.certified_tol},
             {"negative_type_holds", r.negative_type_holds},
             {"witness", simplex_to_json(r.witness, s)}};
    if (r.gap_exact) out["gap_exact"] = to_fraction_string(*r.gap_exact);
    return out;
}

Json bound_report_to_json(const BoundReport& r) {
    Json out{{"which", r.which == BoundReport::Which::direct ? "direct" : "combined"},
             {"p", r.p},
             {"gap_used", r.gap_used},
             {"n", r.n},
             {"c_n", rational_json(r.c_n)},
             {"lower_bound", r.lower_bound},
             {"applicable", true}};
    if (r.which == BoundReport::Which::direct) {
        out["scaled_diameter"] = rational_json(r.scaled_diam);
        out["rescale_factor"] = rational_json(r.rescale_factor);
    } else {
        out["diam_power_sum"] = r.diam_power_sum;
        Json comps = Json::array();
        for (const auto& c : r.components)
            comps.push_back(Json{{"name", c.name},
                                 {"points", c.points},
                                 {"diameter", c.diam},
                                 {"gap", c.gap}});
        out["components"] = std::move(comps);
    }
    return out;
}

Json check_report(const SemiMetricSpace& s, double p, double tol) {
    Json out = verdict_to_json(has_negative_type(s, p, tol));
    out["points"] = s.size();
    out["is_metric"] = s.is_metric();
    return out;
}

Json gap_report(const SemiMetricSpace& s, double p, const GapOptions& opts) {
    return gap_result_to_json(gap(s, p, opts), s);
}

Json supremal_report(const SemiMetricSpace& s, double p_max, double tol) {
    auto value = supremal_p(s, p_max, tol);
    Json out{{"p_max", p_max}, {"tol", tol}};
    if (value) {
        out["supremal_p"] = *value;
        out["finite"] = true;
    } else {
        out["supremal_p"] = "infinity";
        out["finite"] = false;
        out["note"] = "negative type still holds at p_max";
    }
    return out;
}

Json combine_report(const GluePlan& plan, const GapOptions& opts, bool emit_space,
                    bool emit_extremal) {
    CombinationSpace combo = build_combination(plan);
    double p = to_double(plan.p);

    Json out{{"p", rational_json(plan.p)},
             {"points", combo.space().size()},
             {"is_metric", combo.space().is_metric()},
             {"exact", combo.space().exact()}};

    Json glue = Json::array();
    for (int g : combo.glue_points()) glue.push_back(combo.space().label(g));
    out["glue_points"] = std::move(glue);
    if (!combo.renames().empty()) {
        Json renames = Json::array();
        for (const auto& [source, final_label] : combo.renames())
            renames.push_back(Json{{"component", source.component},
                                   {"original", source.original_label},
                                   {"final", final_label}});
        out["renames"] = std::move(renames);
    }
    if (emit_space) out["space"] = space_to_json(combo.space());

    Json comps = Json::array();
    std::vector<std::pair<WeightedSimplex, Rational>> witnesses;
    std::vector<double> gaps;
    bool all_exact = true, all_positive = true;
    Rational exact_sum(0);
    for (int ci = 0; ci < combo.component_count(); ++ci) {
        GapResult r = gap(combo.component(ci), p, opts);
        Json cj = gap_result_to_json(r, combo.component(ci));
        cj["name"] = combo.component_name(ci);
        cj["points"] = combo.component(ci).size();
        comps.push_back(std::move(cj));
        gaps.push_back(r.gap);
        all_positive = all_positive && r.gap > 0;
        if (r.gap_exact) {
            witnesses.emplace_back(r.witness, *r.gap_exact);
            if (*r.gap_exact > 0) exact_sum += Rational(1) / *r.gap_exact;
        } else {
            witnesses.emplace_back(r.witness, Rational(r.gap > 0 ? r.gap : 0.0));
            all_exact = false;
        }
    }
    out["components"] = std::move(comps);

    if (all_positive) {
        out["composed_gap"] = compose_gaps(gaps);
        if (all_exact) out["composed_gap_exact"] = to_fraction_string(Rational(1) / exact_sum);
        if (emit_extremal) {
            WeightedSimplex extremal = extremal_simplex(combo, witnesses);
            Json ej{{"simplex", simplex_to_json(extremal, combo.space())}};
            bool p_integral = p == std::floor(p) && p >= 0 && p <= 64;
            if (combo.space().exact() && p_integral) {
                Rational gval =
                    gamma_exact(combo.space(), extremal, static_cast<unsigned>(p));
                ej["gamma"] = rational_json(gval);
            } else {
                ej["gamma"] = gamma(combo.space(), extremal, p);
            }
            out["extremal"] = std::move(ej);
        }
    } else {
        out["composed_gap"] = nullptr;
        out["note"] = "a component gap is not strictly positive; the composition "
                      "formula does not apply";
    }
    return out;
}

namespace {

Json bound_for_space(const SemiMetricSpace& s, double p, const GapOptions& opts) {
    GapResult r = gap(s, p, opts);
    Json out;
    out["gap"] = gap_result_to_json(r, s);
    if (r.gap <= 0) {
        out["applicable"] = false;
        out["reason"] = "gap is not strictly positive at this p";
        return out;
    }
    try {
        Json b = bound_report_to_json(lower_bound_direct(s, p, r.gap));
        b["gap"] = std::move(out["gap"]);
        return b;
    } catch (const BoundInapplicableError& e) {
        out["applicable"] = false;
        out["reason"] = e.what();
        return out;
    } catch (const DomainError& e) {
        out["applicable"] = false;
        out["reason"] = e.what();
        return out;
    }
}

} // namespace

Json bound_report(const Json& doc, double p, const GapOptions& opts) {
    if (!is_plan_document(doc)) return bound_for_space(space_from_json(doc), p, opts);

    GluePlan plan = plan_from_json(doc);
    CombinationSpace combo = build_combination(plan);
    Json out;
    std::vector<std::pair<SemiMetricSpace, double>> inputs;
    Json comps = Json::array();
    for (int ci = 0; ci < combo.component_count(); ++ci) {
        GapResult r = gap(combo.component(ci), p, opts);
        inputs.emplace_back(combo.component(ci), r.gap);
        Json cj = gap_result_to_json(r, combo.component(ci));
        cj["name"] = combo.component_name(ci);
        comps.push_back(std::move(cj));
    }
    out["component_gaps"] = std::move(comps);
    try {
        BoundReport combined = lower_bound_combined(inputs, p);
        for (std::size_t ci = 0; ci < combined.components.size(); ++ci)
            combined.components[ci].name = combo.component_name(static_cast<int>(ci));
        out["combined"] = bound_report_to_json(combined);
    } catch (const DomainError& e) {
        out["combined"] = Json{{"applicable", false}, {"reason", e.what()}};
    }
    // the direct bound on the space this plan actually builds, for comparison
    out["direct_on_built"] = bound_for_space(combo.space(), p, opts);
    return out;
}

Json full_report(const Json& doc, double p, double p_max, double tol, const GapOptions& opts) {
    Json out;
    if (is_plan_document(doc)) {
        GluePlan plan = plan_from_json(doc);
        out["combine"] = combine_report(plan, opts, true, true);
        out["bound"] = bound_report(doc, p, opts);
        CombinationSpace combo = build_combination(plan);
        out["check"] = check_report(combo.space(), p, opts.type_tol);
        out["supremal"] = supremal_report(combo.space(), p_max, tol);
        return out;
    }
    SemiMetricSpace s = space_from_json(doc);
    out["check"] = check_report(s, p, opts.type_tol);
    out["gap"] = gap_report(s, p, opts);
    out["supremal"] = supremal_report(s, p_max, tol);
    out["bound"] = bound_report(doc, p, opts);
    return out;
}

} // namespace negtype
