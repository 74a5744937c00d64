#include "negtype/json_io.hpp"

#include "negtype/errors.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

namespace negtype {

Rational scalar_from_json(const Json& j, bool& exact) {
    if (j.is_string()) {
        auto parsed = parse_rational(j.get<std::string>());
        if (!parsed)
            throw ValidationError("cannot parse scalar string '" + j.get<std::string>() + "'");
        return *parsed;
    }
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Rational(std::uint64_t{j.get<std::uint64_t>()});
    if (j.is_number_float()) {
        double v = j.get<double>();
        if (v == std::floor(v) && std::abs(v) < 1e15) return Rational(static_cast<long long>(v));
        exact = false;
        return Rational(v);
    }
    throw ValidationError("expected a number or a rational string, got " + std::string(j.type_name()));
}

SemiMetricSpace space_from_json(const Json& doc) {
    if (!doc.is_object()) throw ValidationError("space document must be a JSON object");
    if (doc.contains("graph")) {
        const Json& g = doc.at("graph");
        WeightedGraph graph;
        if (!g.contains("vertices") || !g.contains("edges"))
            throw ValidationError("graph document needs 'vertices' and 'edges'");
        for (const auto& v : g.at("vertices")) graph.vertices.push_back(v.get<std::string>());
        bool exact = true;
        for (const auto& e : g.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw ValidationError("each edge must be [u, v, length]");
            graph.edges.push_back(
                {e[0].get<std::string>(), e[1].get<std::string>(), scalar_from_json(e[2], exact)});
        }
        graph.exact_lengths = exact;
        return space_from_graph(graph);
    }
    if (!doc.contains("labels") || !doc.contains("matrix"))
        throw ValidationError("space document needs 'labels' and 'matrix' (or 'graph')");
    std::vector<std::string> labels;
    for (const auto& l : doc.at("labels")) labels.push_back(l.get<std::string>());
    std::vector<std::vector<Rational>> matrix;
    bool exact = true;
    for (const auto& row : doc.at("matrix")) {
        std::vector<Rational> r;
        for (const auto& entry : row) r.push_back(scalar_from_json(entry, exact));
        matrix.push_back(std::move(r));
    }
    return SemiMetricSpace::from_matrix(std::move(labels), matrix, exact, true);
}

namespace {

Json scalar_to_json(const Rational& q, bool exact) {
    if (!exact) return Json(to_double(q));
    if (is_integer(q) && numerator(q) <= Int(std::numeric_limits<std::int64_t>::max()) &&
        numerator(q) >= Int(std::numeric_limits<std::int64_t>::min()))
        return Json(numerator(q).convert_to<std::int64_t>());
    return Json(to_fraction_string(q));
}

} // namespace

Json space_to_json(const SemiMetricSpace& s) {
    Json doc;
    doc["labels"] = s.labels();
    Json matrix = Json::array();
    for (int i = 0; i < s.size(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < s.size(); ++j) row.push_back(scalar_to_json(s.dist(i, j), s.exact()));
        matrix.push_back(std::move(row));
    }
    doc["matrix"] = std::move(matrix);
    return doc;
}

WeightedSimplex simplex_from_json(const Json& doc, const SemiMetricSpace& s) {
    if (!doc.is_object() || !doc.contains("a") || !doc.contains("b"))
        throw ValidationError("simplex document needs teams 'a' and 'b'");
    bool exact = true;
    auto team = [&](const Json& t) {
        std::vector<WeightedPoint> out;
        for (const auto& entry : t) {
            if (!entry.is_array() || entry.size() != 2)
                throw ValidationError("each simplex entry must be [label, weight]");
            out.push_back({s.index_of(entry[0].get<std::string>()),
                           scalar_from_json(entry[1], exact)});
        }
        return out;
    };
    return WeightedSimplex(team(doc.at("a")), team(doc.at("b")));
}

Json simplex_to_json(const WeightedSimplex& d, const SemiMetricSpace& s) {
    auto team = [&](const std::vector<WeightedPoint>& t) {
        Json out = Json::array();
        for (const auto& e : t)
            out.push_back(Json::array({s.label(e.point), scalar_to_json(e.weight, true)}));
        return out;
    };
    return Json{{"a", team(d.a_team())}, {"b", team(d.b_team())}};
}

GluePlan plan_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("components"))
        throw ValidationError("plan document needs a 'components' array");
    GluePlan plan;
    if (doc.contains("p")) {
        bool exact = true;
        plan.p = scalar_from_json(doc.at("p"), exact);
    }
    for (const auto& comp : doc.at("components")) {
        if (!comp.contains("name") || !comp.contains("space"))
            throw ValidationError("each plan component needs 'name' and 'space'");
        plan.components.emplace_back(comp.at("name").get<std::string>(),
                                     space_from_json(comp.at("space")));
    }
    if (doc.contains("steps")) {
        for (const auto& step : doc.at("steps")) {
            if (!step.is_array() || step.size() != 4)
                throw ValidationError(
                    "each step must be [left, left_point, right, right_point]");
            plan.steps.push_back({step[0].get<std::string>(), step[1].get<std::string>(),
                                  step[2].get<std::string>(), step[3].get<std::string>()});
        }
    }
    return plan;
}

bool is_plan_document(const Json& doc) {
    return doc.is_object() && doc.contains("components");
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

std::string content_digest(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << "fnv1a64:" << std::hex << hash;
    return out.str();
}

} // namespace negtype
