#include "negtype/json_io.hpp"

#include "negtype/errors.hpp"
#include "support/fixtures.hpp"

#include <doctest.h>

using namespace negtype;
namespace fx = negtype::testing;

TEST_CASE("space documents: matrix form with rational strings") {
    auto doc = parse_json_text(R"({
        "labels": ["a", "b", "c"],
        "matrix": [[0, "1/2", 1], ["1/2", 0, "3/2"], [1, "3/2", 0]]
    })");
    auto s = space_from_json(doc);
    CHECK(s.exact());
    CHECK(s.dist(0, 1) == Rational(1, 2));
    CHECK(s.is_metric());
}

TEST_CASE("space documents: graph form") {
    auto doc = parse_json_text(R"({
        "graph": {"vertices": ["a", "b", "c"],
                  "edges": [["a", "b", 1], ["b", "c", "1/2"]]}
    })");
    auto s = space_from_json(doc);
    CHECK(s.dist(s.index_of("a"), s.index_of("c")) == Rational(3, 2));
}

TEST_CASE("scalar exactness rules") {
    bool exact = true;
    CHECK(scalar_from_json(Json(3), exact) == Rational(3));
    CHECK(exact);
    CHECK(scalar_from_json(Json(2.0), exact) == Rational(2)); // integral float stays exact
    CHECK(exact);
    CHECK(scalar_from_json(Json("0.3"), exact) == Rational(3, 10));
    CHECK(exact);
    scalar_from_json(Json(0.3), exact); // non-integral numbers are floating
    CHECK_FALSE(exact);
}

TEST_CASE("round trip: emitted spaces re-parse equal") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        auto s = fx::random_metric_space(rng, 6);
        auto back = space_from_json(space_to_json(s));
        REQUIRE(back.size() == s.size());
        CHECK(back.exact() == s.exact());
        for (int i = 0; i < s.size(); ++i) {
            CHECK(back.label(i) == s.label(i));
            for (int j = 0; j < s.size(); ++j) CHECK(back.dist(i, j) == s.dist(i, j));
        }
    }
    // floating spaces round-trip through shortest-representation doubles
    auto base = fx::random_metric_space(rng, 5);
    auto f = power_transform(base, 0.5);
    auto back = space_from_json(space_to_json(f));
    CHECK_FALSE(back.exact());
    for (int i = 0; i < f.size(); ++i)
        for (int j = 0; j < f.size(); ++j) CHECK(back.dist_d(i, j) == f.dist_d(i, j));
}

TEST_CASE("simplex documents round trip") {
    auto s = space_from_graph(fx::g_graph());
    auto doc = parse_json_text(R"({
        "a": [["x", "21/43"], ["v3", "6/43"], ["v4", "6/43"], ["v7", "5/43"], ["v8", "5/43"]],
        "b": [["v2", "14/43"], ["v5", "14/43"], ["v6", "15/43"]]
    })");
    auto d = simplex_from_json(doc, s);
    CHECK(gamma_exact(s, d, 1) == Rational(5, 43));
    auto back = simplex_from_json(simplex_to_json(d, s), s);
    CHECK(back == d);
}

TEST_CASE("plan documents") {
    auto doc = parse_json_text(R"({
        "p": 1,
        "components": [
            {"name": "cycle", "space": {"graph": {"vertices": ["x","v2","v3","v4","v5"],
                "edges": [["x","v2",1],["v2","v3",1],["v3","v4",1],["v4","v5",1],["v5","x",1]]}}},
            {"name": "star", "space": {"graph": {"vertices": ["v9","v6","v7","v8"],
                "edges": [["v9","v6",1],["v6","v7",1],["v6","v8",1]]}}}
        ],
        "steps": [["cycle", "x", "star", "v9"]]
    })");
    CHECK(is_plan_document(doc));
    auto plan = plan_from_json(doc);
    CHECK(plan.p == Rational(1));
    auto combo = build_combination(plan);
    auto expected = space_from_graph(fx::g_graph());
    for (int i = 0; i < expected.size(); ++i)
        for (int j = 0; j < expected.size(); ++j)
            CHECK(combo.space().dist(combo.space().index_of(expected.label(i)),
                                     combo.space().index_of(expected.label(j))) ==
                  expected.dist(i, j));
}

TEST_CASE("malformed documents raise ValidationError") {
    CHECK_THROWS_WITH_AS(parse_json_text("{nope"), doctest::Contains("malformed JSON"),
                         ValidationError);
    CHECK_THROWS_AS(space_from_json(parse_json_text("{}")), ValidationError);
    CHECK_THROWS_AS(space_from_json(parse_json_text(R"({"labels":["a"],"matrix":"x"})")),
                    ValidationError);
    auto s = space_from_graph(fx::star_graph());
    CHECK_THROWS_AS(simplex_from_json(parse_json_text(R"({"a": []})"), s), ValidationError);
    CHECK_THROWS_AS(
        simplex_from_json(parse_json_text(R"({"a": [["nope", 1]], "b": [["v6", 1]]})"), s),
        ValidationError);
}

TEST_CASE("digest is stable") {
    CHECK(content_digest("abc") == content_digest("abc"));
    CHECK(content_digest("abc") != content_digest("abd"));
}
