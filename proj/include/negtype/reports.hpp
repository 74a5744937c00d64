#pragma once

// JSON report assembly shared by the command line tool and the python
// bindings. Every analysis result serializes with its exact values (as
// "p/q" strings) next to decimal renderings.

#include "negtype/bounds.hpp"
#include "negtype/combine.hpp"
#include "negtype/json_io.hpp"
#include "negtype/negative_type.hpp"

namespace negtype {

Json verdict_to_json(const TypeVerdict& v);
Json gap_result_to_json(const GapResult& r, const SemiMetricSpace& s);
Json bound_report_to_json(const BoundReport& r);

Json check_report(const SemiMetricSpace& s, double p, double tol);
Json gap_report(const SemiMetricSpace& s, double p, const GapOptions& opts);
Json supremal_report(const SemiMetricSpace& s, double p_max, double tol);

/// Build the combination, analyze every component, compose the gaps and
/// construct the extremal simplex from the component witnesses.
Json combine_report(const GluePlan& plan, const GapOptions& opts, bool emit_space,
                    bool emit_extremal);

/// Direct bound for a space document; combined (plus direct-on-built) for a
/// plan document. Inapplicable bounds are reported, not thrown.
Json bound_report(const Json& doc, double p, const GapOptions& opts);

/// Everything applicable to the document in one report.
Json full_report(const Json& doc, double p, double p_max, double tol, const GapOptions& opts);

} // namespace negtype
