#pragma once

#include "negtype/rational.hpp"
#include "negtype/simplex.hpp"
#include "negtype/space.hpp"

#include <string>
#include <utility>
#include <vector>

namespace negtype {

/// One glue instruction: identify left_point of an already-built component
/// with right_point of a fresh component.
struct GlueStep {
    std::string left, left_point, right, right_point;
};

/// An ordered recipe for building a combination space: glue the named
/// component spaces together one point at a time, joining distances
/// additively in the p-th power metric.
struct GluePlan {
    std::vector<std::pair<std::string, SemiMetricSpace>> components;
    std::vector<GlueStep> steps;
    Rational p = 1;
};

/// Where a point of the combined space came from.
struct PointSource {
    std::string component;
    std::string original_label;
};

/// A combination space together with enough construction history to reverse
/// it: per-point provenance, the per-component point sets, and for every
/// glue step the glue point and the extent of the two sides.
class CombinationSpace {
public:
    const SemiMetricSpace& space() const { return space_; }
    const Rational& exponent() const { return p_; }

    int component_count() const { return static_cast<int>(components_.size()); }
    const std::string& component_name(int c) const { return names_[static_cast<std::size_t>(c)]; }
    const SemiMetricSpace& component(int c) const { return components_[static_cast<std::size_t>(c)]; }
    /// Final-space index of component c's k-th point.
    const std::vector<int>& component_points(int c) const {
        return component_points_[static_cast<std::size_t>(c)];
    }

    const std::vector<std::vector<PointSource>>& provenance() const { return provenance_; }
    const std::vector<int>& glue_points() const { return glue_points_; }
    /// (component, original label) -> final label renames applied to avoid collisions.
    const std::vector<std::pair<PointSource, std::string>>& renames() const { return renames_; }

    struct Step {
        int glue_point = 0;       // final index of the shared point
        int points_before = 0;    // final points [0, points_before) form the left side
        int component = 0;        // plan index of the component glued on
    };
    const std::vector<Step>& steps() const { return steps_; }

private:
    friend CombinationSpace build_combination(const GluePlan& plan);
    SemiMetricSpace space_;
    Rational p_ = 1;
    std::vector<std::string> names_;
    std::vector<SemiMetricSpace> components_;
    std::vector<std::vector<int>> component_points_;
    std::vector<std::vector<PointSource>> provenance_;
    std::vector<int> glue_points_;
    std::vector<std::pair<PointSource, std::string>> renames_;
    std::vector<Step> steps_;
};

/// Build the combination space described by a plan. Components embed
/// isometrically; distances across a glue point add in the p-th power
/// metric. Colliding labels from later components are renamed with a
/// component prefix and the rename recorded.
CombinationSpace build_combination(const GluePlan& plan);

/// Split a simplex on the combined space into one simplex per component by
/// reversing the construction: points outside a component collapse onto the
/// glue point, keeping weight and team. Output order matches the plan's
/// component order; each simplex is indexed into its own component space.
std::vector<WeightedSimplex> simplex_components(const CombinationSpace& c,
                                                const WeightedSimplex& d);

/// Gap of a combination from the gaps of its components:
/// (sum of reciprocals)^-1. All inputs must be positive.
Rational compose_gaps(const std::vector<Rational>& gaps);
double compose_gaps(const std::vector<double>& gaps);

/// Gap of a weighted tree at p = 1: the reciprocal of the sum of reciprocal
/// edge lengths. The graph must be a tree.
Rational tree_gap(const WeightedGraph& g);

/// Build a normalized simplex on the combined space whose gamma equals the
/// composition of the witness gaps, from normalized (near-)extremal
/// witnesses, one per component. Witness simplices are indexed into their
/// component spaces.
WeightedSimplex extremal_simplex(const CombinationSpace& c,
                                 const std::vector<std::pair<WeightedSimplex, Rational>>& witnesses);

} // namespace negtype
