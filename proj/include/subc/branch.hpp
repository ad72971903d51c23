#pragma once

#include "subc/curve.hpp"
#include "subc/series.hpp"

#include <optional>
#include <vector>

namespace subc {

// Truncated power-series parametrization of the unique branch of a smooth
// curve at a smooth rational point. coordinate_series[j] is the series of
// ambient coordinate j in the local parameter; the chart coordinate is the
// constant series 1.
struct LocalBranch {
    ProjectivePoint center;
    int chart;
    PolyQ uniformizer;  // homogeneous linear form composing to order exactly 1
    std::vector<SeriesQ> coordinate_series;
    int truncation_order;
};

// Order-by-order Newton lifting of the branch. The uniformizer is chosen
// automatically: ambient coordinate sections first, then seeded random
// rational combinations.
LocalBranch local_branch(const CompleteIntersectionCurve& curve, const ProjectivePoint& point,
                         int order, unsigned seed = 12345u);

// Same, for any one-dimensional intersection of ambient_dim - 1 forms (no
// genus bookkeeping required, e.g. a line or a plane section of a surface).
LocalBranch local_branch(int ambient_dim, const std::vector<PolyQ>& forms,
                         const ProjectivePoint& point, int order, unsigned seed = 12345u);

// Substitutes the branch into a homogeneous form. nullopt means the composed
// series vanishes up to the truncation order ("order >= N+1").
SeriesQ compose(const PolyQ& form, const LocalBranch& branch);
std::optional<int> vanishing_order(const PolyQ& form, const LocalBranch& branch);

}  // namespace subc
