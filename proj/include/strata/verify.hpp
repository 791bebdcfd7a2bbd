#pragma once

#include "strata/point_set.hpp"

#include <string>
#include <vector>

namespace strata {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Runs the invariant suite on one point set: local Delaunay property, depth labels
/// against their breadth-first definition, layer structure, component bound, level
/// count, sampled insertion depths against the contours, contour nesting and the
/// result-document round trip. `samples` is the approximate number of grid samples.
std::vector<CheckResult> verify_point_set(const PointSet& s, std::size_t samples = 1000);

} // namespace strata
