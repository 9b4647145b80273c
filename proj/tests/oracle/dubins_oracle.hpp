#pragma once

#include <optional>

#include "dubins_rrt/dubins.hpp"
#include "dubins_rrt/geometry.hpp"

// Test-only reference computations. Nothing here calls the closed-form word
// solvers or the library's motion primitives.
namespace dubins_rrt::oracle {

/// Endpoint of a unit-radius word from (0, 0, alpha), computed by rotating
/// about explicit circle centres.
Pose replay_unit(DubinsWord word, double alpha, double t, double p, double q);

/// Shortest nondimensional length of one word found by numeric search over
/// (t, p) with q fixed by the heading balance, refined by Newton iterations.
std::optional<double> word_length(DubinsWord word, const CanonicalProblem& cp);

/// Minimum of word_length over all six words.
double shortest_length(const CanonicalProblem& cp);

/// Euclidean distance from p to the polygon region (zero inside), by edge projection.
double distance_to_polygon(Point2 p, const Polygon& poly);

}  // namespace dubins_rrt::oracle
