// Reference implementation of knot distance and vertex distortion by
// breadth-first search over the knot's edge graph, with comparisons done in
// boost rationals. Slow and simple on purpose: it shares nothing with the
// arc-position scan it is used to cross-check.
#pragma once

#include <cstddef>
#include <vector>

#include "latknot/distortion.hpp"
#include "latknot/knot.hpp"

namespace latknot {

/// Graph distance from `source` to every vertex, indexed like vertices().
std::vector<Coord> bfs_distances(const LatticeKnot& knot, std::size_t source);

/// Same contract as vertex_distortion (value and realizing pairs).
DistortionReport oracle_vertex_distortion(const LatticeKnot& knot);

}  // namespace latknot
