#pragma once

#include <vector>

#include "lattice_equi/geometry.hpp"

namespace lattice_equi {

/// One representative point for every face of the arrangement formed by all
/// cell boundaries (open 2-faces, open edges and vertices). Membership in any
/// of the given cells is constant on each face, so tests over these points
/// decide set relations between unions of the cells exactly.
std::vector<Point> arrangement_samples(const std::vector<OpenCell>& cells);

/// Exact test whether two relatively open cells share a point.
bool cells_intersect(const OpenCell& a, const OpenCell& b);

}  // namespace lattice_equi
