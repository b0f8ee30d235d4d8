#pragma once

#include <string>

#include "ixc/problem.hpp"

namespace ixc {

/// Undirected DOT rendering of the interference structure: one node per
/// message, solid alignment edges, and one auxiliary point node per distinct
/// (demand, interference) constraint joined to its members by dashed spokes.
/// Constraints with empty interference draw nothing.
std::string problem_to_dot(const Problem& p);

}  // namespace ixc
