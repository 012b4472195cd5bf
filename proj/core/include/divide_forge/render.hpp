#pragma once

// Text diagrams: the dual graph in DOT and a schematic SVG of the fiber.

#include <string>

#include "divide_forge/divide.hpp"
#include "divide_forge/fiber.hpp"

namespace dforge {

/// Undirected DOT multigraph: node c<i> per circle, edge p<j> per double point
/// (a self-loop for a self-crossing).
std::string emit_dot(const DualGraph& graph);

/// SVG 1.1 schematic: one ring (class "roundabout") per double point, one
/// curve (class "band") per divide edge colored by the boundary component on
/// its side, or a single ring (class "annulus") for the free loop.
std::string emit_svg(const FiberComplex& fiber);

}  // namespace dforge
