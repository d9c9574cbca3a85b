#pragma once

#include <vector>

#include "hermia/digraph.hpp"

namespace hermia::detail {

/// Colour refinement run jointly over digraphs of equal order. Initial
/// colours are (digon degree, out-degree, in-degree); each round appends the
/// sorted multiset of (pair state, neighbour colour). Colour ids are ranks
/// of signatures, so they are comparable across the inputs and invariant
/// under relabelling.
std::vector<std::vector<int>> refine_colours(const std::vector<const Digraph*>& gs);

}  // namespace hermia::detail
