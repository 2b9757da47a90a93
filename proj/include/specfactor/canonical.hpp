#pragma once

#include <string>

#include "specfactor/graph.hpp"

namespace specfactor {

// Canonical form for isomorphism testing: the lexicographically minimal
// upper-triangle adjacency bit string over all vertex orderings, found by
// branch-and-bound (per-position column minimization, twin collapsing, and
// incumbent pruning). Equal codes <=> isomorphic graphs.
// Capacity-capped at n <= 10: refuses larger input rather than degrade.
std::string canonical_code(const Graph& g);

// canonical_code equality; both graphs must be within the n <= 10 cap.
bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace specfactor
