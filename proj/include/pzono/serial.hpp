#pragma once

// Single-threaded reference versions of the OpenMP kernels. Tests compare the
// parallel kernels against these; the benchmark target times both.

#include <cstddef>
#include <span>
#include <vector>

#include "pzono/hardness.hpp"
#include "pzono/oracles.hpp"
#include "pzono/splitting.hpp"

namespace pzono::serial {

CornerResult corner_min(const PolyZonotope& pz1d, std::size_t max_factors = kCornerFactorCap);

GridResult grid_search(const PolyZonotope& pz1d, std::size_t points_per_dim, std::size_t max_factors = kGridFactorCap);

long bipartization_brute(const Graph& g);

std::vector<SplitNode> expand_level(std::span<const SplitNode> nodes, const SplitStrategy& strategy);

}  // namespace pzono::serial
