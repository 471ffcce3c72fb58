#pragma once

#include <cstdint>
#include <span>

#include "atgraph/graph.hpp"

namespace atgraph {

struct CoeffOptions {
  // See DiffOptions::split_depth; same prefix-splitting scheme.
  int split_depth = 12;
};

// Exact coefficient of prod_v x_v^{targets[v]} in the graph polynomial
// prod_{uv in E, u<v} (x_u - x_v), edges in sorted order. Backtracks over
// edges choosing the smaller endpoint (sign +) or the larger one (sign -),
// capping each vertex at its target and abandoning a branch when a target
// is no longer reachable from the remaining incident edges. Requires
// sum(targets) == |E|. OpenMP-parallel when enabled.
std::int64_t monomial_coefficient(const Graph& g, std::span<const int> targets,
                                  const CoeffOptions& opts = {});

// Serial reference kernel.
std::int64_t monomial_coefficient_serial(const Graph& g,
                                         std::span<const int> targets);

}  // namespace atgraph
