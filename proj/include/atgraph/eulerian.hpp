#pragma once

#include <cstdint>
#include <span>

#include "atgraph/orientation.hpp"

namespace atgraph {

struct DiffResult {
  std::int64_t even_count = 0;  // includes the empty arc set
  std::int64_t odd_count = 0;
  std::int64_t diff() const { return even_count - odd_count; }
};

struct DiffOptions {
  int max_edges = 64;
  // Prefixes of this many arcs are enumerated as independent subtrees when
  // running parallel; partial counts are combined by integer addition, so
  // the result is identical to the serial kernel.
  int split_depth = 12;
};

// Counts even and odd Eulerian subdigraphs (arc subsets balanced at every
// vertex, connectivity not required) by depth-first search over arcs in
// sorted base-edge order, pruning a branch as soon as some endpoint's
// imbalance exceeds its remaining incident arcs. OpenMP-parallel when
// enabled; falls back to the serial kernel otherwise.
DiffResult eulerian_diff(const Orientation& d, const DiffOptions& opts = {});

// Serial reference kernel.
DiffResult eulerian_diff_serial(const Orientation& d,
                                const DiffOptions& opts = {});

// Serial kernel over a caller-chosen arc processing order (a permutation of
// arc indices); counts are independent of the order.
DiffResult eulerian_diff_serial_ordered(const Orientation& d,
                                        std::span<const int> arc_order,
                                        const DiffOptions& opts = {});

}  // namespace atgraph
