#pragma once

#include <cstdint>

#include "twodom/graph.hpp"

namespace twodom {

// attempts per instance for rejection-filtered classes before giving up
inline constexpr int kRejectionCap = 10000;

// All generators are deterministic functions of their arguments; the RNG is a
// fixed 64-bit algorithm so outputs are stable across platforms and releases.

Graph random_tree(int n, uint64_t seed);  // uniform labeled tree, n >= 1

// grow from a single vertex by attaching either a pendant vertex or a small
// cycle (length 3..6) at a random existing vertex
Graph random_cactus(int n, double cycle_bias, uint64_t seed);  // n >= 1

Graph random_bipartite_cactus(int n, uint64_t seed);  // even cycles only

// rejection-filtered to satisfy all outer-cycle hypotheses (no sun at an outer
// cycle, exit degree >= 4 on outer 4-cycles); throws generation_error with the
// acceptance rate when kRejectionCap attempts fail
Graph random_bipartite_cactus_theorem5(int n, uint64_t seed);

// every edge lies on a cycle (no bridges): built from even cycles only;
// feasible exactly when n-1 is a sum of odd numbers >= 3, so n must avoid
// {2, 3, 5}; infeasible n throws generation_error
Graph random_bipartite_cactus_prop2(int n, uint64_t seed);

Graph random_min_degree3(int n, uint64_t seed);  // connected, min degree >= 3, n >= 4

// random spanning tree plus independent extra edges with probability edge_prob
Graph random_connected_graph(int n, double edge_prob, uint64_t seed);  // n >= 1

}  // namespace twodom
