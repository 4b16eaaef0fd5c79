#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "twodom/graph.hpp"

namespace twodom {

// ---- cactus recognition and block structure ---------------------------------
//
// A cactus is a connected graph whose cycles are pairwise edge-disjoint;
// equivalently every biconnected block is a single edge or a chordless cycle.

struct CactusDecomposition {
    std::vector<std::vector<int>> cycle_blocks;  // each in cyclic order, canonical start
    std::vector<std::pair<int, int>> bridges;    // canonical u<v, sorted
    std::vector<int> cut_vertices;               // ascending
    // block-cut incidence: blocks are indexed cycle_blocks first, then bridges,
    // in that order; block_cuts[i] lists the cut vertices lying on block i
    std::vector<std::vector<int>> block_cuts;
};

bool is_cactus(const Graph& g);                  // false for disconnected input
CactusDecomposition decompose_cactus(const Graph& g);  // throws structure_error otherwise

// all bridge edges (canonical u<v), for arbitrary graphs
std::set<std::pair<int, int>> bridge_edges(const Graph& g);

bool is_bipartite(const Graph& g);

// ---- exit vertices, outer cycles, suns ---------------------------------------
//
// For cycles C != C' of a cactus, the vertex of C closest to C' is unique; it
// is an exit vertex of C. A cycle with at most one exit vertex is outer (the
// unique cycle of a unicyclic cactus has no exits and counts as outer). An
// outer cycle carries a sun when every cycle vertex apart from the exit vertex
// has exactly one pendant leaf; with no exit vertex, when at most one cycle
// vertex lacks exactly one pendant leaf.

struct CycleReport {
    std::vector<int> cycle;      // cyclic order
    std::set<int> exit_vertices;
    bool is_outer = false;
    bool has_sun = false;
    int length = 0;
};

// cycle must match a cycle block of the decomposition (any rotation/direction)
std::set<int> exit_vertices(const Graph& g, const std::vector<int>& cycle);
std::vector<CycleReport> outer_cycles(const Graph& g);  // reports every cycle block
bool has_sun(const Graph& g, const CycleReport& report);  // requires report.is_outer

struct Theorem5Hypotheses {
    bool connected = false;
    bool bipartite = false;
    bool cactus = false;
    bool no_sun_at_outer = false;              // vacuous for acyclic/non-cactus input
    bool outer_4cycle_exit_degree_ok = false;  // every outer 4-cycle's exit vertex has deg >= 4
    bool all = false;
};

Theorem5Hypotheses theorem5_hypotheses(const Graph& g);

// ---- local features consumed by the rewrite rules -----------------------------

enum class FeatureKind {
    strong_support,            // vertex with >= 2 pendant leaves
    pendant_p4,                // path u1 u2 u3 v, deg(u1)=1, deg(u2)=deg(u3)=2
    induced_p5_deg2,           // induced path v u1 u2 u3 w with deg(u1)=deg(u2)=deg(u3)=2
    subdivided_star_at_cycle,  // spider with s legs of length 2 and t pendant leaves
    hanging_tree               // maximal tree attachment at a vertex
};

std::string feature_kind_name(FeatureKind k);

struct Feature {
    FeatureKind kind;
    // anchor roles, in order, by kind:
    //   strong_support:           support, leaf...
    //   pendant_p4:               u1, u2, u3, v
    //   induced_p5_deg2:          v, u1, u2, u3, w        (normalized: u1 < u3)
    //   subdivided_star_at_cycle: center, mid_1, tip_1, ..., mid_s, tip_s, leaf...
    //   hanging_tree:             root, tree vertices ascending (root excluded)
    std::vector<int> anchors;
    // params by kind: strong_support {leaves}; subdivided_star {s, t, on_cycle_deg2};
    // hanging_tree {h, radius}
    std::map<std::string, int> params;
};

std::vector<Feature> find_strong_supports(const Graph& g);
std::vector<Feature> find_pendant_p4(const Graph& g);
std::vector<Feature> find_induced_p5_deg2(const Graph& g);
std::vector<Feature> find_subdivided_stars(const Graph& g);  // reports s >= 1

// every maximal tree attachment anywhere in the graph (host must stay nontrivial)
std::vector<Feature> find_hanging_trees(const Graph& g);
// the attachments rooted on a given cycle block, per the block-structure report
std::vector<Feature> hanging_trees(const Graph& g, const std::vector<int>& cycle);

// true iff the feature still describes g exactly (guards against stale features)
bool revalidate(const Graph& g, const Feature& f);

}  // namespace twodom
