#pragma once

#include <vector>

#include "twodom/graph.hpp"

namespace twodom {

// Counterexample family G(t; k_1..k_t): disjoint cycles C_{3k_i+1}, a hub w
// joined to one fixed vertex per cycle, then a pendant leaf attached to every
// remaining degree-2 vertex. Achieves gamma2 - a = ceil(t/3) >= 2.
struct FamilyParams {
    int t = 0;
    std::vector<int> ks;  // k_1..k_t, each >= 1
};

void validate_params(const FamilyParams& p);  // throws precondition_error

// Vertex id layout: cycle i occupies a consecutive id run (its smallest id is
// the hub attachment point), then the hub, then the pendant leaves in
// ascending order of their support vertex.
Graph family_graph(const FamilyParams& p);

long long family_vertex_count(const FamilyParams& p);  // 6*sum(k) + t + 1
long long family_edge_count(const FamilyParams& p);    // 2*sum(3k+1)

long long closed_a(const FamilyParams& p);       // 4*sum(k) + floor(2t/3)
long long closed_gamma2(const FamilyParams& p);  // 4*sum(k) + t
long long closed_gap(const FamilyParams& p);     // ceil(t/3)

// Smallest all-ones parameter vector whose gap exceeds c0 + 1; `verified`
// additionally confirms the closed forms against the generated graph when the
// instance is small enough to solve exactly.
struct GapWitness {
    FamilyParams params;
    long long gap = 0;
    bool verified = false;
};

GapWitness theorem3_witness(int c0);  // c0 >= 1

}  // namespace twodom
