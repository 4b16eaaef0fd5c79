#include "twodom/family.hpp"

#include <cassert>
#include <numeric>
#include <string>

#include "twodom/errors.hpp"
#include "twodom/invariants.hpp"
#include "twodom/structure.hpp"

namespace twodom {

namespace {

long long k_sum(const FamilyParams& p) {
    return std::accumulate(p.ks.begin(), p.ks.end(), 0LL);
}

}  // namespace

void validate_params(const FamilyParams& p) {
    if (p.t < 4) throw precondition_error("family: t must be at least 4, got " + std::to_string(p.t));
    if (static_cast<int>(p.ks.size()) != p.t)
        throw precondition_error("family: expected " + std::to_string(p.t) + " cycle parameters, got " +
                                 std::to_string(p.ks.size()));
    for (int k : p.ks)
        if (k < 1) throw precondition_error("family: every k_i must be at least 1, got " + std::to_string(k));
}

Graph family_graph(const FamilyParams& p) {
    validate_params(p);
    GraphBuilder b;
    std::vector<int> cycle_offsets;
    int next = 0;
    for (int k : p.ks) {
        int len = 3 * k + 1;
        cycle_offsets.push_back(next);
        for (int j = 0; j < len; ++j) b.add_edge(next + j, next + (j + 1) % len);
        next += len;
    }
    int hub = next++;
    for (int off : cycle_offsets) b.add_edge(hub, off);

    Graph core = b.build();
    for (int v = 0; v < hub; ++v)
        if (core.degree(v) == 2) b.add_edge(next++, v);
    Graph g = b.build();

    assert(g.vertex_count() == family_vertex_count(p));
    assert(g.edge_count() == family_edge_count(p));
    assert(g.degree(hub) == p.t);
    return g;
}

long long family_vertex_count(const FamilyParams& p) {
    validate_params(p);
    return 6 * k_sum(p) + p.t + 1;
}

long long family_edge_count(const FamilyParams& p) {
    validate_params(p);
    return 6 * k_sum(p) + 2LL * p.t;
}

long long closed_a(const FamilyParams& p) {
    validate_params(p);
    return 4 * k_sum(p) + (2LL * p.t) / 3;
}

long long closed_gamma2(const FamilyParams& p) {
    validate_params(p);
    return 4 * k_sum(p) + p.t;
}

long long closed_gap(const FamilyParams& p) {
    validate_params(p);
    return (p.t + 2) / 3;  // ceil(t/3)
}

GapWitness theorem3_witness(int c0) {
    if (c0 < 1) throw precondition_error("theorem3_witness: c0 must be positive");
    GapWitness w;
    w.params.t = 3 * (c0 + 1) + 1;
    w.params.ks.assign(w.params.t, 1);
    w.gap = closed_gap(w.params);
    w.verified = w.gap > c0 + 1;
    if (w.verified && family_vertex_count(w.params) <= 5000) {
        Graph g = family_graph(w.params);
        w.verified = annihilation(g).a == closed_a(w.params) &&
                     gamma2_cactus(g).gamma2 == closed_gamma2(w.params);
    }
    return w;
}

}  // namespace twodom
