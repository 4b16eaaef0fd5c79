#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "twodom/errors.hpp"
#include "twodom/family.hpp"
#include "twodom/invariants.hpp"
#include "twodom/structure.hpp"

using namespace twodom;

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(validate_params({3, {1, 1, 1}}), precondition_error);
    CHECK_THROWS_AS(validate_params({4, {1, 1, 1}}), precondition_error);     // wrong arity
    CHECK_THROWS_AS(validate_params({4, {1, 0, 1, 1}}), precondition_error);  // k >= 1
    CHECK_THROWS_AS(validate_params({0, {}}), precondition_error);
    CHECK_NOTHROW(validate_params({4, {1, 1, 1, 1}}));
    CHECK_NOTHROW(validate_params({5, {3, 1, 2, 1, 7}}));
}

TEST_CASE("smallest member: t = 4, all k = 1") {
    FamilyParams p{4, {1, 1, 1, 1}};
    Graph g = family_graph(p);
    CHECK(g.vertex_count() == 29);
    CHECK(g.edge_count() == 32);
    CHECK(family_vertex_count(p) == 29);
    CHECK(family_edge_count(p) == 32);
    CHECK(is_cactus(g));
    CHECK(is_bipartite(g));
    CHECK(g.leaf_count() == 12);

    // id layout: four C4 cores on 0..15, hub 16 joined to each cycle's first id
    CHECK(g.degree(16) == 4);
    for (int c : {0, 4, 8, 12}) CHECK(g.has_edge(16, c));

    CHECK(annihilation(g).a == 18);
    CHECK(closed_a(p) == 18);
    CHECK(gamma2_cactus(g).gamma2 == 20);
    CHECK(closed_gamma2(p) == 20);
    CHECK(closed_gap(p) == 2);

    auto r = conjecture_check(g);
    CHECK(r.gap == 2);
    CHECK_FALSE(r.holds);
}

TEST_CASE("headline member: t = 4, k = (1,2,3,4)") {
    FamilyParams p{4, {1, 2, 3, 4}};
    Graph g = family_graph(p);
    CHECK(g.vertex_count() == 65);
    CHECK(g.edge_count() == 68);
    CHECK(annihilation(g).a == 42);
    CHECK(gamma2_cactus(g).gamma2 == 44);
    CHECK(closed_a(p) == 42);
    CHECK(closed_gamma2(p) == 44);
    CHECK(closed_gap(p) == 2);
}

TEST_CASE("closed forms match exact computation across t") {
    for (int t = 4; t <= 10; ++t) {
        FamilyParams p{t, std::vector<int>(t, 1)};
        Graph g = family_graph(p);
        CHECK(g.vertex_count() == family_vertex_count(p));
        CHECK(g.edge_count() == family_edge_count(p));
        CHECK(closed_a(p) == 4 * t + (2 * t) / 3);
        CHECK(closed_gamma2(p) == 5 * t);
        CHECK(closed_gap(p) == (t + 2) / 3);
        CHECK(annihilation(g).a == closed_a(p));
        CHECK(gamma2_cactus(g).gamma2 == closed_gamma2(p));
        CHECK(closed_gamma2(p) - closed_a(p) == closed_gap(p));
    }
}

TEST_CASE("closed forms with mixed k vectors") {
    for (const auto& ks : std::vector<std::vector<int>>{
             {2, 1, 1, 1}, {1, 3, 1, 1}, {2, 2, 2, 2}, {1, 1, 2, 3, 1}, {4, 1, 1, 1, 1, 1}}) {
        FamilyParams p{static_cast<int>(ks.size()), ks};
        Graph g = family_graph(p);
        long long sum = std::accumulate(ks.begin(), ks.end(), 0LL);
        CHECK(g.vertex_count() == 6 * sum + p.t + 1);
        CHECK(annihilation(g).a == closed_a(p));
        CHECK(gamma2_cactus(g).gamma2 == closed_gamma2(p));
        CHECK(gamma2_cactus(g).gamma2 - annihilation(g).a == closed_gap(p));
    }
}

TEST_CASE("bipartite exactly when every k is odd") {
    CHECK(is_bipartite(family_graph({4, {1, 1, 1, 1}})));
    CHECK(is_bipartite(family_graph({4, {1, 3, 1, 5}})));
    CHECK_FALSE(is_bipartite(family_graph({4, {2, 1, 1, 1}})));  // C7 core is odd
    CHECK_FALSE(is_bipartite(family_graph({5, {1, 1, 4, 1, 1}})));
}

TEST_CASE("every member defeats the conjecture and carries suns") {
    for (int t = 4; t <= 7; ++t) {
        FamilyParams p{t, std::vector<int>(t, 1)};
        Graph g = family_graph(p);
        CHECK_FALSE(conjecture_check(g).holds);
        auto h = theorem5_hypotheses(g);
        CHECK(h.cactus);
        CHECK_FALSE(h.no_sun_at_outer);
        CHECK_FALSE(h.all);
    }
}

TEST_CASE("gap grows without bound: witnesses for each c0") {
    auto w = theorem3_witness(1);
    CHECK(w.params.t == 7);
    CHECK(w.gap == 3);
    CHECK(w.gap > 2);
    CHECK(w.verified);

    w = theorem3_witness(2);
    CHECK(w.params.t == 10);
    CHECK(w.gap == 4);
    CHECK(w.verified);

    w = theorem3_witness(3);
    CHECK(w.params.t == 13);
    CHECK(w.gap == 5);
    CHECK(w.verified);

    for (int c0 = 1; c0 <= 6; ++c0) {
        auto wit = theorem3_witness(c0);
        CHECK(wit.gap > c0 + 1);
        CHECK(closed_gap(wit.params) == wit.gap);
        for (int k : wit.params.ks) CHECK(k == 1);
    }

    CHECK_THROWS_AS(theorem3_witness(0), precondition_error);
}

TEST_CASE("construction is deterministic") {
    FamilyParams p{5, {2, 1, 3, 1, 1}};
    CHECK(family_graph(p) == family_graph(p));
}
