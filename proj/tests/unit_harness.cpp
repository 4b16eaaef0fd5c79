#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "twodom/errors.hpp"
#include "twodom/family.hpp"
#include "twodom/generators.hpp"
#include "twodom/rng.hpp"
#include "twodom/scan.hpp"
#include "twodom/structure.hpp"

using namespace twodom;

TEST_CASE("random trees") {
    CHECK(random_tree(1, 0).vertex_count() == 1);
    CHECK(random_tree(2, 0).edge_count() == 1);
    for (int i = 0; i < 60; ++i) {
        uint64_t seed = mix_seed(11, i);
        Rng rng(seed);
        int n = static_cast<int>(rng.uniform(1, 30));
        Graph g = random_tree(n, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_tree(g));
    }
    CHECK(random_tree(12, 5) == random_tree(12, 5));
    CHECK(random_tree(12, 5) != random_tree(12, 6));
    CHECK_THROWS_AS(random_tree(0, 1), precondition_error);
}

TEST_CASE("random cacti") {
    for (int i = 0; i < 120; ++i) {
        uint64_t seed = mix_seed(22, i);
        Rng rng(seed);
        int n = static_cast<int>(rng.uniform(1, 25));
        double bias = rng.uniform01();
        Graph g = random_cactus(n, bias, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_cactus(g));
    }
    CHECK(random_cactus(15, 0.5, 9) == random_cactus(15, 0.5, 9));
}

TEST_CASE("random bipartite cacti") {
    for (int i = 0; i < 80; ++i) {
        uint64_t seed = mix_seed(33, i);
        Rng rng(seed);
        int n = static_cast<int>(rng.uniform(1, 22));
        Graph g = random_bipartite_cactus(n, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_cactus(g));
        CHECK(is_bipartite(g));
    }
}

TEST_CASE("theorem5-filtered bipartite cacti satisfy every hypothesis") {
    for (int i = 0; i < 50; ++i) {
        uint64_t seed = mix_seed(44, i);
        Rng rng(seed);
        int n = static_cast<int>(rng.uniform(4, 16));
        Graph g = random_bipartite_cactus_theorem5(n, seed);
        CHECK(g.vertex_count() == n);
        auto h = theorem5_hypotheses(g);
        CHECK(h.all);
    }
}

TEST_CASE("prop2 cacti: even cycles, no bridges") {
    for (int i = 0; i < 50; ++i) {
        uint64_t seed = mix_seed(55, i);
        Rng rng(seed);
        int n = 0;
        do {
            n = static_cast<int>(rng.uniform(4, 20));
        } while (n == 5);
        Graph g = random_bipartite_cactus_prop2(n, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_cactus(g));
        CHECK(is_bipartite(g));
        CHECK(bridge_edges(g).empty());
        CHECK(g.min_degree() >= 2);
    }
    CHECK(random_bipartite_cactus_prop2(1, 3).vertex_count() == 1);  // K1 has no edges at all
    CHECK_THROWS_AS(random_bipartite_cactus_prop2(2, 1), generation_error);
    CHECK_THROWS_AS(random_bipartite_cactus_prop2(3, 1), generation_error);
    CHECK_THROWS_AS(random_bipartite_cactus_prop2(5, 1), generation_error);
    CHECK_NOTHROW(random_bipartite_cactus_prop2(4, 1));   // a single C4
    CHECK_NOTHROW(random_bipartite_cactus_prop2(9, 1));
}

TEST_CASE("min degree 3 generator") {
    for (int i = 0; i < 50; ++i) {
        uint64_t seed = mix_seed(66, i);
        Rng rng(seed);
        int n = static_cast<int>(rng.uniform(4, 16));
        Graph g = random_min_degree3(n, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_connected(g));
        CHECK(g.min_degree() >= 3);
        CHECK_FALSE(is_cactus(g));  // impossible for min degree 3
    }
    CHECK_THROWS_AS(random_min_degree3(3, 1), precondition_error);
}

TEST_CASE("random connected graphs") {
    for (int i = 0; i < 60; ++i) {
        uint64_t seed = mix_seed(77, i);
        Rng rng(seed);
        int n = static_cast<int>(rng.uniform(1, 24));
        double p = rng.uniform01() * 0.5;
        Graph g = random_connected_graph(n, p, seed);
        CHECK(g.vertex_count() == n);
        CHECK(is_connected(g));
    }
}

TEST_CASE("scan class names round trip") {
    for (ScanClass c : {ScanClass::tree, ScanClass::cactus, ScanClass::bipartite_cactus,
                        ScanClass::bipartite_cactus_theorem5, ScanClass::bipartite_cactus_prop2,
                        ScanClass::min_degree_3}) {
        CHECK(parse_scan_class(scan_class_name(c)) == c);
    }
    CHECK(scan_class_name(ScanClass::bipartite_cactus_prop2) == "bipartite_cactus_prop2");
    CHECK_THROWS_AS(parse_scan_class("nonsense"), precondition_error);
}

TEST_CASE("evaluate_instance fills a record") {
    Graph g = family_graph({4, {1, 1, 1, 1}});
    ScanRecord rec = evaluate_instance(g);
    CHECK(rec.n == 29);
    CHECK(rec.m == 32);
    CHECK(rec.gamma2 == 20);
    CHECK(rec.a == 18);
    CHECK(rec.gap == 2);
    CHECK_FALSE(rec.holds);
    CHECK(rec.backend == Gamma2Backend::cactus_dp);
    CHECK_FALSE(rec.skipped);
}

TEST_CASE("scan finds no violations on proven classes") {
    for (ScanClass c : {ScanClass::tree, ScanClass::bipartite_cactus_theorem5,
                        ScanClass::bipartite_cactus_prop2, ScanClass::min_degree_3}) {
        ScanSpec spec;
        spec.klass = c;
        spec.n_min = 4;
        spec.n_max = 14;
        spec.count = 25;
        spec.seed = 2026;
        ScanReport r = scan(spec);
        CHECK(r.records.size() == 25);
        CHECK(r.violations == 0);
        CHECK(r.violation_indices.empty());
        CHECK(r.max_gap <= 1);
        CHECK(r.skipped == 0);
        int total = 0;
        for (const auto& [gap, cnt] : r.gap_histogram) {
            CHECK(gap <= 1);
            total += cnt;
        }
        CHECK(total == 25);
        for (const ScanRecord& rec : r.records) {
            CHECK(rec.n >= 4);
            CHECK(rec.n <= 14);
            CHECK(rec.holds);
            CHECK(!rec.hash.empty());
        }
    }
}

TEST_CASE("scan reports are deterministic and scheduling independent") {
    ScanSpec spec;
    spec.klass = ScanClass::cactus;
    spec.n_min = 4;
    spec.n_max = 16;
    spec.count = 40;
    spec.seed = 31337;

    ScanReport a = scan(spec);
    ScanReport b = scan(spec);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_to_csv(a) == report_to_csv(b));

    spec.jobs = 4;
    ScanReport par = scan(spec);
    CHECK(report_to_json(par) == report_to_json(a));

    spec.seed = 31338;
    CHECK(report_to_json(scan(spec)) != report_to_json(a));
}

TEST_CASE("scan honors the budget by skipping hard instances") {
    ScanSpec spec;
    spec.klass = ScanClass::min_degree_3;
    spec.n_min = 26;  // beyond the bruteforce cap, so the budget actually binds
    spec.n_max = 26;
    spec.count = 3;
    spec.seed = 5;
    spec.solver_budget = 1;
    ScanReport r = scan(spec);
    CHECK(r.skipped == 3);
    for (const ScanRecord& rec : r.records) {
        CHECK(rec.skipped);
        CHECK(rec.gamma2 == 0);
    }
    CHECK(r.gap_histogram.empty());  // histogram covers solved records only
}

TEST_CASE("serialization formats") {
    ScanSpec spec;
    spec.klass = ScanClass::tree;
    spec.n_min = 4;
    spec.n_max = 8;
    spec.count = 5;
    spec.seed = 1;
    ScanReport r = scan(spec);

    std::string csv = report_to_csv(r);
    CHECK(csv.rfind("index,hash,n,m,gamma2,a,gap,holds,backend,skipped\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);  // header + 5 rows

    std::string json = report_to_json(r);
    CHECK(json.find("\"class\": \"tree\"") != std::string::npos);
    CHECK(json.find("\"aggregate\"") != std::string::npos);
    CHECK(json.find("\"gap_histogram\"") != std::string::npos);
    CHECK(json.find("runtime") == std::string::npos);  // runtimes stay out of reports

    std::string text = report_to_text(r);
    CHECK(text.find("violations") != std::string::npos);
}

TEST_CASE("scan rechecks sizes against class feasibility") {
    ScanSpec spec;
    spec.klass = ScanClass::bipartite_cactus_prop2;
    spec.n_min = 4;
    spec.n_max = 6;  // 5 is infeasible and must be excluded, not retried
    spec.count = 20;
    spec.seed = 9;
    ScanReport r = scan(spec);
    for (const ScanRecord& rec : r.records) {
        CHECK(rec.n != 5);
        CHECK(rec.holds);
    }
}
