#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "twodom/graph.hpp"
#include "twodom/invariants.hpp"

namespace twodom {

enum class ScanClass {
    tree,
    cactus,
    bipartite_cactus,
    bipartite_cactus_theorem5,
    bipartite_cactus_prop2,
    min_degree_3
};

std::string scan_class_name(ScanClass c);
ScanClass parse_scan_class(const std::string& name);  // throws precondition_error

struct ScanSpec {
    ScanClass klass = ScanClass::tree;
    int n_min = 4;
    int n_max = 18;
    int count = 100;
    uint64_t seed = 0;
    long long solver_budget = kDefaultNodeBudget;
    int jobs = 1;
};

struct ScanRecord {
    int index = 0;
    std::string hash;  // canonical edge-list fingerprint
    int n = 0;
    int m = 0;
    int gamma2 = 0;
    int a = 0;
    int gap = 0;  // gamma2 - a
    bool holds = false;
    Gamma2Backend backend = Gamma2Backend::bruteforce;
    bool skipped = false;    // solver budget exhausted
    double runtime_ms = 0;   // informational only; never serialized (reports stay
                             // byte-identical for a fixed spec)
};

struct ScanReport {
    ScanSpec spec;
    std::vector<ScanRecord> records;  // instance order, independent of scheduling
    int violations = 0;               // records with gap >= 2
    std::vector<int> violation_indices;
    int max_gap = 0;
    std::map<int, int> gap_histogram;  // over non-skipped records
    int skipped = 0;
};

// solve one instance exactly and fill a record (index/hash left to the caller)
ScanRecord evaluate_instance(const Graph& g, long long node_budget = kDefaultNodeBudget);

// Generate `count` instances of the class (sizes drawn per instance from
// [n_min, n_max]), solve each exactly, and aggregate. Deterministic for a
// fixed spec: per-instance RNG streams are derived from (seed, index), and
// every reported violation with n <= 24 is re-verified by brute force.
ScanReport scan(const ScanSpec& spec);

std::string report_to_json(const ScanReport& r);
std::string report_to_csv(const ScanReport& r);
std::string report_to_text(const ScanReport& r);

}  // namespace twodom
