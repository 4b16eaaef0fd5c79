#include "twodom/scan.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "twodom/errors.hpp"
#include "twodom/generators.hpp"
#include "twodom/rng.hpp"
#include "twodom/structure.hpp"

namespace twodom {

std::string scan_class_name(ScanClass c) {
    switch (c) {
        case ScanClass::tree: return "tree";
        case ScanClass::cactus: return "cactus";
        case ScanClass::bipartite_cactus: return "bipartite_cactus";
        case ScanClass::bipartite_cactus_theorem5: return "bipartite_cactus_theorem5";
        case ScanClass::bipartite_cactus_prop2: return "bipartite_cactus_prop2";
        case ScanClass::min_degree_3: return "min_degree_3";
    }
    return "?";
}

ScanClass parse_scan_class(const std::string& name) {
    for (ScanClass c : {ScanClass::tree, ScanClass::cactus, ScanClass::bipartite_cactus,
                        ScanClass::bipartite_cactus_theorem5, ScanClass::bipartite_cactus_prop2,
                        ScanClass::min_degree_3})
        if (scan_class_name(c) == name) return c;
    throw precondition_error("unknown scan class: " + name);
}

namespace {

bool prop2_feasible(int n) { return n >= 1 && n != 2 && n != 3 && n != 5; }

int min_feasible_n(ScanClass c) {
    switch (c) {
        case ScanClass::tree: return 1;
        case ScanClass::min_degree_3: return 4;
        default: return 2;
    }
}

Graph make_instance(ScanClass c, int n, uint64_t seed) {
    switch (c) {
        case ScanClass::tree: return random_tree(n, seed);
        case ScanClass::cactus: return random_cactus(n, 0.6, seed);
        case ScanClass::bipartite_cactus: return random_bipartite_cactus(n, seed);
        case ScanClass::bipartite_cactus_theorem5: return random_bipartite_cactus_theorem5(n, seed);
        case ScanClass::bipartite_cactus_prop2: return random_bipartite_cactus_prop2(n, seed);
        case ScanClass::min_degree_3: return random_min_degree3(n, seed);
    }
    throw precondition_error("unknown scan class");
}

bool class_predicate(ScanClass c, const Graph& g) {
    switch (c) {
        case ScanClass::tree: return is_tree(g);
        case ScanClass::cactus: return is_cactus(g);
        case ScanClass::bipartite_cactus: return is_cactus(g) && is_bipartite(g);
        case ScanClass::bipartite_cactus_theorem5: return theorem5_hypotheses(g).all;
        case ScanClass::bipartite_cactus_prop2:
            return is_cactus(g) && is_bipartite(g) && bridge_edges(g).empty();
        case ScanClass::min_degree_3: return is_connected(g) && g.min_degree() >= 3;
    }
    return false;
}

}  // namespace

ScanRecord evaluate_instance(const Graph& g, long long node_budget) {
    ScanRecord rec;
    rec.hash = graph_hash(g);
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.a = annihilation(g).a;
    auto t0 = std::chrono::steady_clock::now();
    try {
        DominationCertificate cert = gamma2(g, node_budget);
        rec.gamma2 = cert.gamma2;
        rec.backend = cert.backend;
        rec.gap = rec.gamma2 - rec.a;
        rec.holds = rec.gap <= 1;
        // reported violations must survive an independent exact solver
        if (rec.gap >= 2 && rec.n <= kBruteforceCap && cert.backend != Gamma2Backend::bruteforce) {
            if (gamma2_bruteforce(g).gamma2 != rec.gamma2)
                throw std::logic_error("scan: violation failed brute-force re-verification");
        }
    } catch (const budget_error&) {
        rec.skipped = true;
    }
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

ScanReport scan(const ScanSpec& spec) {
    if (spec.count < 1) throw precondition_error("scan: count must be at least 1");
    if (spec.n_min > spec.n_max) throw precondition_error("scan: empty size range");
    if (spec.n_min < min_feasible_n(spec.klass))
        throw precondition_error("scan: n_min below the smallest feasible size for class " +
                                 scan_class_name(spec.klass));

    std::vector<int> sizes;
    for (int n = spec.n_min; n <= spec.n_max; ++n)
        if (spec.klass != ScanClass::bipartite_cactus_prop2 || prop2_feasible(n)) sizes.push_back(n);
    if (sizes.empty()) throw precondition_error("scan: no feasible size in range for this class");

    ScanReport report;
    report.spec = spec;
    report.records.resize(spec.count);

    std::atomic<int> cursor{0};
    std::mutex fail_mutex;
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            int i = cursor.fetch_add(1);
            if (i >= spec.count) return;
            try {
                Rng rng(mix_seed(spec.seed, static_cast<uint64_t>(i)));
                int n = sizes[static_cast<size_t>(rng.uniform(0, static_cast<int>(sizes.size()) - 1))];
                Graph g = make_instance(spec.klass, n, rng.next_u64());
                if (!class_predicate(spec.klass, g))
                    throw std::logic_error("scan: generated instance fails its class predicate");
                ScanRecord rec = evaluate_instance(g, spec.solver_budget);
                rec.index = i;
                report.records[i] = std::move(rec);
            } catch (...) {
                std::lock_guard<std::mutex> lock(fail_mutex);
                if (!failure) failure = std::current_exception();
                cursor.store(spec.count);
                return;
            }
        }
    };

    int jobs = std::max(1, spec.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (const ScanRecord& rec : report.records) {
        if (rec.skipped) {
            ++report.skipped;
            continue;
        }
        ++report.gap_histogram[rec.gap];
        report.max_gap = std::max(report.max_gap, rec.gap);
        if (rec.gap >= 2) {
            ++report.violations;
            report.violation_indices.push_back(rec.index);
        }
    }
    return report;
}

namespace {

nlohmann::json record_json(const ScanRecord& rec) {
    return {{"index", rec.index}, {"hash", rec.hash},   {"n", rec.n},
            {"m", rec.m},         {"gamma2", rec.gamma2}, {"a", rec.a},
            {"gap", rec.gap},     {"holds", rec.holds},   {"backend", backend_name(rec.backend)},
            {"skipped", rec.skipped}};
}

}  // namespace

std::string report_to_json(const ScanReport& r) {
    nlohmann::json j;
    j["class"] = scan_class_name(r.spec.klass);
    j["n_min"] = r.spec.n_min;
    j["n_max"] = r.spec.n_max;
    j["count"] = r.spec.count;
    j["seed"] = r.spec.seed;
    j["records"] = nlohmann::json::array();
    for (const ScanRecord& rec : r.records) j["records"].push_back(record_json(rec));
    j["aggregate"] = {{"count", r.spec.count},
                      {"violations", r.violations},
                      {"violation_indices", r.violation_indices},
                      {"max_gap", r.max_gap},
                      {"skipped", r.skipped}};
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [gap, cnt] : r.gap_histogram) hist[std::to_string(gap)] = cnt;
    j["aggregate"]["gap_histogram"] = hist;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "index,hash,n,m,gamma2,a,gap,holds,backend,skipped\n";
    for (const ScanRecord& rec : r.records)
        out << rec.index << ',' << rec.hash << ',' << rec.n << ',' << rec.m << ',' << rec.gamma2
            << ',' << rec.a << ',' << rec.gap << ',' << (rec.holds ? "true" : "false") << ','
            << backend_name(rec.backend) << ',' << (rec.skipped ? "true" : "false") << '\n';
    return out.str();
}

std::string report_to_text(const ScanReport& r) {
    std::ostringstream out;
    out << "scan class=" << scan_class_name(r.spec.klass) << " count=" << r.spec.count
        << " n=[" << r.spec.n_min << "," << r.spec.n_max << "] seed=" << r.spec.seed << "\n";
    out << "violations=" << r.violations << " max_gap=" << r.max_gap << " skipped=" << r.skipped
        << "\n";
    out << "gap histogram:";
    for (const auto& [gap, cnt] : r.gap_histogram) out << ' ' << gap << ':' << cnt;
    out << "\n";
    for (int idx : r.violation_indices) {
        const ScanRecord& rec = r.records[static_cast<size_t>(idx)];
        out << "violation index=" << rec.index << " hash=" << rec.hash << " n=" << rec.n
            << " gamma2=" << rec.gamma2 << " a=" << rec.a << " gap=" << rec.gap << "\n";
    }
    return out.str();
}

}  // namespace twodom
