#include "twodom/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

#include "twodom/errors.hpp"
#include "twodom/structure.hpp"

namespace twodom {

std::string backend_name(Gamma2Backend b) {
    switch (b) {
        case Gamma2Backend::bruteforce: return "bruteforce";
        case Gamma2Backend::branch_and_bound: return "branch_and_bound";
        case Gamma2Backend::cactus_dp: return "cactus_dp";
    }
    return "?";
}

AnnihilationCertificate annihilation(const Graph& g) {
    if (g.empty()) throw precondition_error("annihilation: graph must have at least one vertex");
    const long long m = g.edge_count();
    AnnihilationCertificate cert;
    std::vector<int> order = canonical_vertex_order(g);
    long long sum = 0;
    size_t k = 0;
    while (k < order.size() && sum + g.degree(order[k]) <= m) {
        sum += g.degree(order[k]);
        cert.canonical_set.insert(order[k]);
        ++k;
    }
    cert.a = static_cast<int>(k);
    cert.degree_sum = sum;
    if (k < order.size()) cert.d_star = g.degree(order[k]);
    return cert;
}

bool is_2_dominating(const Graph& g, const std::set<int>& s) {
    for (int v : s)
        if (!g.has_vertex(v))
            throw precondition_error("is_2_dominating: unknown vertex id " + std::to_string(v));
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (s.count(v)) continue;
        int c = 0;
        for (int w : nbrs)
            if (s.count(w) && ++c == 2) break;
        if (c < 2) return false;
    }
    return true;
}

// ---- brute force -------------------------------------------------------------

DominationCertificate gamma2_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw precondition_error("gamma2_bruteforce: graph must have at least one vertex");
    if (n > kBruteforceCap)
        throw capacity_error("gamma2_bruteforce: n = " + std::to_string(n) + " exceeds cap " +
                             std::to_string(kBruteforceCap));

    std::vector<int> ids = g.vertices();
    std::vector<uint32_t> adj(n, 0);
    {
        std::map<int, int> idx;
        for (int i = 0; i < n; ++i) idx[ids[i]] = i;
        for (const auto& [u, v] : g.edges()) {
            adj[idx[u]] |= 1u << idx[v];
            adj[idx[v]] |= 1u << idx[u];
        }
    }

    // degree <= 1 vertices can never be 2-dominated from outside
    uint32_t forced = 0;
    for (int i = 0; i < n; ++i)
        if (std::popcount(adj[i]) <= 1) forced |= 1u << i;
    std::vector<int> free_bits;
    for (int i = 0; i < n; ++i)
        if (!(forced >> i & 1)) free_bits.push_back(i);
    const int nf = static_cast<int>(free_bits.size());

    auto dominated = [&](uint32_t s) {
        for (int i = 0; i < n; ++i)
            if (!(s >> i & 1) && std::popcount(adj[i] & s) < 2) return false;
        return true;
    };
    auto expand = [&](uint32_t fsub) {  // free-subset -> full vertex mask
        uint32_t s = forced;
        for (int b = 0; b < nf; ++b)
            if (fsub >> b & 1) s |= 1u << free_bits[b];
        return s;
    };

    // search by increasing candidate size; Gosper's hack enumerates k-subsets
    for (int k = 0; k <= nf; ++k) {
        if (k == 0) {
            if (dominated(forced)) {
                DominationCertificate cert;
                cert.backend = Gamma2Backend::bruteforce;
                cert.gamma2 = std::popcount(forced);
                for (int i = 0; i < n; ++i)
                    if (forced >> i & 1) cert.witness.insert(ids[i]);
                return cert;
            }
            continue;
        }
        uint32_t sub = (1u << k) - 1;
        const uint32_t limit = 1u << nf;  // nf <= kBruteforceCap, so this never overflows
        while (sub < limit) {
            uint32_t s = expand(sub);
            if (dominated(s)) {
                DominationCertificate cert;
                cert.backend = Gamma2Backend::bruteforce;
                cert.gamma2 = std::popcount(s);
                for (int i = 0; i < n; ++i)
                    if (s >> i & 1) cert.witness.insert(ids[i]);
                return cert;
            }
            uint32_t c = sub & (0u - sub), r = sub + c;  // Gosper's hack
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    // unreachable: S = V(G) is always 2-dominating
    assert(false);
    throw std::logic_error("gamma2_bruteforce: no dominating set found");
}

// ---- greedy upper bound --------------------------------------------------------

std::set<int> greedy_2_dominating(const Graph& g) {
    std::set<int> s;
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.size() <= 1) s.insert(v);
    auto coverage = [&](int v) {
        int c = 0;
        for (int w : g.neighbors(v))
            if (s.count(w)) ++c;
        return c;
    };
    for (;;) {
        std::set<int> deficient;
        for (const auto& [v, _] : g.adjacency())
            if (!s.count(v) && coverage(v) < 2) deficient.insert(v);
        if (deficient.empty()) break;
        int best = -1, best_gain = 0;
        for (const auto& [u, nbrs] : g.adjacency()) {
            if (s.count(u)) continue;
            int gain = deficient.count(u) ? 1 : 0;
            for (int w : nbrs)
                if (deficient.count(w)) ++gain;
            if (gain > best_gain) best = u, best_gain = gain;
        }
        assert(best >= 0);  // a deficient vertex always has a non-selected neighbor
        s.insert(best);
    }
    assert(is_2_dominating(g, s));
    return s;
}

// ---- branch and bound ----------------------------------------------------------

namespace {

struct BnB {
    int n = 0;
    long long budget = 0, nodes = 0;
    int max_deg = 1;
    std::vector<std::vector<int>> adj;      // index-based
    std::vector<int> status;                // 0 undecided, 1 in, 2 out
    std::vector<int> cov, undec;            // #in-neighbors, #undecided-neighbors
    int best = 0;
    std::vector<int> best_set, cur;

    void take(int v) {
        status[v] = 1;
        cur.push_back(v);
        for (int w : adj[v]) ++cov[w], --undec[w];
    }
    void untake(int v) {
        status[v] = 0;
        cur.pop_back();
        for (int w : adj[v]) --cov[w], ++undec[w];
    }
    void drop(int v) {
        status[v] = 2;
        for (int w : adj[v]) --undec[w];
    }
    void undrop(int v) {
        status[v] = 0;
        for (int w : adj[v]) ++undec[w];
    }

    void search() {
        if (++nodes > budget) throw budget_error("gamma2_branch_and_bound: node budget exceeded");

        long long deficit = 0;
        int branch_from = -1;  // deficient out-vertex with fewest undecided options
        bool any_undecided = false, all_free_covered = true;
        for (int v = 0; v < n; ++v) {
            if (status[v] == 0) {
                any_undecided = true;
                if (cov[v] < 2) all_free_covered = false;
            } else if (status[v] == 2 && cov[v] < 2) {
                if (cov[v] + undec[v] < 2) return;  // cannot be covered anymore
                deficit += 2 - cov[v];
                if (branch_from < 0 || undec[v] < undec[branch_from]) branch_from = v;
            }
        }
        if (!any_undecided) {
            if (deficit == 0 && static_cast<int>(cur.size()) < best) {
                best = static_cast<int>(cur.size());
                best_set = cur;
            }
            return;
        }
        long long lb = (deficit + max_deg - 1) / max_deg;
        if (static_cast<long long>(cur.size()) + lb >= best) return;
        if (deficit == 0 && all_free_covered) {  // every undecided vertex can safely stay out
            best = static_cast<int>(cur.size());
            best_set = cur;
            return;
        }

        int v = -1;
        if (branch_from >= 0) {
            for (int w : adj[branch_from])
                if (status[w] == 0 && (v < 0 || w < v)) v = w;
        } else {
            for (int u = 0; u < n && v < 0; ++u)
                if (status[u] == 0 && cov[u] < 2) v = u;
        }
        assert(v >= 0);

        take(v);
        search();
        untake(v);

        if (cov[v] + undec[v] >= 2) {  // v itself must remain coverable
            drop(v);
            search();
            undrop(v);
        }
    }
};

}  // namespace

DominationCertificate gamma2_branch_and_bound(const Graph& g, long long node_budget) {
    const int n = g.vertex_count();
    if (n < 1)
        throw precondition_error("gamma2_branch_and_bound: graph must have at least one vertex");

    std::vector<int> ids = g.vertices();
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[ids[i]] = i;

    BnB b;
    b.n = n;
    b.budget = node_budget;
    b.max_deg = std::max(1, g.max_degree());
    b.adj.assign(n, {});
    for (const auto& [u, v] : g.edges()) {
        b.adj[idx[u]].push_back(idx[v]);
        b.adj[idx[v]].push_back(idx[u]);
    }
    for (auto& a : b.adj) std::sort(a.begin(), a.end());
    b.status.assign(n, 0);
    b.cov.assign(n, 0);
    b.undec.assign(n, 0);
    for (int v = 0; v < n; ++v) b.undec[v] = static_cast<int>(b.adj[v].size());

    std::set<int> greedy = greedy_2_dominating(g);
    b.best = static_cast<int>(greedy.size());
    for (int v : greedy) b.best_set.push_back(idx[v]);

    for (int v = 0; v < n; ++v)  // leaves and isolated vertices are forced
        if (b.adj[v].size() <= 1 && b.status[v] == 0) b.take(v);
    b.search();

    DominationCertificate cert;
    cert.backend = Gamma2Backend::branch_and_bound;
    cert.gamma2 = b.best;
    for (int i : b.best_set) cert.witness.insert(ids[i]);
    assert(is_2_dominating(g, cert.witness));
    assert(static_cast<int>(cert.witness.size()) == cert.gamma2);
    return cert;
}

// ---- dispatch ------------------------------------------------------------------

DominationCertificate gamma2(const Graph& g, long long node_budget) {
    if (g.empty()) throw precondition_error("gamma2: graph must have at least one vertex");
    if (!is_connected(g)) throw precondition_error("gamma2: graph must be connected");
    if (is_cactus(g)) return gamma2_cactus(g);
    if (g.vertex_count() <= kBruteforceCap) return gamma2_bruteforce(g);
    return gamma2_branch_and_bound(g, node_budget);
}

ConjectureRecord conjecture_check(const Graph& g, long long node_budget) {
    if (g.vertex_count() < 2)
        throw precondition_error("conjecture_check: graph must be nontrivial (n >= 2)");
    if (!is_connected(g)) throw precondition_error("conjecture_check: graph must be connected");
    DominationCertificate dom = gamma2(g, node_budget);
    AnnihilationCertificate ann = annihilation(g);
    ConjectureRecord rec;
    rec.gamma2 = dom.gamma2;
    rec.a = ann.a;
    rec.gap = dom.gamma2 - ann.a;
    rec.holds = rec.gap <= 1;
    rec.backend = dom.backend;
    return rec;
}

}  // namespace twodom
