#pragma once

// Independent reference implementations for cross-checking the library.
// Deliberately naive: straight from the definitions, no shared code paths
// with the optimized implementations under test.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "twodom/graph.hpp"

namespace oracle {

inline bool is_2_dominating(const twodom::Graph& g, const std::set<int>& s) {
    for (int v : g.vertices()) {
        if (s.count(v)) continue;
        int in = 0;
        for (int w : g.neighbors(v)) in += s.count(w) ? 1 : 0;
        if (in < 2) return false;
    }
    return true;
}

// full 2^n sweep; keep n small
inline int naive_gamma2(const twodom::Graph& g) {
    std::vector<int> vs = g.vertices();
    int n = static_cast<int>(vs.size());
    if (n > 20) throw std::runtime_error("naive_gamma2: too large");
    int best = n;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        std::set<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.insert(vs[i]);
        if (is_2_dominating(g, s)) best = size;
    }
    return best;
}

inline int naive_annihilation(const twodom::Graph& g) {
    std::vector<int> degs;
    for (int v : g.vertices()) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    long long sum = 0;
    int k = 0;
    for (int d : degs) {
        if (sum + d > g.edge_count()) break;
        sum += d;
        ++k;
    }
    return k;
}

// every simple cycle, as a canonical vertex sequence (smallest vertex first,
// then its smaller neighbor); exponential, for small test graphs only
inline std::vector<std::vector<int>> simple_cycles(const twodom::Graph& g) {
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::set<int> on_path;

    auto dfs = [&](auto&& self, int start, int v) -> void {
        for (int w : g.neighbors(v)) {
            if (w == start && path.size() >= 3) {
                if (path[1] < path.back()) cycles.push_back(path);  // one orientation only
            } else if (w > start && !on_path.count(w)) {
                path.push_back(w);
                on_path.insert(w);
                self(self, start, w);
                path.pop_back();
                on_path.erase(w);
            }
        }
    };

    for (int s : g.vertices()) {
        path = {s};
        on_path = {s};
        dfs(dfs, s, s);
    }
    return cycles;
}

inline bool naive_is_cactus(const twodom::Graph& g) {
    if (!twodom::is_connected(g)) return false;
    std::set<std::pair<int, int>> used;
    for (const auto& cyc : simple_cycles(g)) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            if (!used.insert({std::min(u, v), std::max(u, v)}).second) return false;
        }
    }
    return true;
}

}  // namespace oracle
