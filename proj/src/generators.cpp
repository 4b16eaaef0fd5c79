#include "twodom/generators.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <vector>

#include "twodom/errors.hpp"
#include "twodom/rng.hpp"
#include "twodom/structure.hpp"

namespace twodom {

Graph random_tree(int n, uint64_t seed) {
    if (n < 1) throw precondition_error("random_tree: n must be positive");
    if (n == 1) return Graph::with_vertices(1);
    if (n == 2) return GraphBuilder().add_edge(0, 1).build();

    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (int& s : seq) s = static_cast<int>(rng.uniform(0, n - 1));

    // decode the sequence: repeatedly join the smallest remaining leaf to the
    // next sequence entry
    std::vector<int> degree(n, 1);
    for (int s : seq) ++degree[s];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);

    GraphBuilder b;
    for (int s : seq) {
        int leaf = leaves.top();
        leaves.pop();
        b.add_edge(leaf, s);
        if (--degree[s] == 1) leaves.push(s);
    }
    int x = leaves.top();
    leaves.pop();
    int y = leaves.top();
    b.add_edge(x, y);
    return b.build();
}

namespace {

Graph grow_cactus(int n, double cycle_bias, bool even_cycles_only, Rng& rng) {
    if (n < 1) throw precondition_error("random_cactus: n must be positive");
    GraphBuilder b;
    b.add_vertex(0);
    int size = 1;
    while (size < n) {
        int remaining = n - size;
        int host = static_cast<int>(rng.uniform(0, size - 1));
        int min_new = even_cycles_only ? 3 : 2;  // C4 needs 3 new vertices, C3 needs 2
        if (remaining >= min_new && rng.chance(cycle_bias)) {
            int len;
            if (even_cycles_only) {
                len = remaining >= 5 && rng.chance(0.4) ? 6 : 4;
            } else {
                len = static_cast<int>(rng.uniform(3, std::min(6, remaining + 1)));
            }
            int prev = host;
            for (int i = 0; i < len - 1; ++i) {
                b.add_edge(prev, size);
                prev = size++;
            }
            b.add_edge(prev, host);
        } else {
            b.add_edge(host, size++);
        }
    }
    return b.build();
}

}  // namespace

Graph random_cactus(int n, double cycle_bias, uint64_t seed) {
    Rng rng(seed);
    return grow_cactus(n, cycle_bias, false, rng);
}

Graph random_bipartite_cactus(int n, uint64_t seed) {
    Rng rng(seed);
    return grow_cactus(n, 0.6, true, rng);
}

Graph random_bipartite_cactus_theorem5(int n, uint64_t seed) {
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        Graph g = random_bipartite_cactus(n, mix_seed(seed, attempt));
        if (theorem5_hypotheses(g).all) return g;
    }
    throw generation_error("random_bipartite_cactus_theorem5: 0/" + std::to_string(kRejectionCap) +
                           " attempts satisfied the hypotheses for n = " + std::to_string(n));
}

Graph random_bipartite_cactus_prop2(int n, uint64_t seed) {
    if (n < 1) throw precondition_error("random_bipartite_cactus_prop2: n must be positive");
    if (n == 2 || n == 3 || n == 5)
        throw generation_error("random_bipartite_cactus_prop2: no bridgeless bipartite cactus on " +
                               std::to_string(n) + " vertices exists");
    Rng rng(seed);
    GraphBuilder b;
    b.add_vertex(0);
    int size = 1;
    while (size < n) {
        int remaining = n - size;
        // cycle C_{o+1} consumes o new vertices; o odd keeps cycles even, and
        // the leftover must stay expressible as a sum of odd numbers >= 3
        std::vector<int> choices;
        for (int o : {3, 5, 7}) {
            int left = remaining - o;
            if (left >= 0 && left != 1 && left != 2 && left != 4) choices.push_back(o);
        }
        if (choices.empty())
            throw generation_error("random_bipartite_cactus_prop2: stuck at remainder " +
                                   std::to_string(remaining));
        int o = rng.pick(choices);
        int host = static_cast<int>(rng.uniform(0, size - 1));
        int prev = host;
        for (int i = 0; i < o; ++i) {
            b.add_edge(prev, size);
            prev = size++;
        }
        b.add_edge(prev, host);
    }
    return b.build();
}

Graph random_min_degree3(int n, uint64_t seed) {
    if (n < 4) throw precondition_error("random_min_degree3: need at least 4 vertices");
    Rng rng(seed);
    GraphBuilder b;
    std::vector<int> deg(n, 2);
    for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    for (int v = 0; v < n; ++v) {
        while (deg[v] < 3) {
            std::vector<int> candidates, poor;  // prefer partners that also need degree
            for (int u = 0; u < n; ++u)
                if (u != v && !b.has_edge(u, v)) {
                    candidates.push_back(u);
                    if (deg[u] < 3) poor.push_back(u);
                }
            int u = poor.empty() ? rng.pick(candidates) : rng.pick(poor);
            b.add_edge(v, u);
            ++deg[v];
            ++deg[u];
        }
    }
    return b.build();
}

Graph random_connected_graph(int n, double edge_prob, uint64_t seed) {
    if (n < 1) throw precondition_error("random_connected_graph: n must be positive");
    Rng rng(seed);
    GraphBuilder b;
    b.add_vertex(0);
    for (int v = 1; v < n; ++v) b.add_edge(v, static_cast<int>(rng.uniform(0, v - 1)));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!b.has_edge(u, v) && rng.chance(edge_prob)) b.add_edge(u, v);
    return b.build();
}

}  // namespace twodom
