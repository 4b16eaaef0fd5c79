#include "twodom/structure.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

#include "twodom/errors.hpp"

namespace twodom {

namespace {

// Biconnected components as edge lists (Tarjan, iterative to keep stack depth
// independent of graph size). Handles disconnected input; isolated vertices
// produce no blocks.
std::vector<std::vector<std::pair<int, int>>> bcc_blocks(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> blocks;
    std::map<int, int> disc, low;
    std::vector<std::pair<int, int>> estack;

    struct Frame {
        int v, parent;
        std::set<int>::const_iterator it, end;
    };

    int timer = 0;
    for (const auto& [root, _] : g.adjacency()) {
        if (disc.count(root)) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, g.neighbors(root).begin(), g.neighbors(root).end()});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.it != f.end) {
                int w = *f.it++;
                if (w == f.parent) continue;
                if (!disc.count(w)) {
                    estack.push_back({f.v, w});
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, g.neighbors(w).begin(), g.neighbors(w).end()});
                } else if (disc[w] < disc[f.v]) {  // back edge to an ancestor
                    estack.push_back({f.v, w});
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, parent = f.parent;
                stack.pop_back();
                if (parent < 0) continue;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {  // parent closes a block at v
                    std::vector<std::pair<int, int>> block;
                    for (;;) {
                        auto e = estack.back();
                        estack.pop_back();
                        block.push_back(e);
                        if (e == std::make_pair(parent, v)) break;
                    }
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    assert(estack.empty());
    return blocks;
}

std::set<int> block_vertex_set(const std::vector<std::pair<int, int>>& block) {
    std::set<int> vs;
    for (auto [u, v] : block) {
        vs.insert(u);
        vs.insert(v);
    }
    return vs;
}

// walk a cycle block into canonical cyclic order: start at the smallest id,
// step first to its smaller neighbor inside the block
std::vector<int> cycle_order(const std::vector<std::pair<int, int>>& block) {
    std::map<int, std::set<int>> adj;
    for (auto [u, v] : block) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    int start = adj.begin()->first;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    do {
        const auto& nb = adj[cur];
        assert(nb.size() == 2);
        int a = *nb.begin(), b = *std::next(nb.begin());
        int nxt = (a != prev) ? a : b;
        if (prev < 0) nxt = std::min(a, b);
        prev = cur;
        cur = nxt;
        if (cur != start) order.push_back(cur);
    } while (cur != start);
    assert(order.size() == block.size());
    return order;
}

}  // namespace

std::set<std::pair<int, int>> bridge_edges(const Graph& g) {
    std::set<std::pair<int, int>> bridges;
    for (const auto& block : bcc_blocks(g))
        if (block.size() == 1) {
            auto [u, v] = block.front();
            bridges.insert({std::min(u, v), std::max(u, v)});
        }
    return bridges;
}

bool is_cactus(const Graph& g) {
    if (!is_connected(g)) return false;
    for (const auto& block : bcc_blocks(g)) {
        if (block.size() == 1) continue;  // bridge
        if (block_vertex_set(block).size() != block.size()) return false;  // chord or theta
    }
    return true;
}

CactusDecomposition decompose_cactus(const Graph& g) {
    if (!is_connected(g)) throw structure_error("decompose_cactus: graph is not connected");

    CactusDecomposition d;
    std::map<int, int> membership;  // vertex -> number of blocks containing it
    for (const auto& block : bcc_blocks(g)) {
        std::set<int> vs = block_vertex_set(block);
        for (int v : vs) ++membership[v];
        if (block.size() == 1) {
            auto [u, v] = block.front();
            d.bridges.push_back({std::min(u, v), std::max(u, v)});
        } else if (vs.size() == block.size()) {
            d.cycle_blocks.push_back(cycle_order(block));
        } else {
            throw structure_error("decompose_cactus: block with " + std::to_string(vs.size()) +
                                  " vertices and " + std::to_string(block.size()) +
                                  " edges is neither an edge nor a cycle");
        }
    }
    std::sort(d.bridges.begin(), d.bridges.end());
    std::sort(d.cycle_blocks.begin(), d.cycle_blocks.end());

    for (const auto& [v, count] : membership)
        if (count >= 2) d.cut_vertices.push_back(v);

    std::set<int> cuts(d.cut_vertices.begin(), d.cut_vertices.end());
    for (const auto& cyc : d.cycle_blocks) {
        std::vector<int> on;
        for (int v : cyc)
            if (cuts.count(v)) on.push_back(v);
        std::sort(on.begin(), on.end());
        d.block_cuts.push_back(std::move(on));
    }
    for (auto [u, v] : d.bridges) {
        std::vector<int> on;
        if (cuts.count(u)) on.push_back(u);
        if (cuts.count(v)) on.push_back(v);
        d.block_cuts.push_back(std::move(on));
    }
    return d;
}

bool is_bipartite(const Graph& g) {
    std::map<int, int> color;
    for (const auto& [s, _] : g.adjacency()) {
        if (color.count(s)) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : g.neighbors(v)) {
                auto it = color.find(w);
                if (it == color.end()) {
                    color[w] = color[v] ^ 1;
                    q.push(w);
                } else if (it->second == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

std::map<int, int> multi_source_dist(const Graph& g, const std::vector<int>& sources) {
    std::map<int, int> dist;
    std::queue<int> q;
    for (int s : sources) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

// index of the decomposition cycle block equal (as a set) to `cycle`, or -1
int match_cycle_block(const CactusDecomposition& d, const std::vector<int>& cycle) {
    std::set<int> want(cycle.begin(), cycle.end());
    if (want.size() != cycle.size()) return -1;
    for (size_t i = 0; i < d.cycle_blocks.size(); ++i) {
        const auto& c = d.cycle_blocks[i];
        if (c.size() == want.size() && std::set<int>(c.begin(), c.end()) == want)
            return static_cast<int>(i);
    }
    return -1;
}

std::set<int> exits_of(const Graph& g, const CactusDecomposition& d, int block_index) {
    const auto& cyc = d.cycle_blocks[block_index];
    std::set<int> cyc_set(cyc.begin(), cyc.end());
    std::set<int> exits;
    for (size_t j = 0; j < d.cycle_blocks.size(); ++j) {
        if (static_cast<int>(j) == block_index) continue;
        std::map<int, int> dist = multi_source_dist(g, d.cycle_blocks[j]);
        int best = -1, best_dist = 0;
        bool tie = false;
        for (int v : cyc) {
            int dv = dist.at(v);
            if (best < 0 || dv < best_dist) {
                best = v;
                best_dist = dv;
                tie = false;
            } else if (dv == best_dist) {
                tie = true;
            }
        }
        // in a cactus every path from this cycle toward another one leaves
        // through a single cut vertex, so the minimizer is unique
        assert(!tie);
        (void)tie;
        exits.insert(best);
    }
    return exits;
}

int leaf_neighbor_count(const Graph& g, int v) {
    int c = 0;
    for (int w : g.neighbors(v))
        if (g.degree(w) == 1) ++c;
    return c;
}

bool sun_check(const Graph& g, const std::vector<int>& cycle, const std::set<int>& exits) {
    if (exits.size() == 1) {
        int x = *exits.begin();
        for (int v : cycle)
            if (v != x && leaf_neighbor_count(g, v) != 1) return false;
        return true;
    }
    // no exit vertex: at most one cycle vertex may lack exactly one pendant leaf
    int misses = 0;
    for (int v : cycle)
        if (leaf_neighbor_count(g, v) != 1) ++misses;
    return misses <= 1;
}

}  // namespace

std::set<int> exit_vertices(const Graph& g, const std::vector<int>& cycle) {
    CactusDecomposition d = decompose_cactus(g);
    int idx = match_cycle_block(d, cycle);
    if (idx < 0) throw precondition_error("exit_vertices: given cycle is not a cycle block");
    return exits_of(g, d, idx);
}

std::vector<CycleReport> outer_cycles(const Graph& g) {
    CactusDecomposition d = decompose_cactus(g);
    std::vector<CycleReport> reports;
    bool any_outer = false;
    for (size_t i = 0; i < d.cycle_blocks.size(); ++i) {
        CycleReport r;
        r.cycle = d.cycle_blocks[i];
        r.length = static_cast<int>(r.cycle.size());
        r.exit_vertices = exits_of(g, d, static_cast<int>(i));
        r.is_outer = r.exit_vertices.size() <= 1;
        r.has_sun = r.is_outer && sun_check(g, r.cycle, r.exit_vertices);
        any_outer = any_outer || r.is_outer;
        reports.push_back(std::move(r));
    }
    // the block-cut tree of a cactus with cycles always has a leaf cycle
    assert(d.cycle_blocks.empty() || any_outer);
    (void)any_outer;
    return reports;
}

bool has_sun(const Graph& g, const CycleReport& report) {
    if (!report.is_outer) throw precondition_error("has_sun: cycle is not outer");
    return sun_check(g, report.cycle, report.exit_vertices);
}

Theorem5Hypotheses theorem5_hypotheses(const Graph& g) {
    Theorem5Hypotheses h;
    h.connected = is_connected(g);
    h.bipartite = is_bipartite(g);
    h.cactus = is_cactus(g);
    h.no_sun_at_outer = true;
    h.outer_4cycle_exit_degree_ok = true;
    if (h.connected && h.cactus) {
        for (const CycleReport& r : outer_cycles(g)) {
            if (!r.is_outer) continue;
            if (r.has_sun) h.no_sun_at_outer = false;
            if (r.length == 4 && r.exit_vertices.size() == 1 &&
                g.degree(*r.exit_vertices.begin()) < 4)
                h.outer_4cycle_exit_degree_ok = false;
        }
    }
    h.all = h.connected && h.bipartite && h.cactus && h.no_sun_at_outer &&
            h.outer_4cycle_exit_degree_ok;
    return h;
}

// ---- feature finders ----------------------------------------------------------

std::string feature_kind_name(FeatureKind k) {
    switch (k) {
        case FeatureKind::strong_support: return "strong_support";
        case FeatureKind::pendant_p4: return "pendant_p4";
        case FeatureKind::induced_p5_deg2: return "induced_p5_deg2";
        case FeatureKind::subdivided_star_at_cycle: return "subdivided_star_at_cycle";
        case FeatureKind::hanging_tree: return "hanging_tree";
    }
    return "?";
}

std::vector<Feature> find_strong_supports(const Graph& g) {
    std::vector<Feature> out;
    for (const auto& [u, nbrs] : g.adjacency()) {
        std::vector<int> leaves;
        for (int w : nbrs)
            if (g.degree(w) == 1) leaves.push_back(w);
        if (leaves.size() < 2) continue;
        Feature f;
        f.kind = FeatureKind::strong_support;
        f.anchors.push_back(u);
        f.anchors.insert(f.anchors.end(), leaves.begin(), leaves.end());
        f.params["leaves"] = static_cast<int>(leaves.size());
        out.push_back(std::move(f));
    }
    return out;  // ascending by support vertex already
}

std::vector<Feature> find_pendant_p4(const Graph& g) {
    std::vector<Feature> out;
    for (const auto& [u1, nbrs] : g.adjacency()) {
        if (nbrs.size() != 1) continue;
        int u2 = *nbrs.begin();
        if (g.degree(u2) != 2) continue;
        int u3 = -1;
        for (int w : g.neighbors(u2))
            if (w != u1) u3 = w;
        if (g.degree(u3) != 2) continue;
        int v = -1;
        for (int w : g.neighbors(u3))
            if (w != u2) v = w;
        // v == u1 is impossible: u1 is a leaf whose sole neighbor is u2
        assert(v != u1 && v >= 0);
        Feature f;
        f.kind = FeatureKind::pendant_p4;
        f.anchors = {u1, u2, u3, v};
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Feature> find_induced_p5_deg2(const Graph& g) {
    std::vector<Feature> out;
    for (const auto& [u2, nbrs] : g.adjacency()) {
        if (nbrs.size() != 2) continue;
        int u1 = *nbrs.begin(), u3 = *std::next(nbrs.begin());  // u1 < u3: normalized
        if (g.degree(u1) != 2 || g.degree(u3) != 2) continue;
        int v = -1, w = -1;
        for (int x : g.neighbors(u1))
            if (x != u2) v = x;
        for (int x : g.neighbors(u3))
            if (x != u2) w = x;
        if (v == u3 || w == u1) continue;  // triangle
        if (v == w) continue;              // C4
        if (g.has_edge(v, w)) continue;    // C5: not induced
        Feature f;
        f.kind = FeatureKind::induced_p5_deg2;
        f.anchors = {v, u1, u2, u3, w};
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const Feature& a, const Feature& b) { return a.anchors < b.anchors; });
    return out;
}

std::vector<Feature> find_subdivided_stars(const Graph& g) {
    std::set<std::pair<int, int>> bridges = bridge_edges(g);
    std::vector<Feature> out;
    for (const auto& [u, nbrs] : g.adjacency()) {
        std::vector<int> leaves;
        std::vector<std::pair<int, int>> legs;  // (mid, tip)
        for (int x : nbrs) {
            if (g.degree(x) == 1) {
                leaves.push_back(x);
            } else if (g.degree(x) == 2) {
                int y = -1;
                for (int z : g.neighbors(x))
                    if (z != u) y = z;
                if (g.degree(y) == 1) legs.push_back({x, y});
            }
        }
        if (legs.empty()) continue;
        int s = static_cast<int>(legs.size()), t = static_cast<int>(leaves.size());
        int host_deg = g.degree(u) - s - t;
        bool on_cycle = false;
        if (host_deg == 2) {
            on_cycle = true;
            std::set<int> star_nbrs(leaves.begin(), leaves.end());
            for (auto [mid, _] : legs) star_nbrs.insert(mid);
            for (int x : nbrs)
                if (!star_nbrs.count(x) && bridges.count({std::min(u, x), std::max(u, x)}))
                    on_cycle = false;
        }
        Feature f;
        f.kind = FeatureKind::subdivided_star_at_cycle;
        f.anchors.push_back(u);
        for (auto [mid, tip] : legs) {
            f.anchors.push_back(mid);
            f.anchors.push_back(tip);
        }
        f.anchors.insert(f.anchors.end(), leaves.begin(), leaves.end());
        f.params["s"] = s;
        f.params["t"] = t;
        f.params["on_cycle_deg2"] = on_cycle ? 1 : 0;
        out.push_back(std::move(f));
    }
    return out;  // ascending by center already
}

namespace {

// tree attachments at u: components of G-u that are acyclic and joined to u by
// a single edge; returns their union (empty when none)
std::set<int> tree_part_at(const Graph& g, int u) {
    Graph rest = delete_vertices(g, {u});
    std::set<int> part;
    for (const std::set<int>& comp : connected_components(rest)) {
        int edges_to_u = 0;
        for (int w : g.neighbors(u))
            if (comp.count(w)) ++edges_to_u;
        if (edges_to_u != 1) continue;
        long long inner_edges = 0;
        for (int v : comp)
            for (int w : g.neighbors(v))
                if (w != u && comp.count(w)) ++inner_edges;
        inner_edges /= 2;
        if (inner_edges == static_cast<long long>(comp.size()) - 1)
            part.insert(comp.begin(), comp.end());
    }
    return part;
}

// BFS distances from src inside the vertex set `allowed`
std::map<int, int> dist_within(const Graph& g, int src, const std::set<int>& allowed) {
    std::map<int, int> dist{{src, 0}};
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (allowed.count(w) && !dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

std::vector<Feature> find_hanging_trees(const Graph& g) {
    std::vector<Feature> out;
    for (const auto& [u, _] : g.adjacency()) {
        std::set<int> part = tree_part_at(g, u);
        if (part.empty()) continue;
        if (g.vertex_count() - static_cast<int>(part.size()) < 2) continue;  // host trivial

        std::set<int> tree = part;
        tree.insert(u);
        std::map<int, int> from_root = dist_within(g, u, tree);
        int h = 0, far = u;
        for (const auto& [v, dv] : from_root)
            if (dv > h) h = dv, far = v;
        std::map<int, int> from_far = dist_within(g, far, tree);
        int diam = 0;
        for (const auto& [_, dv] : from_far) diam = std::max(diam, dv);

        Feature f;
        f.kind = FeatureKind::hanging_tree;
        f.anchors.push_back(u);
        f.anchors.insert(f.anchors.end(), part.begin(), part.end());
        f.params["h"] = h;
        f.params["radius"] = (diam + 1) / 2;
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Feature> hanging_trees(const Graph& g, const std::vector<int>& cycle) {
    CactusDecomposition d = decompose_cactus(g);
    if (match_cycle_block(d, cycle) < 0)
        throw precondition_error("hanging_trees: given cycle is not a cycle block");
    std::set<int> on_cycle(cycle.begin(), cycle.end());
    std::vector<Feature> out;
    for (Feature& f : find_hanging_trees(g))
        if (on_cycle.count(f.anchors.front())) out.push_back(std::move(f));
    return out;
}

bool revalidate(const Graph& g, const Feature& f) {
    std::vector<Feature> current;
    switch (f.kind) {
        case FeatureKind::strong_support: current = find_strong_supports(g); break;
        case FeatureKind::pendant_p4: current = find_pendant_p4(g); break;
        case FeatureKind::induced_p5_deg2: current = find_induced_p5_deg2(g); break;
        case FeatureKind::subdivided_star_at_cycle: current = find_subdivided_stars(g); break;
        case FeatureKind::hanging_tree: current = find_hanging_trees(g); break;
    }
    for (const Feature& c : current)
        if (c.anchors == f.anchors && c.params == f.params) return true;
    return false;
}

}  // namespace twodom
