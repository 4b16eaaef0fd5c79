#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace twodom {

// Finite simple undirected graph with stable non-negative vertex ids.
// Ids survive deletions unchanged (no relabeling); adjacency is kept
// symmetric; no self-loops or parallel edges. Instances are immutable
// after construction — every transformation returns a new graph — so
// sharing across threads is safe.
class Graph {
public:
    Graph() = default;

    static Graph with_vertices(int n);  // ids 0..n-1, no edges

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }
    bool empty() const { return adj_.empty(); }

    bool has_vertex(int v) const { return adj_.count(v) > 0; }
    bool has_edge(int u, int v) const;

    const std::set<int>& neighbors(int v) const;  // throws precondition_error on unknown id
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    const std::map<int, std::set<int>>& adjacency() const { return adj_; }
    std::vector<int> vertices() const;                     // ascending
    std::vector<std::pair<int, int>> edges() const;        // canonical u<v, sorted

    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;
    int leaf_count() const;  // number of degree-1 vertices

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    friend class GraphBuilder;
    std::map<int, std::set<int>> adj_;
    int m_ = 0;
};

// Incremental construction; the only mutation surface in the module.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const Graph& g) : g_(g) {}

    GraphBuilder& add_vertex(int v);           // idempotent; v >= 0
    GraphBuilder& add_edge(int u, int v);      // adds endpoints as needed; rejects loops/duplicates
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
    bool has_vertex(int v) const { return g_.has_vertex(v); }
    Graph build() const { return g_; }

private:
    Graph g_;
};

// ---- core operations -------------------------------------------------------

std::vector<int> degree_sequence(const Graph& g);         // non-decreasing
std::vector<int> canonical_vertex_order(const Graph& g);  // by (degree, id); reused by annihilation

// potential f(G) = n + 3m + n1 (n1 = number of leaves); >= 7 for every
// nontrivial connected graph, strictly decreasing under the rewrite rules
long long potential_f(const Graph& g);

Graph delete_vertices(const Graph& g, const std::set<int>& xs);
Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& es);
Graph add_edges(const Graph& g, const std::vector<std::pair<int, int>>& es);

bool is_connected(const Graph& g);  // empty graph counts as connected
bool is_tree(const Graph& g);       // connected && m == n-1 (n >= 1)
bool is_cycle_graph(const Graph& g);// connected && every degree == 2 (n >= 3)

// components as vertex sets, ascending by smallest member
std::vector<std::set<int>> connected_components(const Graph& g);

// ---- serialization ---------------------------------------------------------
//
// Edge-list text format: first line "n m", then m lines "u v" with ids in
// [0, n). The writer emits canonical form (ids compacted order-preservingly
// to 0..n-1, edges sorted, u < v, LF endings); the parser accepts either
// endpoint order and reports 1-based line numbers on malformed input,
// out-of-range ids, self-loops and duplicate edges.

Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);
std::string write_dot(const Graph& g);  // best-effort Graphviz export

// FNV-1a over the canonical edge list; stable instance fingerprint for reports
std::string graph_hash(const Graph& g);

}  // namespace twodom
