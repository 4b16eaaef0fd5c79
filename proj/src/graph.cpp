#include "twodom/graph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <sstream>

#include "twodom/errors.hpp"

namespace twodom {

Graph Graph::with_vertices(int n) {
    if (n < 0) throw precondition_error("vertex count must be non-negative");
    Graph g;
    for (int v = 0; v < n; ++v) g.adj_[v];
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    return it != adj_.end() && it->second.count(v) > 0;
}

const std::set<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw precondition_error("unknown vertex id " + std::to_string(v));
    return it->second;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> vs;
    vs.reserve(adj_.size());
    for (const auto& [v, _] : adj_) vs.push_back(v);
    return vs;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(m_);
    for (const auto& [u, nbrs] : adj_)
        for (int v : nbrs)
            if (u < v) es.emplace_back(u, v);
    return es;  // map+set iteration already yields sorted canonical order
}

int Graph::min_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [_, nbrs] : adj_) {
        int k = static_cast<int>(nbrs.size());
        if (first || k < d) d = k;
        first = false;
    }
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& [_, nbrs] : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::leaf_count() const {
    int n1 = 0;
    for (const auto& [_, nbrs] : adj_)
        if (nbrs.size() == 1) ++n1;
    return n1;
}

GraphBuilder& GraphBuilder::add_vertex(int v) {
    if (v < 0) throw precondition_error("vertex ids must be non-negative");
    g_.adj_[v];
    return *this;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
    if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
    add_vertex(u);
    add_vertex(v);
    if (g_.adj_[u].count(v))
        throw precondition_error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    g_.adj_[u].insert(v);
    g_.adj_[v].insert(u);
    ++g_.m_;
    return *this;
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> ds;
    ds.reserve(g.vertex_count());
    for (const auto& [_, nbrs] : g.adjacency()) ds.push_back(static_cast<int>(nbrs.size()));
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<int> canonical_vertex_order(const Graph& g) {
    std::vector<int> order = g.vertices();
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) < g.degree(b); });
    return order;  // degree ascending, ties by id (ids were ascending already)
}

long long potential_f(const Graph& g) {
    return static_cast<long long>(g.vertex_count()) + 3LL * g.edge_count() + g.leaf_count();
}

Graph delete_vertices(const Graph& g, const std::set<int>& xs) {
    for (int v : xs)
        if (!g.has_vertex(v))
            throw precondition_error("delete_vertices: unknown vertex id " + std::to_string(v));
    GraphBuilder b;
    for (const auto& [v, _] : g.adjacency())
        if (!xs.count(v)) b.add_vertex(v);
    for (const auto& [u, v] : g.edges())
        if (!xs.count(u) && !xs.count(v)) b.add_edge(u, v);
    return b.build();
}

Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& es) {
    std::set<std::pair<int, int>> kill;
    for (auto [u, v] : es) {
        if (!g.has_edge(u, v))
            throw precondition_error("delete_edges: edge " + std::to_string(u) + " " +
                                     std::to_string(v) + " not present");
        kill.insert({std::min(u, v), std::max(u, v)});
    }
    GraphBuilder b;
    for (const auto& [v, _] : g.adjacency()) b.add_vertex(v);
    for (const auto& [u, v] : g.edges())
        if (!kill.count({u, v})) b.add_edge(u, v);
    return b.build();
}

Graph add_edges(const Graph& g, const std::vector<std::pair<int, int>>& es) {
    GraphBuilder b(g);
    for (auto [u, v] : es) {
        if (!g.has_vertex(u) || !g.has_vertex(v))
            throw precondition_error("add_edges: unknown endpoint in edge " + std::to_string(u) +
                                     " " + std::to_string(v));
        if (u == v) throw precondition_error("add_edges: self-loop at " + std::to_string(u));
        if (b.has_edge(u, v))
            throw precondition_error("add_edges: edge " + std::to_string(u) + " " +
                                     std::to_string(v) + " already present");
        b.add_edge(u, v);
    }
    return b.build();
}

bool is_connected(const Graph& g) {
    if (g.empty()) return true;  // convention; solvers still require n >= 1
    std::set<int> seen;
    std::vector<int> stack{g.adjacency().begin()->first};
    seen.insert(stack.back());
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v))
            if (seen.insert(w).second) stack.push_back(w);
    }
    return static_cast<int>(seen.size()) == g.vertex_count();
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_cycle_graph(const Graph& g) {
    if (g.vertex_count() < 3) return false;
    for (const auto& [_, nbrs] : g.adjacency())
        if (nbrs.size() != 2) return false;
    return is_connected(g);
}

std::vector<std::set<int>> connected_components(const Graph& g) {
    std::vector<std::set<int>> comps;
    std::set<int> seen;
    for (const auto& [s, _] : g.adjacency()) {
        if (seen.count(s)) continue;
        std::set<int> comp{s};
        std::vector<int> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (seen.insert(w).second) {
                    comp.insert(w);
                    stack.push_back(w);
                }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            return true;
        }
        ++lineno;
        return false;
    };

    auto parse_two_ints = [&](long long& a, long long& b, const char* what) {
        std::istringstream ls(line);
        std::string ta, tb, rest;
        if (!(ls >> ta >> tb) || (ls >> rest))
            throw parse_error(lineno, std::string("expected two integers (") + what + ")");
        try {
            size_t pa = 0, pb = 0;
            a = std::stoll(ta, &pa);
            b = std::stoll(tb, &pb);
            if (pa != ta.size() || pb != tb.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw parse_error(lineno, std::string("expected two integers (") + what + ")");
        }
    };

    if (!next_line()) throw parse_error(lineno, "missing header");
    long long n, m;
    parse_two_ints(n, m, "header 'n m'");
    if (n < 0 || m < 0) throw parse_error(lineno, "negative count in header");
    if (n > 50'000'000) throw parse_error(lineno, "vertex count too large");

    GraphBuilder b;
    for (long long v = 0; v < n; ++v) b.add_vertex(static_cast<int>(v));

    for (long long i = 0; i < m; ++i) {
        if (!next_line()) throw parse_error(lineno, "unexpected end of input: expected edge line");
        long long u, v;
        parse_two_ints(u, v, "edge 'u v'");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error(lineno, "vertex id out of range [0, n)");
        if (u == v) throw parse_error(lineno, "self-loop");
        if (b.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error(lineno, "duplicate edge");
        b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (next_line()) {
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (!blank) throw parse_error(lineno, "trailing content after edge list");
    }
    return b.build();
}

std::string write_edge_list(const Graph& g) {
    // ids compacted order-preservingly to 0..n-1 (the format requires ids < n)
    std::map<int, int> relabel;
    int next = 0;
    for (const auto& [v, _] : g.adjacency()) relabel[v] = next++;
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << relabel[u] << ' ' << relabel[v] << '\n';
    return out.str();
}

std::string write_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.empty()) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string graph_hash(const Graph& g) {
    const std::string s = write_edge_list(g);
    uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace twodom
