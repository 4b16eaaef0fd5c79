#include "twodom/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "twodom/errors.hpp"

namespace twodom {

namespace {

void require_internal(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("reduction invariant violated: " + what);
}

std::pair<int, int> canon(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

// assembles a step from its diff, replays it, and enforces the invariants
// shared by every rule: the result is connected and nontrivial, f strictly
// decreases, and cactus inputs stay cacti
ReductionStep build_step(const Graph& g, Rule rule,
                         std::vector<std::pair<std::string, int>> anchors,
                         const std::set<int>& removed_vertices,
                         std::vector<std::pair<int, int>> extra_removed_edges,
                         std::vector<std::pair<int, int>> added_edges,
                         std::optional<int> offset) {
    ReductionStep step;
    step.rule = rule;
    step.anchors = std::move(anchors);
    step.removed_vertices.assign(removed_vertices.begin(), removed_vertices.end());
    step.offset_s = offset;

    std::set<std::pair<int, int>> lost;
    for (int v : removed_vertices)
        for (int w : g.neighbors(v)) lost.insert(canon(v, w));
    for (auto [u, v] : extra_removed_edges) lost.insert(canon(u, v));
    step.removed_edges.assign(lost.begin(), lost.end());
    for (auto [u, v] : added_edges) step.added_edges.push_back(canon(u, v));
    std::sort(step.added_edges.begin(), step.added_edges.end());

    step.f_before = potential_f(g);
    Graph after = apply_step(g, step);
    step.f_after = potential_f(after);

    if (after.vertex_count() < 2)
        throw precondition_error(rule_name(rule) + ": result graph is trivial");
    if (!is_connected(after))
        throw precondition_error(rule_name(rule) + ": result graph is disconnected");
    require_internal(step.f_after < step.f_before, rule_name(rule) + " must decrease f");
    if (is_cactus(g)) require_internal(is_cactus(after), rule_name(rule) + " must preserve cacti");
    return step;
}

}  // namespace

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::L3_1: return "L3_1";
        case Rule::L3_2_i: return "L3_2_i";
        case Rule::L3_2_ii: return "L3_2_ii";
        case Rule::L3_2_iii: return "L3_2_iii";
        case Rule::L3_4: return "L3_4";
        case Rule::L3_5: return "L3_5";
        case Rule::tree_trim: return "tree_trim";
        case Rule::cycle_trim: return "cycle_trim";
    }
    return "?";
}

std::string terminal_reason_name(TerminalReason r) {
    switch (r) {
        case TerminalReason::base_case_k2: return "base_case_k2";
        case TerminalReason::tree: return "tree";
        case TerminalReason::cycle: return "cycle";
        case TerminalReason::no_rule_applies: return "no_rule_applies";
    }
    return "?";
}

Graph apply_step(const Graph& g, const ReductionStep& step) {
    Graph h = delete_edges(g, step.removed_edges);
    h = delete_vertices(h, std::set<int>(step.removed_vertices.begin(), step.removed_vertices.end()));
    return add_edges(h, step.added_edges);
}

ReductionStep apply_L3_1(const Graph& g, int support) {
    if (!g.has_vertex(support)) throw precondition_error("L3_1: unknown vertex id");
    if (g.vertex_count() < 4) throw precondition_error("L3_1: graph too small");
    std::set<int> removed{support};
    std::vector<std::pair<std::string, int>> anchors{{"support", support}};
    int leaves = 0;
    for (int w : g.neighbors(support))
        if (g.degree(w) == 1) {
            removed.insert(w);
            anchors.push_back({"leaf", w});
            ++leaves;
        }
    if (leaves < 2) throw precondition_error("L3_1: vertex has fewer than two leaf neighbors");
    return build_step(g, Rule::L3_1, std::move(anchors), removed, {}, {}, std::nullopt);
}

ReductionStep apply_L3_2_i(const Graph& g) {
    if (!is_connected(g) || g.vertex_count() < 3) throw precondition_error("L3_2_i: graph too small or disconnected");
    if (is_tree(g)) throw precondition_error("L3_2_i: input is a tree (use tree_trim)");
    if (is_cycle_graph(g)) throw precondition_error("L3_2_i: input is a cycle (use cycle_trim)");
    AnnihilationCertificate cert = annihilation(g);
    if (!cert.d_star || *cert.d_star > 2)
        throw precondition_error("L3_2_i: d* exceeds 2, rule does not apply");

    std::set<std::pair<int, int>> bridges = bridge_edges(g);
    for (const auto& [v, nbrs] : g.adjacency()) {
        if (static_cast<int>(nbrs.size()) < 3) continue;
        for (int u : nbrs) {
            if (bridges.count(canon(u, v))) continue;  // cycle edges only
            return build_step(g, Rule::L3_2_i, {{"v", v}, {"u", u}}, {}, {{v, u}}, {}, 0);
        }
    }
    throw precondition_error("L3_2_i: no cycle edge at a vertex of degree >= 3");
}

ReductionStep apply_L3_2_ii(const Graph& g, const Feature& f) {
    if (f.kind != FeatureKind::induced_p5_deg2) throw precondition_error("L3_2_ii: wrong feature kind");
    if (!revalidate(g, f)) throw precondition_error("L3_2_ii: stale feature");
    int v = f.anchors[0], u1 = f.anchors[1], u2 = f.anchors[2], u3 = f.anchors[3], w = f.anchors[4];
    require_internal(!g.has_edge(v, w), "L3_2_ii endpoints already adjacent");
    ReductionStep step = build_step(
        g, Rule::L3_2_ii,
        {{"v", v}, {"u1", u1}, {"u2", u2}, {"u3", u3}, {"w", w}},
        {u1, u2, u3}, {}, {{v, w}}, 2);
    require_internal(step.f_after == step.f_before - 12, "L3_2_ii must drop f by exactly 12");
    return step;
}

ReductionStep apply_L3_2_iii(const Graph& g, const Feature& f) {
    if (f.kind != FeatureKind::pendant_p4) throw precondition_error("L3_2_iii: wrong feature kind");
    if (!revalidate(g, f)) throw precondition_error("L3_2_iii: stale feature");
    int u1 = f.anchors[0], u2 = f.anchors[1], u3 = f.anchors[2], v = f.anchors[3];
    ReductionStep step = build_step(g, Rule::L3_2_iii,
                                    {{"u1", u1}, {"u2", u2}, {"u3", u3}, {"v", v}},
                                    {u1, u2, u3}, {}, {}, 2);
    require_internal(static_cast<int>(step.removed_edges.size()) == 3, "L3_2_iii must drop m by 3");
    return step;
}

ReductionStep apply_L3_4(const Graph& g, const Feature& f) {
    if (f.kind != FeatureKind::hanging_tree) throw precondition_error("L3_4: wrong feature kind");
    if (!revalidate(g, f)) throw precondition_error("L3_4: stale feature");
    if (f.params.at("h") < 3) throw precondition_error("L3_4: hanging tree shallower than 3");

    int root = f.anchors[0];
    std::set<int> tree(f.anchors.begin(), f.anchors.end());
    std::map<int, int> parent{{root, -1}}, depth{{root, 0}};
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x))
            if (tree.count(y) && !depth.count(y)) {
                depth[y] = depth[x] + 1;
                parent[y] = x;
                q.push(y);
            }
    }
    int v1 = root;
    for (const auto& [x, d] : depth)  // deepest vertex, smallest id on ties
        if (d > depth[v1]) v1 = x;
    int v2 = parent.at(v1), v3 = parent.at(v2), v4 = parent.at(v3);
    if (g.degree(v2) >= 3)
        throw precondition_error("L3_4: deepest branch carries a strong support (use L3_1)");

    std::vector<std::pair<std::string, int>> anchors{{"v1", v1}, {"v2", v2}, {"v3", v3}, {"v4", v4}};
    std::vector<std::pair<int, int>> reattach;
    for (int w : g.neighbors(v3))
        if (w != v2 && w != v4) {
            anchors.push_back({"w", w});
            reattach.push_back({w, v4});
        }
    ReductionStep step = build_step(g, Rule::L3_4, std::move(anchors), {v1, v2, v3}, {}, reattach, 2);
    require_internal(static_cast<int>(step.removed_edges.size() - step.added_edges.size()) == 3,
                     "L3_4 must drop m by 3");
    return step;
}

ReductionStep apply_L3_5(const Graph& g, const Feature& f) {
    if (f.kind != FeatureKind::subdivided_star_at_cycle) throw precondition_error("L3_5: wrong feature kind");
    if (!revalidate(g, f)) throw precondition_error("L3_5: stale feature");
    int s = f.params.at("s"), t = f.params.at("t");
    if (s < 2) throw precondition_error("L3_5: fewer than two subdivided legs");
    if (f.params.at("on_cycle_deg2") != 1)
        throw precondition_error("L3_5: center is not a degree-2 cycle vertex of the host");

    int center = f.anchors[0];
    std::set<int> removed(f.anchors.begin(), f.anchors.end());
    std::vector<std::pair<std::string, int>> anchors{{"center", center}};
    for (int i = 0; i < s; ++i) {
        anchors.push_back({"mid", f.anchors[1 + 2 * i]});
        anchors.push_back({"tip", f.anchors[2 + 2 * i]});
    }
    for (int i = 0; i < t; ++i) anchors.push_back({"leaf", f.anchors[1 + 2 * s + i]});

    ReductionStep step = build_step(g, Rule::L3_5, std::move(anchors), removed, {}, {}, s + t + 1);
    require_internal(static_cast<int>(step.removed_edges.size()) == 2 * s + t + 2,
                     "L3_5 must drop m by 2s+t+2");
    return step;
}

ReductionStep tree_trim(const Graph& g) {
    if (!is_tree(g)) throw precondition_error("tree_trim: input is not a tree");
    if (g.vertex_count() < 3) throw precondition_error("tree_trim: graph is already a terminal base case");
    for (const auto& [v, nbrs] : g.adjacency())
        if (nbrs.size() == 1)
            return build_step(g, Rule::tree_trim, {{"leaf", v}}, {v}, {}, {}, std::nullopt);
    throw precondition_error("tree_trim: no leaf found");  // unreachable on trees
}

ReductionStep cycle_trim(const Graph& g) {
    if (!is_cycle_graph(g)) throw precondition_error("cycle_trim: input is not a cycle");
    int v = g.adjacency().begin()->first;
    int u = *g.neighbors(v).begin();
    return build_step(g, Rule::cycle_trim, {{"v", v}, {"u", u}}, {}, {{v, u}}, {}, std::nullopt);
}

bool StepVerification::all_ok() const {
    auto fine = [](const std::optional<bool>& x) { return !x.has_value() || *x; };
    return fine(gamma2_inequality_ok) && fine(a_inequality_ok) && fine(end_implication_ok);
}

StepVerification verify_step(const Graph& g, const ReductionStep& step, const Graph& g_after,
                             long long node_budget) {
    StepVerification r;
    try {
        int g2_before = gamma2(g, node_budget).gamma2;
        int g2_after = gamma2(g_after, node_budget).gamma2;
        int a_before = annihilation(g).a;
        int a_after = annihilation(g_after).a;
        if (step.offset_s) {
            r.gamma2_inequality_ok = g2_before <= g2_after + *step.offset_s;
            r.a_inequality_ok = a_before >= a_after + *step.offset_s;
        }
        r.end_implication_ok = (g2_after > a_after + 1) || (g2_before <= a_before + 1);
        r.complete = true;
    } catch (const budget_error&) {
        r.complete = false;
    }
    return r;
}

namespace {

// first applicable rule in priority order, or nullopt when none applies;
// the d* >= 3 gate keeps L3_2_ii/iii/L3_4 inside the regime where their
// offsets are valid (L3_2_i has priority whenever d* <= 2)
std::optional<ReductionStep> next_step(const Graph& g) {
    for (const Feature& f : find_strong_supports(g)) {
        try {
            return apply_L3_1(g, f.anchors.front());
        } catch (const precondition_error&) {
        }
    }
    try {
        return apply_L3_2_i(g);
    } catch (const precondition_error&) {
    }

    AnnihilationCertificate cert = annihilation(g);
    bool dstar_high = !cert.d_star.has_value() || *cert.d_star >= 3;
    if (dstar_high) {
        for (const Feature& f : find_induced_p5_deg2(g)) {
            try {
                return apply_L3_2_ii(g, f);
            } catch (const precondition_error&) {
            }
        }
        for (const Feature& f : find_pendant_p4(g)) {
            try {
                return apply_L3_2_iii(g, f);
            } catch (const precondition_error&) {
            }
        }
        for (const Feature& f : find_hanging_trees(g)) {
            try {
                return apply_L3_4(g, f);
            } catch (const precondition_error&) {
            }
        }
    }
    for (const Feature& f : find_subdivided_stars(g)) {
        try {
            return apply_L3_5(g, f);
        } catch (const precondition_error&) {
        }
    }
    try {
        return tree_trim(g);
    } catch (const precondition_error&) {
    }
    try {
        return cycle_trim(g);
    } catch (const precondition_error&) {
    }
    return std::nullopt;
}

}  // namespace

ReductionTrace reduce_trace(const Graph& g, const ReduceOptions& opts) {
    if (g.vertex_count() < 2) throw precondition_error("reduce_trace: graph is trivial");
    if (!is_connected(g)) throw precondition_error("reduce_trace: graph is disconnected");

    ReductionTrace trace;
    trace.initial = g;
    Graph cur = g;
    long long fuel = potential_f(g) + g.vertex_count() + 8;
    for (;;) {
        if (cur.vertex_count() == 2) {
            trace.terminal_reason = TerminalReason::base_case_k2;
            break;
        }
        if (opts.stop_at_base_classes && is_tree(cur)) {
            trace.terminal_reason = TerminalReason::tree;
            break;
        }
        if (opts.stop_at_base_classes && is_cycle_graph(cur)) {
            trace.terminal_reason = TerminalReason::cycle;
            break;
        }
        std::optional<ReductionStep> step = next_step(cur);
        if (!step) {
            trace.terminal_reason = TerminalReason::no_rule_applies;
            break;
        }
        cur = apply_step(cur, *step);
        trace.steps.push_back(std::move(*step));
        require_internal(--fuel > 0, "reduce_trace failed to terminate");
    }
    trace.terminal = cur;
    return trace;
}

std::string write_trace_text(const ReductionTrace& t) {
    std::ostringstream out;
    for (const ReductionStep& s : t.steps) {
        out << rule_name(s.rule);
        for (const auto& [role, id] : s.anchors) out << ' ' << role << '=' << id;
        out << " | f " << s.f_before << " -> " << s.f_after;
        if (s.offset_s)
            out << " | s=" << *s.offset_s;
        else
            out << " | s=unknown";
        out << '\n';
    }
    out << "terminal " << terminal_reason_name(t.terminal_reason) << " n=" << t.terminal.vertex_count()
        << " m=" << t.terminal.edge_count() << '\n';
    return out.str();
}

}  // namespace twodom
