#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twodom/graph.hpp"
#include "twodom/invariants.hpp"
#include "twodom/structure.hpp"

namespace twodom {

// Graph rewrite rules with verified coupling between gamma2 and the
// annihilation number. Each rule carries an offset s with
//   gamma2(G) <= gamma2(G') + s   and   a(G) >= a(G') + s
// (s = 0 for L3_2_i, where only the monotone directions hold), so that
// gamma2(G') <= a(G') + 1 implies gamma2(G) <= a(G) + 1. Rules with unknown
// offsets (L3_1 and the base trims) still preserve that end implication.
enum class Rule {
    L3_1,       // remove a strong support vertex together with all its leaves
    L3_2_i,     // d* <= 2: delete a cycle edge at a vertex of degree >= 3
    L3_2_ii,    // contract an induced P5 with three inner degree-2 vertices
    L3_2_iii,   // remove a pendant P4's three outer vertices
    L3_4,       // trim a hanging tree of height >= 3 below its deepest branch
    L3_5,       // remove a subdivided star rooted at a degree-2 cycle vertex
    tree_trim,  // base case: remove the smallest-id leaf of a tree
    cycle_trim  // base case: delete the canonical edge of a cycle
};

std::string rule_name(Rule r);

struct ReductionStep {
    Rule rule = Rule::tree_trim;
    std::vector<std::pair<std::string, int>> anchors;  // role -> vertex id
    std::vector<int> removed_vertices;                 // ascending
    std::vector<std::pair<int, int>> removed_edges;    // every edge lost, canonical
    std::vector<std::pair<int, int>> added_edges;
    std::optional<int> offset_s;  // empty when the rule's offset is unknown
    long long f_before = 0;
    long long f_after = 0;
};

// replay: delete removed_edges, then removed_vertices, then insert added_edges
Graph apply_step(const Graph& g, const ReductionStep& step);

// Direct rule applications. Preconditions are the structural ones stated per
// rule; violations throw precondition_error with the failed condition named.
// The engine additionally gates L3_2_ii/L3_2_iii/L3_4 on d*(G) >= 3 (the
// regime in which their offsets are guaranteed); direct calls do not.
ReductionStep apply_L3_1(const Graph& g, int support);           // >= 2 leaf nbrs; G' connected, nontrivial
ReductionStep apply_L3_2_i(const Graph& g);                      // d* <= 2; not a tree/cycle
ReductionStep apply_L3_2_ii(const Graph& g, const Feature& f);   // induced_p5_deg2 feature
ReductionStep apply_L3_2_iii(const Graph& g, const Feature& f);  // pendant_p4 feature
ReductionStep apply_L3_4(const Graph& g, const Feature& f);      // hanging_tree feature, h >= 3
ReductionStep apply_L3_5(const Graph& g, const Feature& f);      // star feature, s >= 2, on-cycle center
ReductionStep tree_trim(const Graph& g);                         // tree, n >= 3
ReductionStep cycle_trim(const Graph& g);                        // cycle, n >= 3

// Exact re-check of the inequalities a step promises. The offset flags are
// empty when offset_s is unknown; all flags are empty (complete = false) when
// the solver budget runs out on either side.
struct StepVerification {
    std::optional<bool> gamma2_inequality_ok;  // gamma2(G) <= gamma2(G') + s
    std::optional<bool> a_inequality_ok;       // a(G) >= a(G') + s
    std::optional<bool> end_implication_ok;    // conjecture on G' implies it on G
    bool complete = false;
    bool all_ok() const;  // no flag is false
};

StepVerification verify_step(const Graph& g, const ReductionStep& step, const Graph& g_after,
                             long long node_budget = kDefaultNodeBudget);

enum class TerminalReason { base_case_k2, tree, cycle, no_rule_applies };
std::string terminal_reason_name(TerminalReason r);

struct ReduceOptions {
    // stop once the graph is a tree or a cycle instead of trimming it to K2
    bool stop_at_base_classes = false;
};

struct ReductionTrace {
    Graph initial;
    std::vector<ReductionStep> steps;
    Graph terminal;
    TerminalReason terminal_reason = TerminalReason::no_rule_applies;
};

// Applies the first applicable rule in the fixed priority order
//   L3_1, L3_2_i, L3_2_ii, L3_2_iii, L3_4, L3_5, tree_trim, cycle_trim
// (anchor candidates tried in ascending id order) until K2, a stop class, or
// no rule applies. Requires G connected with n >= 2.
ReductionTrace reduce_trace(const Graph& g, const ReduceOptions& opts = {});

// one step per line: rule, anchors, f_before -> f_after; then the terminal
std::string write_trace_text(const ReductionTrace& t);

}  // namespace twodom
