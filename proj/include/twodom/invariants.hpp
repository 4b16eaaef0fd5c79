#pragma once

#include <optional>
#include <set>
#include <string>

#include "twodom/graph.hpp"

namespace twodom {

// ---- annihilation number ----------------------------------------------------
//
// a(G) = largest k such that the k smallest degrees sum to at most m(G).
// The canonical optimal annihilation set is the greedy prefix of the
// (degree, id)-lexicographic vertex order; d* is the minimum degree outside
// that set, undefined when the set is all of V(G).

struct AnnihilationCertificate {
    int a = 0;
    std::set<int> canonical_set;
    long long degree_sum = 0;   // sum of degrees over canonical_set
    std::optional<int> d_star;  // empty iff canonical_set == V(G)
};

AnnihilationCertificate annihilation(const Graph& g);  // requires n >= 1

// ---- 2-domination -----------------------------------------------------------
//
// S is 2-dominating iff every vertex outside S has at least two neighbors in S.

bool is_2_dominating(const Graph& g, const std::set<int>& s);  // ids must exist

enum class Gamma2Backend { bruteforce, branch_and_bound, cactus_dp };
std::string backend_name(Gamma2Backend b);

struct DominationCertificate {
    int gamma2 = 0;
    std::set<int> witness;
    Gamma2Backend backend = Gamma2Backend::bruteforce;
};

inline constexpr int kBruteforceCap = 24;
inline constexpr long long kDefaultNodeBudget = 20'000'000;

// Reference oracle: exhaustive search by increasing candidate size, with
// degree<=1 vertices forced into every solution. Hard cap n <= 24.
DominationCertificate gamma2_bruteforce(const Graph& g);

// Exact branch and bound for arbitrary connected graphs; throws budget_error
// when the node budget runs out (distinct from precondition errors so a
// scanner can skip hard instances without aborting).
DominationCertificate gamma2_branch_and_bound(const Graph& g,
                                              long long node_budget = kDefaultNodeBudget);

// Exact linear-time solver for connected cacti via block-cut tree DP.
DominationCertificate gamma2_cactus(const Graph& g);

// Dispatch: cactus -> cactus_dp; else bruteforce when n <= 24, else B&B.
DominationCertificate gamma2(const Graph& g, long long node_budget = kDefaultNodeBudget);

// Deterministic greedy upper bound (valid 2-dominating set, not necessarily
// minimum); seeds the branch-and-bound incumbent.
std::set<int> greedy_2_dominating(const Graph& g);

// ---- conjecture gamma2(G) <= a(G) + 1 ---------------------------------------

struct ConjectureRecord {
    int gamma2 = 0;
    int a = 0;
    int gap = 0;  // gamma2 - a
    bool holds = false;
    Gamma2Backend backend = Gamma2Backend::bruteforce;
};

ConjectureRecord conjecture_check(const Graph& g,
                                  long long node_budget = kDefaultNodeBudget);  // connected, n >= 2

}  // namespace twodom
