#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <queue>
#include <vector>

#include "twodom/errors.hpp"
#include "twodom/invariants.hpp"
#include "twodom/structure.hpp"

namespace twodom {

namespace {

constexpr int kInf = 1 << 29;

// partial solution restricted to a processed subgraph, with its witness
struct Best {
    int size = kInf;
    std::vector<int> verts;
    bool ok() const { return size < kInf; }
};

void relax(Best& dst, const Best& src) {
    if (src.size < dst.size) dst = src;
}

Best combine(const Best& a, const Best& b) {
    if (!a.ok() || !b.ok()) return {};
    Best r;
    r.size = a.size + b.size;
    r.verts = a.verts;
    r.verts.insert(r.verts.end(), b.verts.begin(), b.verts.end());
    return r;
}

// per-vertex DP cell over the already-merged blocks hanging below it:
// in    = v in S
// out[j]= v outside S with j neighbors in S below (j = 2 means >= 2)
struct Cell {
    Best in;
    std::array<Best, 3> out;
};

Cell base_cell(int v) {
    Cell c;
    c.in = {1, {v}};
    c.out[0] = {0, {}};
    return c;
}

// chain DP state over the non-anchor cycle vertices c1..cq:
// index f*4 + s; f = whether c1 is in S, s = 0 for "current vertex in S",
// 1+j for "current vertex outside with j known neighbors in S"
using ChainStates = std::array<Best, 8>;

// runs the cycle chain for a fixed anchor status; fills either `anchor_in`
// (cost of the whole cycle minus anchor, all non-anchor constraints met) or
// `anchor_out[gain]` (same, with `gain` cycle-neighbors of the anchor in S)
struct ChainResult {
    Best anchor_in;                    // valid when anchor is in S
    std::array<Best, 3> anchor_out;    // by anchor coverage gained from the cycle
};

ChainResult run_cycle_chain(const std::vector<const Cell*>& chain, bool anchor_in) {
    ChainStates st;
    const Cell& c1 = *chain.front();
    relax(st[1 * 4 + 0], c1.in);
    for (int k = 0; k <= 2; ++k) {
        if (!c1.out[k].ok()) continue;
        int j = std::min(2, k + (anchor_in ? 1 : 0));
        relax(st[0 * 4 + 1 + j], c1.out[k]);
    }

    for (size_t i = 1; i < chain.size(); ++i) {
        const Cell& ci = *chain[i];
        ChainStates nxt;
        for (int f = 0; f <= 1; ++f)
            for (int s = 0; s <= 3; ++s) {
                const Best& cur = st[f * 4 + s];
                if (!cur.ok()) continue;
                // previous vertex leaves the frontier now; if it is outside S
                // its coverage must close at 2 counting the new vertex
                bool prev_in = (s == 0);
                int prev_j = prev_in ? 0 : s - 1;
                if (prev_in || prev_j >= 1)  // next-in grants the missing +1
                    relax(nxt[f * 4 + 0], combine(cur, ci.in));
                if (prev_in || prev_j == 2)
                    for (int k = 0; k <= 2; ++k) {
                        int j = std::min(2, k + (prev_in ? 1 : 0));
                        relax(nxt[f * 4 + 1 + j], combine(cur, ci.out[k]));
                    }
            }
        st = std::move(nxt);
    }

    ChainResult res;
    for (int f = 0; f <= 1; ++f)
        for (int s = 0; s <= 3; ++s) {
            const Best& cur = st[f * 4 + s];
            if (!cur.ok()) continue;
            bool last_in = (s == 0);
            if (!last_in && std::min(2, (s - 1) + (anchor_in ? 1 : 0)) < 2) continue;
            if (anchor_in) {
                relax(res.anchor_in, cur);
            } else {
                int gain = f + (last_in ? 1 : 0);
                relax(res.anchor_out[gain], cur);
            }
        }
    return res;
}

}  // namespace

DominationCertificate gamma2_cactus(const Graph& g) {
    if (g.empty()) throw precondition_error("gamma2_cactus: graph is empty");
    if (!is_connected(g)) throw precondition_error("gamma2_cactus: graph is not connected");
    CactusDecomposition dec = decompose_cactus(g);  // structure_error if not a cactus

    int root = g.adjacency().begin()->first;
    std::map<int, int> depth{{root, 0}};
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (!depth.count(w)) {
                depth[w] = depth[v] + 1;
                q.push(w);
            }
    }

    // each block attaches to the rest of the graph through its unique
    // shallowest vertex: process deepest anchors first
    struct Block {
        std::vector<int> verts;  // anchor first; cycles keep cyclic order
        bool cycle;
    };
    std::vector<Block> blocks;
    for (const auto& cyc : dec.cycle_blocks) {
        size_t a = 0;
        for (size_t i = 1; i < cyc.size(); ++i)
            if (depth.at(cyc[i]) < depth.at(cyc[a])) a = i;
        std::vector<int> rotated;
        for (size_t i = 0; i < cyc.size(); ++i) rotated.push_back(cyc[(a + i) % cyc.size()]);
        blocks.push_back({std::move(rotated), true});
    }
    for (auto [u, v] : dec.bridges) {
        if (depth.at(u) > depth.at(v)) std::swap(u, v);
        blocks.push_back({{u, v}, false});
    }
    std::stable_sort(blocks.begin(), blocks.end(), [&](const Block& x, const Block& y) {
        return depth.at(x.verts.front()) > depth.at(y.verts.front());
    });

    std::map<int, Cell> cell;
    for (int v : g.vertices()) cell.emplace(v, base_cell(v));

    for (const Block& b : blocks) {
        int a = b.verts.front();
        const Cell A = cell.at(a);
        Cell B;  // all infeasible; filled from A + block contribution

        if (!b.cycle) {
            const Cell& C = cell.at(b.verts[1]);
            Best child_when_in;  // child side when the anchor is in S
            relax(child_when_in, C.in);
            relax(child_when_in, C.out[1]);
            relax(child_when_in, C.out[2]);
            B.in = combine(A.in, child_when_in);
            for (int j = 0; j <= 2; ++j) {
                if (!A.out[j].ok()) continue;
                relax(B.out[std::min(2, j + 1)], combine(A.out[j], C.in));
                relax(B.out[j], combine(A.out[j], C.out[2]));
            }
        } else {
            std::vector<const Cell*> chain;
            for (size_t i = 1; i < b.verts.size(); ++i) chain.push_back(&cell.at(b.verts[i]));
            ChainResult in_res = run_cycle_chain(chain, true);
            ChainResult out_res = run_cycle_chain(chain, false);
            B.in = combine(A.in, in_res.anchor_in);
            for (int j = 0; j <= 2; ++j) {
                if (!A.out[j].ok()) continue;
                for (int gain = 0; gain <= 2; ++gain) {
                    if (!out_res.anchor_out[gain].ok()) continue;
                    relax(B.out[std::min(2, j + gain)],
                          combine(A.out[j], out_res.anchor_out[gain]));
                }
            }
        }
        cell.at(a) = std::move(B);
    }

    const Cell& rc = cell.at(root);
    Best best = rc.in;
    relax(best, rc.out[2]);
    assert(best.ok());

    DominationCertificate cert;
    cert.backend = Gamma2Backend::cactus_dp;
    cert.gamma2 = best.size;
    cert.witness = std::set<int>(best.verts.begin(), best.verts.end());
    assert(static_cast<int>(cert.witness.size()) == cert.gamma2);
    assert(is_2_dominating(g, cert.witness));
    return cert;
}

}  // namespace twodom
