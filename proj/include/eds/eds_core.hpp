#pragma once

#include <cassert>
#include <optional>

#include "eds/graph.hpp"

namespace eds {

// An efficient dominating set: the closed neighborhoods of its members
// partition V, equivalently |N[v] cap D| = 1 for every vertex v.
struct EdsCertificate {
    VertexSet members;
    bool operator==(const EdsCertificate& o) const { return members == o.members; }
    bool operator<(const EdsCertificate& o) const { return members < o.members; }
};

inline std::vector<int> domination_counts(const Graph& g, const VertexSet& d) {
    std::vector<int> cnt(g.n(), 0);
    for (Vertex v : d) {
        ++cnt[v];
        for (Vertex w : g.neighbors(v)) ++cnt[w];
    }
    return cnt;
}

inline bool is_eds(const Graph& g, const VertexSet& d) {
    for (Vertex v : d)
        if (v < 0 || v >= g.n()) return false;
    auto cnt = domination_counts(g, d);
    return std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; });
}

enum class BruteMode { First, All, Count };

struct BruteResult {
    std::vector<EdsCertificate> found; // empty in Count mode unless counting hits
    uint64_t count = 0;
    uint64_t nodes = 0;
};

namespace detail {

struct BruteSearch {
    const Graph& g;
    BruteMode mode;
    uint64_t budget;
    BruteResult res;
    std::vector<uint8_t> covered;
    VertexSet current;

    bool place(Vertex d) {
        if (covered[d]) return false;
        for (Vertex w : g.neighbors(d))
            if (covered[w]) return false;
        covered[d] = 1;
        for (Vertex w : g.neighbors(d)) covered[w] = 1;
        current.push_back(d);
        return true;
    }
    void unplace(Vertex d) {
        covered[d] = 0;
        for (Vertex w : g.neighbors(d)) covered[w] = 0;
        current.pop_back();
    }

    bool placeable(Vertex d) const {
        if (covered[d]) return false;
        for (Vertex w : g.neighbors(d))
            if (covered[w]) return false;
        return true;
    }

    // Branch on the uncovered vertex with the fewest placeable dominators
    // (lowest index on ties): exactly one member of its closed neighborhood
    // belongs to D, so each e.d.s. is enumerated once. A vertex with no
    // placeable dominator kills the branch outright.
    bool run() {
        if (res.nodes++ >= budget)
            throw Error(ErrorCode::BudgetExceeded, "oracle budget exhausted");
        Vertex x = -1;
        int best = g.n() + 2;
        for (Vertex v = 0; v < g.n(); ++v) {
            if (covered[v]) continue;
            int cnt = placeable(v) ? 1 : 0;
            for (Vertex w : g.neighbors(v)) cnt += placeable(w);
            if (cnt == 0) return false;
            if (cnt < best) {
                best = cnt;
                x = v;
                if (cnt == 1) break;
            }
        }
        if (x == -1) {
            ++res.count;
            if (mode != BruteMode::Count) {
                VertexSet d = current;
                std::sort(d.begin(), d.end());
                res.found.push_back({std::move(d)});
            }
            return mode == BruteMode::First;
        }
        // Candidates dominating x, ascending: x itself then its neighbors.
        VertexSet cands{x};
        for (Vertex w : g.neighbors(x)) cands.push_back(w);
        std::sort(cands.begin(), cands.end());
        for (Vertex d : cands) {
            if (!place(d)) continue;
            bool stop = run();
            unplace(d);
            if (stop) return true;
        }
        return false;
    }
};

} // namespace detail

// Exact e.d.s. enumeration by exact-cover backtracking over closed
// neighborhoods. Deterministic order; throws BudgetExceeded past the cap.
inline BruteResult brute_force_eds(const Graph& g, BruteMode mode = BruteMode::First,
                                   uint64_t budget = 100'000'000) {
    detail::BruteSearch s{g, mode, budget, {}, std::vector<uint8_t>(g.n(), 0), {}};
    s.run();
    return std::move(s.res);
}

// Partial-solution state for the forced-vertex reductions. Committing u
// removes N[u] from the residual graph and bars N^2(u) from D. The root is
// kept traversable so distance levels can be re-derived from it.
struct ReducedInstance {
    const Graph* g = nullptr;
    Vertex root = -1;
    VertexSet committed;                  // sorted, pairwise distance >= 3
    std::vector<uint8_t> dominated;       // union of N[committed]
    std::vector<uint8_t> removed_nonroot; // union of N[committed \ {root}]
    std::vector<uint8_t> excluded;        // barred from D (N^2 of committed, plus rule-derived)

    static ReducedInstance start(const Graph& g, Vertex v) {
        ReducedInstance r;
        r.g = &g;
        r.root = v;
        r.committed = {v};
        r.dominated.assign(g.n(), 0);
        r.removed_nonroot.assign(g.n(), 0);
        r.excluded.assign(g.n(), 0);
        r.dominated[v] = 1;
        for (Vertex w : g.neighbors(v)) r.dominated[w] = 1;
        for (Vertex w : g.neighbors(v))
            for (Vertex t : g.neighbors(w))
                if (!r.dominated[t]) r.excluded[t] = 1;
        return r;
    }

    bool in_residual(Vertex w) const { return w == root || !removed_nonroot[w]; }
};

// Commit u as a forced vertex. Returns nullopt on Conflict (u excluded or
// within distance 2 of something committed) -- a legitimate "no e.d.s. under
// current assumptions" outcome, not an error.
inline std::optional<ReducedInstance> apply_forced(const ReducedInstance& inst, Vertex u) {
    const Graph& g = *inst.g;
    if (inst.dominated[u] || inst.excluded[u]) return std::nullopt;
    ReducedInstance r = inst;
    insert_sorted(r.committed, u);
    r.dominated[u] = 1;
    r.removed_nonroot[u] = 1;
    for (Vertex w : g.neighbors(u)) {
        r.dominated[w] = 1;
        r.removed_nonroot[w] = 1;
    }
    for (Vertex w : g.neighbors(u))
        for (Vertex t : g.neighbors(w))
            if (!r.dominated[t]) r.excluded[t] = 1;
    return r;
}

// Distance levels of the root in the residual graph (the host minus N[u] for
// every committed u other than the root).
inline Levels residual_levels(const ReducedInstance& inst) {
    const Graph& g = *inst.g;
    Levels L;
    L.root = inst.root;
    L.level_of.assign(g.n(), -1);
    L.level_of[inst.root] = 0;
    L.strata.push_back({inst.root});
    VertexSet cur{inst.root};
    while (!cur.empty()) {
        VertexSet next;
        for (Vertex u : cur)
            for (Vertex w : g.neighbors(u))
                if (L.level_of[w] == -1 && inst.in_residual(w)) {
                    L.level_of[w] = static_cast<int>(L.strata.size());
                    next.push_back(w);
                }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        L.strata.push_back(next);
        cur = std::move(next);
    }
    return L;
}

struct RuleOutcome {
    bool no_eds = false;
    VertexSet forced;       // vertices committed by the rules, sorted
    ReducedInstance state;  // resulting instance (meaningful when !no_eds)
};

// Fixpoint of the v-forced rules, assuming the root is in D:
//   (i)  x in N_2 with no usable N_3 neighbor        -> no e.d.s. through root
//   (ii) x in N_2 with a unique usable N_3 neighbor  -> that neighbor forced
//   (iii) y in N_3 with no N_4 neighbor              -> y forced
//   (iv) two such N_3 vertices sharing an N_2 neighbor -> no e.d.s.
// Failure checks (i)/(iv) run before commitments; levels are re-derived from
// scratch after every commitment.
inline RuleOutcome v_forced_rules(const Levels& levels, const ReducedInstance& start) {
    assert(start.committed.size() == 1 && start.committed[0] == start.root);
    ReducedInstance inst = start;
    Levels L = levels;
    for (;;) {
        const VertexSet& n2 = L.stratum(2);
        const VertexSet& n3 = L.stratum(3);

        // (i): every undominated N_2 vertex needs a candidate dominator in N_3.
        std::optional<Vertex> unique_forced;
        for (Vertex x : n2) {
            int count = 0;
            Vertex last = -1;
            for (Vertex w : inst.g->neighbors(x))
                if (L.level_of[w] == 3 && !inst.excluded[w]) { ++count; last = w; }
            if (count == 0) return {true, {}, std::move(inst)};
            if (count == 1 && !unique_forced) unique_forced = last;
        }
        // (iv): two N_3 vertices, both without N_4 neighbors, sharing an
        // N_2 neighbor, would both be forced at distance 2.
        VertexSet no_next;
        for (Vertex y : n3) {
            bool has4 = false;
            for (Vertex w : inst.g->neighbors(y))
                if (L.level_of[w] == 4) { has4 = true; break; }
            if (!has4) no_next.push_back(y);
        }
        {
            std::vector<uint8_t> seen(inst.g->n(), 0);
            for (Vertex y : no_next) {
                for (Vertex w : inst.g->neighbors(y))
                    if (L.level_of[w] == 2) {
                        if (seen[w]) return {true, {}, std::move(inst)};
                        seen[w] = 1;
                    }
            }
        }
        Vertex to_commit = -1;
        if (unique_forced)
            to_commit = *unique_forced; // (ii)
        else if (!no_next.empty()) {
            Vertex y = no_next.front(); // (iii)
            if (inst.excluded[y]) return {true, {}, std::move(inst)};
            to_commit = y;
        }
        if (to_commit == -1) break;
        auto next = apply_forced(inst, to_commit);
        if (!next) return {true, {}, std::move(inst)};
        inst = std::move(*next);
        L = residual_levels(inst);
    }
    VertexSet forced;
    for (Vertex u : inst.committed)
        if (u != inst.root) forced.push_back(u);
    return {false, std::move(forced), std::move(inst)};
}

} // namespace eds
