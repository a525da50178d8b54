#pragma once

#include <cassert>
#include <variant>

#include "eds/eds_core.hpp"

namespace eds {

// Stepwise construction state for an e.d.s. containing a root v, driven by
// the fixed BFS strata of v. At index i the committed set D_i is an e.d.s.
// of the subgraph induced by strata 0..i-1; members are pairwise at distance
// >= 3. Exclusion sets (N(D) and N^2(D)) are derived on demand from the
// committed set rather than maintained incrementally.
struct LevelState {
    const Graph* g = nullptr;
    Levels levels;
    int i = 2;
    VertexSet committed;            // D_i, sorted, contains the root
    std::vector<uint8_t> dominated; // union of N[D_i]

    int depth() const { return levels.depth(); }

    // N(D) union N^2(D) marks, freshly computed.
    std::vector<uint8_t> exclusion_marks() const {
        std::vector<uint8_t> ex(g->n(), 0);
        for (Vertex d : committed)
            for (Vertex w : g->neighbors(d)) {
                ex[w] = 1;
                for (Vertex t : g->neighbors(w)) ex[t] = 1;
            }
        for (Vertex d : committed) ex[d] = 0;
        return ex;
    }
};

inline LevelState init_state(const Graph& g, Vertex v) {
    LevelState st;
    st.g = &g;
    st.levels = distance_levels(g, v);
    st.i = 2;
    st.committed = {v};
    st.dominated.assign(g.n(), 0);
    st.dominated[v] = 1;
    for (Vertex w : g.neighbors(v)) st.dominated[w] = 1;
    return st;
}

// Frontier at index i: the still-undominated stratum-i vertices N'_i, the
// eligible candidate pool W_{i+1} one stratum deeper, and per-vertex
// candidate lists N(x) cap W_{i+1}.
struct Frontier {
    VertexSet undominated;                               // N'_i
    VertexSet pool;                                      // W_{i+1}
    std::vector<std::pair<Vertex, VertexSet>> candidates; // per x in N'_i
    bool has_empty = false;                              // some x has no candidate
};

inline Frontier frontier(const LevelState& st) {
    Frontier f;
    auto ex = st.exclusion_marks();
    for (Vertex x : st.levels.stratum(st.i))
        if (!st.dominated[x] && !contains_sorted(st.committed, x)) f.undominated.push_back(x);
    std::vector<uint8_t> in_pool(st.g->n(), 0);
    for (Vertex w : st.levels.stratum(st.i + 1))
        if (!st.dominated[w] && !ex[w]) {
            f.pool.push_back(w);
            in_pool[w] = 1;
        }
    for (Vertex x : f.undominated) {
        VertexSet c;
        for (Vertex w : st.g->neighbors(x))
            if (in_pool[w]) c.push_back(w);
        if (c.empty()) f.has_empty = true;
        f.candidates.emplace_back(x, std::move(c));
    }
    return f;
}

enum class ExtendError { NotExactlyOnce, DistanceViolation };

// Advance the state by one stratum with D-candidates Z subset of W_{i+1}.
// Z must dominate every frontier vertex exactly once and keep all committed
// vertices pairwise at distance >= 3.
inline std::variant<LevelState, ExtendError> extend(const LevelState& st, const VertexSet& Z) {
    const Graph& g = *st.g;
    auto ex = st.exclusion_marks();
    for (Vertex z : Z) {
        if (st.levels.level_of[z] != st.i + 1) return ExtendError::DistanceViolation;
        if (st.dominated[z] || ex[z]) return ExtendError::DistanceViolation;
    }
    // Pairwise distance >= 3 within Z: closed neighborhoods must not touch.
    {
        std::vector<int> owner(g.n(), -1);
        for (size_t zi = 0; zi < Z.size(); ++zi) {
            Vertex z = Z[zi];
            if (owner[z] != -1) return ExtendError::DistanceViolation;
            owner[z] = static_cast<int>(zi);
            for (Vertex w : g.neighbors(z)) {
                if (owner[w] != -1 && owner[w] != static_cast<int>(zi))
                    return ExtendError::DistanceViolation;
                owner[w] = static_cast<int>(zi);
            }
        }
    }
    // Exactness over N'_i.
    {
        std::vector<uint8_t> inz(g.n(), 0);
        for (Vertex z : Z) inz[z] = 1;
        for (Vertex x : st.levels.stratum(st.i)) {
            if (st.dominated[x] || contains_sorted(st.committed, x)) continue;
            int cnt = 0;
            for (Vertex w : g.neighbors(x)) cnt += inz[w];
            if (cnt != 1) return ExtendError::NotExactlyOnce;
        }
    }
    LevelState nxt = st;
    for (Vertex z : Z) {
        insert_sorted(nxt.committed, z);
        nxt.dominated[z] = 1;
        for (Vertex w : g.neighbors(z)) nxt.dominated[w] = 1;
    }
    nxt.i = st.i + 1;
    // Invariant: strata up to the old index are now fully dominated.
    for (int lvl = 0; lvl <= st.i; ++lvl)
        for (Vertex x : nxt.levels.stratum(lvl))
            assert(nxt.dominated[x]);
    return nxt;
}

struct DiForcedOutcome {
    bool no_eds = false;
    VertexSet forced;
};

// Stratum-level generalization of the v-forced rules: a frontier vertex with
// no candidate kills the branch; a unique candidate is forced; a pool vertex
// with no neighbor one stratum deeper can only dominate itself, so it is
// forced. At the last stratum this bulk-commits everything undominated.
inline DiForcedOutcome di_forced_candidates(const LevelState& st) {
    DiForcedOutcome out;
    Frontier f = frontier(st);
    if (f.has_empty) {
        out.no_eds = true;
        return out;
    }
    for (auto& [x, cands] : f.candidates)
        if (cands.size() == 1) insert_sorted(out.forced, cands[0]);
    for (Vertex u : f.pool) {
        bool deeper = false;
        for (Vertex w : st.g->neighbors(u))
            if (st.levels.level_of[w] == st.i + 2) { deeper = true; break; }
        if (!deeper) insert_sorted(out.forced, u);
    }
    return out;
}

} // namespace eds
