#pragma once

// Shared fixtures and independent oracles for the test suite. The oracles
// here deliberately re-derive everything from first principles (subset
// enumeration, all-pairs BFS, permutation isomorphism) so library results
// can be checked against a second, unrelated computation path.

#include <functional>
#include <map>

#include "eds/eds.hpp"

namespace th {

using eds::Graph;
using eds::Vertex;
using eds::VertexSet;

inline Graph path_graph(int k) { return eds::Pattern::path(k).graph(); }
inline Graph cycle_graph(int k) { return eds::Pattern::cycle(k).graph(); }
inline Graph spider_graph(int i, int j, int k) { return eds::Pattern::spider(i, j, k).graph(); }

inline Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return eds::build_graph(a + b, es);
}

inline Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

inline Graph random_graph(int n, double p, uint64_t seed) {
    eds::Xoshiro256ss rng(seed);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.unit() < p) es.emplace_back(i, j);
    return eds::build_graph(n, es);
}

inline Graph random_bipartite(int nx, int ny, double p, uint64_t seed) {
    eds::GenSpec spec;
    spec.kind = eds::GenSpec::Kind::RandomBipartite;
    spec.nx = nx;
    spec.ny = ny;
    spec.edge_prob = p;
    spec.seed = seed;
    return *eds::generate(spec).graph;
}

// Independent e.d.s. check: count dominators per vertex by direct scan.
inline bool subset_is_eds(const Graph& g, const VertexSet& d) {
    std::vector<uint8_t> in(g.n(), 0);
    for (Vertex v : d) in[v] = 1;
    for (Vertex v = 0; v < g.n(); ++v) {
        int c = in[v];
        for (Vertex w : g.neighbors(v)) c += in[w];
        if (c != 1) return false;
    }
    return true;
}

// Full 2^n subset enumeration; the reference oracle for small graphs.
inline std::vector<VertexSet> all_eds_by_subsets(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.n();
    if (n > 24) throw std::runtime_error("subset oracle limited to n <= 24");
    std::vector<uint32_t> closed(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= 1u << w;
    }
    const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (uint32_t mask = 0; mask <= full; ++mask) {
        uint32_t cover = 0;
        int total = 0;
        bool ok = true;
        for (Vertex v = 0; v < n && ok; ++v)
            if (mask >> v & 1) {
                if (cover & closed[v]) ok = false;
                cover |= closed[v];
                total += __builtin_popcount(closed[v]);
            }
        if (ok && cover == full && total == n) {
            VertexSet d;
            for (Vertex v = 0; v < n; ++v)
                if (mask >> v & 1) d.push_back(v);
            out.push_back(std::move(d));
        }
        if (mask == full) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// All-pairs distances by BFS; reference for square().
inline std::vector<std::vector<int>> all_pairs_dist(const Graph& g) {
    std::vector<std::vector<int>> d(g.n());
    for (Vertex s = 0; s < g.n(); ++s) {
        auto L = eds::distance_levels(g, s);
        d[s] = L.level_of;
    }
    return d;
}

// Does the witness realize the pattern as an induced subgraph?
inline bool witness_matches(const Graph& g, const eds::Pattern& p, const eds::Witness& w) {
    Graph pg = p.graph();
    if (static_cast<int>(w.mapping.size()) != pg.n()) return false;
    VertexSet sorted = w.mapping;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (Vertex a = 0; a < pg.n(); ++a)
        for (Vertex b = a + 1; b < pg.n(); ++b)
            if (pg.has_edge(a, b) != g.has_edge(w.mapping[a], w.mapping[b])) return false;
    return true;
}

// Naive induced-subgraph detection: all k-subsets, all permutations.
inline bool naive_contains_induced(const Graph& g, const eds::Pattern& p) {
    Graph pg = p.graph();
    const int k = pg.n();
    if (k > g.n()) return false;
    VertexSet comb(k);
    std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
        if (idx == k) {
            VertexSet perm = comb;
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (int a = 0; a < k && ok; ++a)
                    for (int b = a + 1; b < k && ok; ++b)
                        if (pg.has_edge(a, b) != g.has_edge(perm[a], perm[b])) ok = false;
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int v = from; v < g.n(); ++v) {
            comb[idx] = v;
            if (choose(idx + 1, v + 1)) return true;
        }
        return false;
    };
    return choose(0, 0);
}

// A connected sample or nullopt.
inline std::optional<Graph> connected_sample(const Graph& g) {
    if (g.n() == 0 || !eds::is_connected(g)) return std::nullopt;
    return g;
}

// Random chain graph (nested neighborhoods), always 2K_2-free and hence
// P_5-free; handy for sampling shallow solver classes.
inline Graph random_chain_graph(int nx, int ny, uint64_t seed) {
    eds::Xoshiro256ss rng(seed);
    std::vector<int> cutoff(nx);
    for (int i = 0; i < nx; ++i) cutoff[i] = 1 + static_cast<int>(rng.below(ny));
    std::sort(cutoff.begin(), cutoff.end(), std::greater<int>());
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < cutoff[i]; ++j) es.emplace_back(i, nx + j);
    return eds::build_graph(nx + ny, es);
}

} // namespace th
