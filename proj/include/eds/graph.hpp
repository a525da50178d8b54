#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <utility>

#include "eds/common.hpp"

namespace eds {

// Immutable undirected simple graph. Neighbor lists are sorted ascending.
// Optional per-vertex rational weights are carried through I/O only; no
// algorithm in this library consumes them.
class Graph {
public:
    Graph() = default;

    int n() const { return static_cast<int>(adj_.size()); }
    int m() const { return m_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    bool has_weights() const { return !weights_.empty(); }
    Rational weight(Vertex v) const {
        return weights_.empty() ? Rational{} : weights_[v];
    }
    void set_weight(Vertex v, Rational w) {
        if (weights_.empty()) weights_.assign(n(), Rational{});
        w.reduce();
        weights_[v] = w;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(m_);
        for (Vertex u = 0; u < n(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& o) const {
        return adj_ == o.adj_ && weights_ == o.weights_;
    }

    friend Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<Rational> weights_;
    int m_ = 0;
};

inline Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n < 0) throw Error(ErrorCode::OutOfRange, "vertex count must be nonnegative");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::OutOfRange,
                        "edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    int m = 0;
    for (auto& list : g.adj_) m += static_cast<int>(list.size());
    g.m_ = m / 2;
    return g;
}

// Two-coloring of each connected component. The lowest-index vertex of a
// component is placed Left.
struct Bipartition {
    enum Side : int { Left = 0, Right = 1 };
    std::vector<int> side;
    bool is_left(Vertex v) const { return side[v] == Left; }
};

// Throws Error(NotBipartite) carrying an odd-cycle witness.
inline Bipartition bipartition(const Graph& g) {
    Bipartition bp;
    bp.side.assign(g.n(), -1);
    std::vector<Vertex> parent(g.n(), -1);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (bp.side[s] != -1) continue;
        bp.side[s] = Bipartition::Left;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (bp.side[w] == -1) {
                    bp.side[w] = bp.side[u] ^ 1;
                    parent[w] = u;
                    q.push(w);
                } else if (bp.side[w] == bp.side[u]) {
                    // Reconstruct the odd cycle: walk both BFS paths to the
                    // root, trim to the common ancestor.
                    std::vector<Vertex> chain_u, chain_w;
                    for (Vertex t = u; t != -1; t = parent[t]) chain_u.push_back(t);
                    for (Vertex t = w; t != -1; t = parent[t]) chain_w.push_back(t);
                    std::reverse(chain_u.begin(), chain_u.end());
                    std::reverse(chain_w.begin(), chain_w.end());
                    size_t k = 0;
                    while (k + 1 < chain_u.size() && k + 1 < chain_w.size() &&
                           chain_u[k + 1] == chain_w[k + 1])
                        ++k;
                    VertexSet cycle;
                    for (size_t i = k; i < chain_u.size(); ++i) cycle.push_back(chain_u[i]);
                    for (size_t i = chain_w.size(); i-- > k + 1;) cycle.push_back(chain_w[i]);
                    throw Error(ErrorCode::NotBipartite, "graph is not bipartite", std::move(cycle));
                }
            }
        }
    }
    return bp;
}

inline bool is_bipartite(const Graph& g) {
    try {
        bipartition(g);
        return true;
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotBipartite) return false;
        throw;
    }
}

// BFS distance strata from a root. level_of[v] == -1 marks vertices outside
// the root's component.
struct Levels {
    Vertex root = 0;
    std::vector<VertexSet> strata; // strata[0] == {root}
    std::vector<int> level_of;

    int depth() const { return static_cast<int>(strata.size()) - 1; }
    const VertexSet& stratum(int i) const {
        static const VertexSet empty;
        if (i < 0 || i >= static_cast<int>(strata.size())) return empty;
        return strata[i];
    }
    bool all_reached() const {
        return std::find(level_of.begin(), level_of.end(), -1) == level_of.end();
    }
};

inline Levels distance_levels(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.n()) throw Error(ErrorCode::OutOfRange, "root out of range");
    Levels L;
    L.root = v;
    L.level_of.assign(g.n(), -1);
    L.level_of[v] = 0;
    L.strata.push_back({v});
    VertexSet cur{v};
    while (!cur.empty()) {
        VertexSet next;
        for (Vertex u : cur)
            for (Vertex w : g.neighbors(u))
                if (L.level_of[w] == -1) {
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

// G^2: same vertices, edge xy iff 1 <= d_G(x,y) <= 2.
inline Graph square(const Graph& g) {
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<uint8_t> mark(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v) {
        std::vector<Vertex> touched;
        for (Vertex u : g.neighbors(v)) {
            if (u > v && !mark[u]) { mark[u] = 1; touched.push_back(u); }
            for (Vertex w : g.neighbors(u))
                if (w > v && !mark[w]) { mark[w] = 1; touched.push_back(w); }
        }
        for (Vertex u : touched) { es.emplace_back(v, u); mark[u] = 0; }
    }
    return build_graph(g.n(), es);
}

namespace detail {

// Smallest module containing {a,b}, via splitter closure: while some outside
// vertex has both a neighbor and a non-neighbor inside, pull it in.
inline VertexSet module_closure(const Graph& g, Vertex a, Vertex b) {
    std::vector<uint8_t> in(g.n(), 0);
    std::vector<int> nbr_count(g.n(), 0); // neighbors inside, for outside vertices
    VertexSet members{a, b};
    in[a] = in[b] = 1;
    std::vector<Vertex> batch{a, b};
    while (!batch.empty()) {
        for (Vertex x : batch)
            for (Vertex w : g.neighbors(x))
                if (!in[w]) ++nbr_count[w];
        batch.clear();
        const int inside = static_cast<int>(members.size());
        for (Vertex z = 0; z < g.n(); ++z)
            if (!in[z] && nbr_count[z] > 0 && nbr_count[z] < inside)
                batch.push_back(z);
        for (Vertex z : batch) {
            in[z] = 1;
            members.push_back(z);
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

} // namespace detail

// Some homogeneous set (size >= 2, != V) if one exists; the graph is prime
// iff this returns nullopt. Pairwise closure, not full modular decomposition.
inline std::optional<VertexSet> find_homogeneous_set(const Graph& g) {
    const int n = g.n();
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            VertexSet h = detail::module_closure(g, a, b);
            if (static_cast<int>(h.size()) < n) return h;
        }
    return std::nullopt;
}

inline std::vector<int> eccentricities(const Graph& g) {
    std::vector<int> ecc(g.n(), -1);
    for (Vertex v = 0; v < g.n(); ++v) {
        Levels L = distance_levels(g, v);
        if (!L.all_reached())
            throw Error(ErrorCode::Disconnected, "graph is disconnected");
        ecc[v] = L.depth();
    }
    return ecc;
}

// Vertex of minimum eccentricity (lowest index on ties). When the graph is
// P_t-free the eccentricity is guaranteed <= floor(t/2); a violation means
// the caller's freeness assumption fails and is reported as an error.
inline Vertex find_central_vertex(const Graph& g, int t) {
    if (g.n() == 0) throw Error(ErrorCode::OutOfRange, "empty graph");
    std::vector<int> ecc = eccentricities(g);
    Vertex best = 0;
    for (Vertex v = 1; v < g.n(); ++v)
        if (ecc[v] < ecc[best]) best = v;
    if (ecc[best] > t / 2)
        throw Error(ErrorCode::EccentricityBoundViolated,
                    "minimum eccentricity " + std::to_string(ecc[best]) +
                        " exceeds " + std::to_string(t / 2));
    return best;
}

inline int diameter(const Graph& g) {
    if (g.n() == 0) return 0;
    std::vector<int> ecc = eccentricities(g);
    return *std::max_element(ecc.begin(), ecc.end());
}

// Connected components, each sorted, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<uint8_t> seen(g.n(), 0);
    for (Vertex s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) { seen[w] = 1; stack.push_back(w); }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return connected_components(g).size() == 1;
}

// Induced subgraph on a sorted vertex set; returns the mapping old->new via
// the given set's order (new index = position in `verts`).
inline Graph induced_subgraph(const Graph& g, const VertexSet& verts) {
    std::vector<int> idx(g.n(), -1);
    for (size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u : verts)
        for (Vertex w : g.neighbors(u))
            if (u < w && idx[w] != -1) es.emplace_back(idx[u], idx[w]);
    return build_graph(static_cast<int>(verts.size()), es);
}

} // namespace eds
