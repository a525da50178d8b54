#pragma once

#include <optional>

#include "eds/patterns.hpp"

namespace eds {

inline constexpr int kDefaultPatternCap = 13;

namespace detail {

// Search-order plan for one pattern: positions are arranged so that within a
// component every position after the first is adjacent to an earlier one.
struct MatchPlan {
    Graph pat;
    std::vector<int> order;           // pattern vertex at each position
    std::vector<std::vector<int>> adj_before;    // positions (earlier) adjacent
    std::vector<std::vector<int>> nonadj_before; // positions (earlier) non-adjacent
    std::vector<int> comp_anchor;     // for position p: position of its component's first vertex, or -1
    bool symmetric_components = false;
};

inline MatchPlan make_plan(const Pattern& p) {
    MatchPlan plan;
    plan.pat = p.graph();
    const Graph& pg = plan.pat;
    const int k = pg.n();
    std::vector<uint8_t> placed(k, 0);
    std::vector<int> pos_of(k, -1);
    std::vector<int> anchors;
    // Components in vertex order; inside a component, grow by adjacency.
    for (int s = 0; s < k; ++s) {
        if (placed[s]) continue;
        int anchor_pos = static_cast<int>(plan.order.size());
        anchors.push_back(anchor_pos);
        std::vector<int> queue{s};
        placed[s] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.erase(queue.begin());
            pos_of[u] = static_cast<int>(plan.order.size());
            plan.order.push_back(u);
            for (int w : pg.neighbors(u))
                if (!placed[w]) { placed[w] = 1; queue.push_back(w); }
        }
    }
    plan.adj_before.resize(k);
    plan.nonadj_before.resize(k);
    plan.comp_anchor.assign(k, -1);
    {
        size_t next_anchor = 0;
        for (int pos = 0; pos < k; ++pos) {
            if (next_anchor < anchors.size() && anchors[next_anchor] == pos) {
                plan.comp_anchor[pos] = next_anchor > 0 ? anchors[next_anchor - 1] : -1;
                ++next_anchor;
            }
            int u = plan.order[pos];
            for (int q = 0; q < pos; ++q) {
                int w = plan.order[q];
                (pg.has_edge(u, w) ? plan.adj_before[pos] : plan.nonadj_before[pos]).push_back(q);
            }
        }
    }
    plan.symmetric_components = p.kind == Pattern::Kind::DisjointPaths;
    return plan;
}

inline bool match_rec(const Graph& g, const MatchPlan& plan, int pos,
                      std::vector<Vertex>& assign, std::vector<uint8_t>& used) {
    const int k = static_cast<int>(plan.order.size());
    if (pos == k) return true;
    int u = plan.order[pos];
    int need_deg = plan.pat.degree(u);

    // Candidate source: neighbors of an already-mapped pattern neighbor if
    // any, else all host vertices.
    const std::vector<Vertex>* source = nullptr;
    std::vector<Vertex> all;
    if (!plan.adj_before[pos].empty()) {
        source = &g.neighbors(assign[plan.adj_before[pos][0]]);
    } else {
        all.resize(g.n());
        for (int i = 0; i < g.n(); ++i) all[i] = i;
        source = &all;
    }
    // Identical disjoint components are interchangeable: force anchors to
    // increase to avoid re-deriving permuted witnesses.
    Vertex min_allowed = -1;
    if (plan.symmetric_components && plan.comp_anchor[pos] >= 0)
        min_allowed = assign[plan.comp_anchor[pos]];

    for (Vertex h : *source) {
        if (used[h] || g.degree(h) < need_deg) continue;
        if (h <= min_allowed) continue;
        bool ok = true;
        for (int q : plan.adj_before[pos])
            if (!g.has_edge(h, assign[q])) { ok = false; break; }
        if (ok)
            for (int q : plan.nonadj_before[pos])
                if (g.has_edge(h, assign[q])) { ok = false; break; }
        if (!ok) continue;
        assign[pos] = h;
        used[h] = 1;
        if (match_rec(g, plan, pos + 1, assign, used)) return true;
        used[h] = 0;
    }
    return false;
}

} // namespace detail

// Exhaustive induced-subgraph search. Returns a witness in the pattern's
// canonical vertex order, or nullopt when g is p-free.
inline std::optional<Witness> contains_induced(const Graph& g, const Pattern& p,
                                               int size_cap = kDefaultPatternCap) {
    if (p.size() > size_cap)
        throw Error(ErrorCode::PatternTooLarge,
                    "pattern " + p.name() + " exceeds size cap " + std::to_string(size_cap));
    if (p.size() > g.n()) return std::nullopt;
    detail::MatchPlan plan = detail::make_plan(p);
    std::vector<Vertex> assign(plan.order.size(), -1);
    std::vector<uint8_t> used(g.n(), 0);
    if (!detail::match_rec(g, plan, 0, assign, used)) return std::nullopt;
    Witness w;
    w.mapping.resize(plan.order.size());
    for (size_t pos = 0; pos < plan.order.size(); ++pos)
        w.mapping[plan.order[pos]] = assign[pos];
    return w;
}

namespace detail {

// Shortest cycle and one witness for it, by BFS from every vertex. Any
// shortest cycle is chordless. Returns nullopt on forests.
inline std::optional<VertexSet> girth_cycle(const Graph& g) {
    int best = -1;
    VertexSet best_cycle;
    std::vector<int> dist(g.n()), par(g.n());
    for (Vertex s = 0; s < g.n(); ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(par.begin(), par.end(), -1);
        dist[s] = 0;
        std::vector<Vertex> q{s};
        for (size_t head = 0; head < q.size(); ++head) {
            Vertex u = q[head];
            if (best != -1 && 2 * dist[u] >= best) break;
            for (Vertex w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    par[w] = u;
                    q.push_back(w);
                } else if (w != par[u] && dist[w] >= dist[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) {
                        // Walk both endpoints up; keep only if the paths are
                        // disjoint (then this is a genuine cycle of that length).
                        std::vector<Vertex> cu, cw;
                        for (Vertex t = u; t != -1; t = par[t]) cu.push_back(t);
                        for (Vertex t = w; t != -1; t = par[t]) cw.push_back(t);
                        std::vector<uint8_t> onu(g.n(), 0);
                        for (Vertex t : cu) onu[t] = 1;
                        bool disjoint = true;
                        for (size_t i = 0; i + 1 < cw.size(); ++i)
                            if (onu[cw[i]]) { disjoint = false; break; }
                        if (disjoint) {
                            best = len;
                            best_cycle.clear();
                            for (Vertex t : cu) best_cycle.push_back(t);
                            for (size_t i = cw.size() - 1; i-- > 0;) best_cycle.push_back(cw[i]);
                        }
                    }
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best_cycle;
}

// Exhaustive chordless-cycle search at a fixed length. Cycles are anchored at
// their minimum vertex; internal vertices must avoid chords to the whole path.
inline bool chordless_cycle_rec(const Graph& g, int target_len, std::vector<Vertex>& path,
                                std::vector<uint8_t>& onpath, uint64_t& budget) {
    Vertex s = path.front();
    Vertex last = path.back();
    int len = static_cast<int>(path.size());
    for (Vertex w : g.neighbors(last)) {
        if (budget-- == 0)
            throw Error(ErrorCode::BudgetExceeded, "induced-cycle search budget exhausted");
        if (w <= s || onpath[w]) continue;
        bool closes = g.has_edge(w, s);
        if (len + 1 == target_len) {
            if (!closes) continue;
        } else if (closes && len >= 2) {
            continue; // would become a chord of any longer cycle through w
        }
        bool chord = false;
        for (int i = 1; i + 1 < len; ++i)
            if (g.has_edge(w, path[i])) { chord = true; break; }
        if (chord) continue;
        if (len + 1 == target_len) {
            if (len >= 2 && path[1] > w) continue; // orientation tie-break
            path.push_back(w);
            return true;
        }
        path.push_back(w);
        onpath[w] = 1;
        if (chordless_cycle_rec(g, target_len, path, onpath, budget)) return true;
        onpath[w] = 0;
        path.pop_back();
    }
    return false;
}

inline std::optional<VertexSet> find_chordless_cycle(const Graph& g, int min_len, int max_len,
                                                     int parity_step,
                                                     uint64_t budget = 50'000'000) {
    for (int L = min_len; L <= max_len; L += parity_step) {
        for (Vertex s = 0; s < g.n(); ++s) {
            std::vector<Vertex> path{s};
            std::vector<uint8_t> onpath(g.n(), 0);
            onpath[s] = 1;
            if (chordless_cycle_rec(g, L, path, onpath, budget)) return VertexSet(path);
        }
    }
    return std::nullopt;
}

} // namespace detail

// Induced even cycle of length >= min_len in a bipartite graph; shortest such
// cycle is returned. With min_len = 6, nullopt means chordal bipartite.
inline std::optional<Witness> shortest_induced_even_cycle_at_least(const Graph& g, int min_len) {
    if (!is_bipartite(g)) throw Error(ErrorCode::NotBipartite, "even-cycle search expects a bipartite graph");
    auto girth = detail::girth_cycle(g);
    if (!girth) return std::nullopt;
    if (static_cast<int>(girth->size()) >= min_len) return Witness{*girth};
    // Short cycles exist but do not count; fall back to exhaustive search.
    auto cyc = detail::find_chordless_cycle(g, std::max(min_len, 4), g.n(), 2);
    if (!cyc) return std::nullopt;
    return Witness{*cyc};
}

// Induced chordless cycle of length >= 5, any parity.
inline std::optional<Witness> contains_hole(const Graph& g) {
    auto girth = detail::girth_cycle(g);
    if (!girth) return std::nullopt;
    if (girth->size() >= 5) return Witness{*girth};
    auto cyc = detail::find_chordless_cycle(g, 5, g.n(), 1);
    if (!cyc) return std::nullopt;
    return Witness{*cyc};
}

// One recognized class with an optional counterexample.
struct ClassFlag {
    bool value = true;
    std::optional<Witness> witness; // present iff value is false (pattern found)
};

struct ClassReport {
    bool bipartite = true;
    std::optional<Witness> odd_cycle;
    bool connected = true;
    bool maxdeg3 = true;
    std::optional<Witness> high_degree; // offending vertex followed by its neighbors
    ClassFlag p5free, p6free, p7free, p9free;
    ClassFlag s222free, s223free, s224free, s124free;
    ClassFlag h4free;
    std::vector<std::pair<int, ClassFlag>> lp4free; // per l = 2..cap
    bool chordal_bipartite = false;
    std::optional<Witness> long_even_cycle;
    bool k33present = false;
    std::optional<Witness> k33;
    VertexSet k23_degree3_exclusions;
};

namespace detail {

inline ClassFlag seek(const Graph& g, const Pattern& p, int cap) {
    auto w = contains_induced(g, p, cap);
    if (!w) return {true, std::nullopt};
    return {false, w};
}

// Vertices excluded from every e.d.s. because they form the degree-3 side of
// an induced K_{2,3} and have no other edges.
inline VertexSet k23_exclusions(const Graph& g) {
    VertexSet out;
    for (Vertex a = 0; a < g.n(); ++a) {
        if (g.degree(a) != 3) continue;
        for (Vertex b = a + 1; b < g.n(); ++b) {
            if (g.degree(b) != 3 || g.has_edge(a, b)) continue;
            VertexSet common;
            std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(),
                                  g.neighbors(b).begin(), g.neighbors(b).end(),
                                  std::back_inserter(common));
            if (common.size() != 3) continue;
            bool indep = !g.has_edge(common[0], common[1]) && !g.has_edge(common[0], common[2]) &&
                         !g.has_edge(common[1], common[2]);
            if (indep) {
                insert_sorted(out, a);
                insert_sorted(out, b);
            }
        }
    }
    return out;
}

} // namespace detail

// Full classification used to drive solver dispatch. Cheap patterns first;
// hereditary implications short-circuit the larger searches.
inline ClassReport classify(const Graph& g, int lp4_cap = 3, int pattern_cap = kDefaultPatternCap) {
    ClassReport r;
    try {
        bipartition(g);
    } catch (const Error& e) {
        r.bipartite = false;
        r.odd_cycle = Witness{e.witness()};
    }
    r.connected = is_connected(g);
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) > 3) {
            r.maxdeg3 = false;
            VertexSet w{v};
            for (Vertex u : g.neighbors(v)) w.push_back(u);
            r.high_degree = Witness{w};
            break;
        }

    r.p5free = detail::seek(g, Pattern::path(5), pattern_cap);
    r.p6free = r.p5free.value ? ClassFlag{} : detail::seek(g, Pattern::path(6), pattern_cap);
    r.p7free = r.p6free.value ? ClassFlag{} : detail::seek(g, Pattern::path(7), pattern_cap);
    r.p9free = r.p7free.value ? ClassFlag{} : detail::seek(g, Pattern::path(9), pattern_cap);

    r.s222free = detail::seek(g, Pattern::spider(2, 2, 2), pattern_cap);
    r.s223free = r.s222free.value ? ClassFlag{} : detail::seek(g, Pattern::spider(2, 2, 3), pattern_cap);
    r.s124free = detail::seek(g, Pattern::spider(1, 2, 4), pattern_cap);
    if (r.s223free.value || r.s124free.value)
        r.s224free = ClassFlag{};
    else
        r.s224free = detail::seek(g, Pattern::spider(2, 2, 4), pattern_cap);

    r.h4free = detail::seek(g, Pattern::h4(), pattern_cap);

    for (int l = 2; l <= lp4_cap; ++l) {
        ClassFlag f = detail::seek(g, Pattern::disjoint_paths(l, 4), pattern_cap);
        r.lp4free.emplace_back(l, f);
        if (f.value) {
            // (l+1)P_4-free follows; still record explicit entries.
            for (int l2 = l + 1; l2 <= lp4_cap; ++l2) r.lp4free.emplace_back(l2, ClassFlag{});
            break;
        }
    }

    if (r.bipartite) {
        auto w = shortest_induced_even_cycle_at_least(g, 6);
        r.chordal_bipartite = !w.has_value();
        r.long_even_cycle = w;
    }
    {
        auto w = contains_induced(g, Pattern::k33(), pattern_cap);
        r.k33present = w.has_value();
        r.k33 = w;
    }
    r.k23_degree3_exclusions = detail::k23_exclusions(g);
    return r;
}

} // namespace eds
