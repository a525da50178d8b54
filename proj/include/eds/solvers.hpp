#pragma once

#include <chrono>
#include <functional>
#include <set>

#include "eds/level_framework.hpp"
#include "eds/recognizers.hpp"

namespace eds {

struct SolverStats {
    int roots_explored = 0;
    uint64_t candidate_sets = 0; // materialized Z / D candidates
    double elapsed_ms = 0.0;
};

struct SolverOutcome {
    enum class Status { Found, NoEds, NotApplicable };
    Status status = Status::NoEds;
    std::optional<EdsCertificate> eds;
    std::string reason;             // NotApplicable reason, or a NoEds note
    std::optional<Witness> witness; // class-violation evidence when available
    bool cap_exceeded = false;
    SolverStats stats;

    static SolverOutcome found(EdsCertificate c) {
        SolverOutcome o;
        o.status = Status::Found;
        o.eds = std::move(c);
        return o;
    }
    static SolverOutcome no_eds() { return {}; }
    static SolverOutcome not_applicable(std::string reason, std::optional<Witness> w = std::nullopt,
                                        bool capped = false) {
        SolverOutcome o;
        o.status = Status::NotApplicable;
        o.reason = std::move(reason);
        o.witness = std::move(w);
        o.cap_exceeded = capped;
        return o;
    }
};

namespace detail {

// Pattern-witness extraction is worth doing only at desk scale.
inline constexpr int kWitnessSearchCap = 48;

inline std::optional<Witness> desk_witness(const Graph& g, const Pattern& p) {
    if (g.n() > kWitnessSearchCap) return std::nullopt;
    return contains_induced(g, p);
}

inline std::optional<SolverOutcome> precheck(const Graph& g) {
    try {
        bipartition(g);
    } catch (const Error& e) {
        return SolverOutcome::not_applicable("input is not bipartite", Witness{e.witness()});
    }
    if (!is_connected(g))
        return SolverOutcome::not_applicable("input is disconnected; solve per component");
    return std::nullopt;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Candidate dominators of x with inclusion-minimal next-stratum
// neighborhoods. Empty result = incomparable neighborhoods (dead branch);
// several results = an exact tie the caller must branch on.
inline VertexSet inclusion_tied(const LevelState& st, const VertexSet& cands) {
    std::vector<VertexSet> keys(cands.size());
    for (size_t ci = 0; ci < cands.size(); ++ci)
        for (Vertex w : st.g->neighbors(cands[ci]))
            if (st.levels.level_of[w] == st.i + 2) keys[ci].push_back(w);
    size_t best = 0;
    for (size_t ci = 1; ci < cands.size(); ++ci)
        if (keys[ci].size() < keys[best].size()) best = ci;
    for (size_t ci = 0; ci < cands.size(); ++ci)
        if (!std::includes(keys[ci].begin(), keys[ci].end(), keys[best].begin(), keys[best].end()))
            return {};
    VertexSet tied;
    for (size_t ci = 0; ci < cands.size(); ++ci)
        if (keys[ci] == keys[best]) tied.push_back(cands[ci]);
    return tied;
}

struct ChainContext {
    bool collect_all = false;
    uint64_t cap = 0; // candidate-set cap; 0 = unlimited
    uint64_t candidate_sets = 0;
    bool capped = false;
    std::set<VertexSet> found;

    bool charge(uint64_t k = 1) {
        candidate_sets += k;
        if (cap && candidate_sets > cap) {
            capped = true;
            return false;
        }
        return true;
    }
};

// Forced extension from stratum st.i to the last stratum: unique candidates
// and pool vertices without deeper neighbors are committed outright, the
// rest resolved by the inclusion rule, branching only on exact ties.
// Returns true when the search should stop (hit on first-only, or capped).
inline bool forced_chain(const LevelState& st, ChainContext& ctx) {
    if (st.i >= st.depth()) {
        if (is_eds(*st.g, st.committed)) {
            ctx.found.insert(st.committed);
            if (!ctx.collect_all) return true;
        }
        return false;
    }
    Frontier f = frontier(st);
    if (f.has_empty) return false;

    VertexSet base;
    for (Vertex u : f.pool) {
        bool deeper = false;
        for (Vertex w : st.g->neighbors(u))
            if (st.levels.level_of[w] == st.i + 2) { deeper = true; break; }
        if (!deeper) insert_sorted(base, u);
    }
    std::vector<std::pair<Vertex, VertexSet>> ties;
    for (auto& [x, cands] : f.candidates) {
        bool decided = false;
        for (Vertex c : cands)
            if (contains_sorted(base, c)) { decided = true; break; }
        if (decided) continue; // a forced vertex already covers x; extend verifies exactness
        if (cands.size() == 1) {
            insert_sorted(base, cands[0]);
            continue;
        }
        VertexSet tied = inclusion_tied(st, cands);
        if (tied.empty()) return false;
        if (tied.size() == 1)
            insert_sorted(base, tied[0]);
        else
            ties.emplace_back(x, std::move(tied));
    }

    // DFS over the tie product, lexicographic.
    std::vector<size_t> choice(ties.size(), 0);
    for (;;) {
        VertexSet z = base;
        for (size_t t = 0; t < ties.size(); ++t) insert_sorted(z, ties[t].second[choice[t]]);
        if (!ties.empty() && !ctx.charge()) return true;
        auto ext = extend(st, z);
        if (std::holds_alternative<LevelState>(ext)) {
            if (forced_chain(std::get<LevelState>(ext), ctx)) return true;
        }
        // next combo
        size_t t = 0;
        while (t < ties.size()) {
            if (++choice[t] < ties[t].second.size()) break;
            choice[t] = 0;
            ++t;
        }
        if (t >= ties.size()) break;
    }
    return false;
}

} // namespace detail

// The inclusion rule as a standalone operation: among >= 2 candidate
// dominators of x, the ones whose next-stratum neighborhood is contained in
// every other candidate's. nullopt when the candidates are incomparable.
inline std::optional<VertexSet> inclusion_forced_dominator(const LevelState& st, Vertex x) {
    Frontier f = frontier(st);
    for (auto& [fx, cands] : f.candidates)
        if (fx == x) {
            if (cands.size() < 2) return cands;
            VertexSet tied = detail::inclusion_tied(st, cands);
            if (tied.empty()) return std::nullopt;
            return tied;
        }
    return std::nullopt;
}

// P_5-free bipartite: from any root with at most three strata, {v} union N_3
// is the only possible e.d.s. through v.
inline SolverOutcome solve_p5_free(const Graph& g) {
    detail::Timer timer;
    if (auto pre = detail::precheck(g)) return *pre;
    SolverOutcome out;
    for (Vertex v = 0; v < g.n(); ++v) {
        ++out.stats.roots_explored;
        Levels L = distance_levels(g, v);
        if (L.depth() >= 4) {
            // The BFS path to stratum 4 is an induced P_5.
            VertexSet path;
            Vertex cur = L.stratum(4).front();
            path.push_back(cur);
            for (int lvl = 3; lvl >= 0; --lvl)
                for (Vertex w : g.neighbors(path.back()))
                    if (L.level_of[w] == lvl) { path.push_back(w); break; }
            std::reverse(path.begin(), path.end());
            out = SolverOutcome::not_applicable("root " + std::to_string(v) +
                                                    " has four distance levels; graph is not P5-free",
                                                Witness{std::move(path)});
            out.stats.elapsed_ms = timer.ms();
            return out;
        }
        VertexSet d{v};
        for (Vertex y : L.stratum(3)) d.push_back(y);
        std::sort(d.begin(), d.end());
        if (is_eds(g, d)) {
            auto res = SolverOutcome::found({std::move(d)});
            res.stats = out.stats;
            res.stats.elapsed_ms = timer.ms();
            return res;
        }
    }
    out.stats.elapsed_ms = timer.ms();
    return out;
}

// P_7-free bipartite. A central vertex bounds every relevant root to four
// strata; per root, stratum-3 vertices without deeper neighbors are forced,
// then at most one more stratum-3 vertex completes the set.
inline SolverOutcome solve_p7_free(const Graph& g) {
    detail::Timer timer;
    if (auto pre = detail::precheck(g)) return *pre;
    if (g.n() == 0) return SolverOutcome::found({{}});
    Vertex v0;
    try {
        v0 = find_central_vertex(g, 7);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EccentricityBoundViolated) throw;
        return SolverOutcome::not_applicable("no vertex of eccentricity <= 3; graph is not P7-free",
                                             detail::desk_witness(g, Pattern::path(7)));
    }
    SolverOutcome out;
    VertexSet roots{v0};
    for (Vertex w : g.neighbors(v0)) roots.push_back(w);
    std::sort(roots.begin(), roots.end());
    for (Vertex v : roots) {
        ++out.stats.roots_explored;
        Levels L = distance_levels(g, v);
        if (L.depth() >= 5)
            return SolverOutcome::not_applicable(
                "root " + std::to_string(v) + " has five distance levels; graph is not P7-free",
                detail::desk_witness(g, Pattern::path(7)));
        ReducedInstance inst = ReducedInstance::start(g, v);
        bool dead = false;
        for (Vertex y : L.stratum(3)) {
            bool deeper = false;
            for (Vertex w : g.neighbors(y))
                if (L.level_of[w] == 4) { deeper = true; break; }
            if (deeper) continue;
            auto nxt = apply_forced(inst, y);
            if (!nxt) { dead = true; break; }
            inst = std::move(*nxt);
        }
        if (dead) continue;

        auto try_completion = [&](VertexSet d, Vertex extra) -> bool {
            if (extra >= 0) insert_sorted(d, extra);
            for (Vertex z : L.stratum(4))
                if (!inst.dominated[z] && (extra < 0 || !g.has_edge(z, extra))) insert_sorted(d, z);
            ++out.stats.candidate_sets;
            if (!is_eds(g, d)) return false;
            out.status = SolverOutcome::Status::Found;
            out.eds = EdsCertificate{std::move(d)};
            return true;
        };
        if (try_completion(inst.committed, -1)) {
            out.stats.elapsed_ms = timer.ms();
            return out;
        }
        for (Vertex y : L.stratum(3)) {
            if (inst.dominated[y] || inst.excluded[y]) continue;
            if (try_completion(inst.committed, y)) {
                out.stats.elapsed_ms = timer.ms();
                return out;
            }
        }
    }
    out.stats.elapsed_ms = timer.ms();
    return out;
}

namespace detail {

// Maximal independent sets of square(g) restricted to `pool`, via
// Bron-Kerbosch on the complement. Pool is limited to 64 vertices; the
// callers only reach this at desk scale.
struct MisResult {
    std::vector<VertexSet> sets;
    bool capped = false;
};

inline MisResult mis_in_square(const Graph& g, const VertexSet& pool, uint64_t cap) {
    MisResult res;
    const int k = static_cast<int>(pool.size());
    if (k == 0) {
        res.sets.push_back({});
        return res;
    }
    if (k > 64) {
        res.capped = true;
        return res;
    }
    // conflict[i][j]: distance <= 2 in g.
    std::vector<uint64_t> cfree(k, 0); // complement adjacency (independent-pair graph)
    std::vector<uint8_t> mark(g.n(), 0);
    for (int i = 0; i < k; ++i) {
        mark[pool[i]] = 2;
        for (Vertex w : g.neighbors(pool[i])) {
            mark[w] = 1;
            for (Vertex t : g.neighbors(w)) if (!mark[t]) mark[t] = 1;
        }
        for (int j = 0; j < k; ++j)
            if (j != i && mark[pool[j]] != 1) cfree[i] |= 1ull << j;
        std::fill(mark.begin(), mark.end(), 0);
    }

    uint64_t full = k == 64 ? ~0ull : (1ull << k) - 1;
    bool stop = false;
    auto emit = [&](uint64_t r) {
        if (res.sets.size() >= cap) {
            res.capped = true;
            stop = true;
            return;
        }
        VertexSet s;
        for (int i = 0; i < k; ++i)
            if (r >> i & 1) s.push_back(pool[i]);
        res.sets.push_back(std::move(s));
    };
    // Maximal cliques of the complement graph == MIS of the conflict graph.
    std::function<void(uint64_t, uint64_t, uint64_t)> bk = [&](uint64_t r, uint64_t p, uint64_t x) {
        if (stop) return;
        if (!p && !x) { emit(r); return; }
        uint64_t px = p | x;
        int pivot = -1, best = -1;
        for (int i = 0; i < k; ++i)
            if (px >> i & 1) {
                int cnt = __builtin_popcountll(p & cfree[i]);
                if (cnt > best) { best = cnt; pivot = i; }
            }
        uint64_t ext = p & ~cfree[pivot];
        for (int i = 0; i < k && !stop; ++i)
            if (ext >> i & 1) {
                bk(r | (1ull << i), p & cfree[i], x & cfree[i]);
                p &= ~(1ull << i);
                x |= 1ull << i;
            }
    };
    bk(0, full, 0);
    std::sort(res.sets.begin(), res.sets.end());
    return res;
}

inline uint64_t ipow_capped(uint64_t base, int exp, uint64_t lim = ~0ull) {
    uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > lim / std::max<uint64_t>(base, 1)) return lim;
        r *= base;
    }
    return r;
}

} // namespace detail

// lP_4-free bipartite, fixed l >= 2, prime inputs. Strata depth is bounded by
// 5l-2; the candidate D-slice at each stratum is a maximal independent set of
// the square restricted to the pool, at most n^(2l-2) of them per stratum.
inline SolverOutcome solve_lp4_free(const Graph& g, int l) {
    detail::Timer timer;
    if (l < 2) throw Error(ErrorCode::OutOfRange, "lP4 solver requires l >= 2");
    if (auto pre = detail::precheck(g)) return *pre;
    if (auto hom = find_homogeneous_set(g))
        return SolverOutcome::not_applicable("graph is not prime; fall back to the oracle",
                                             Witness{*hom});
    const uint64_t mis_cap = detail::ipow_capped(std::max(g.n(), 2), 2 * l - 2, 1u << 22);
    SolverOutcome out;
    bool capped = false;
    for (Vertex v = 0; v < g.n(); ++v) {
        ++out.stats.roots_explored;
        LevelState st0 = init_state(g, v);
        if (st0.depth() >= 5 * l - 2) {
            // l P_4 blocks along one shortest path, separated by single gaps.
            Levels L = st0.levels;
            VertexSet path;
            Vertex cur = L.stratum(st0.depth()).front();
            path.push_back(cur);
            for (int lvl = st0.depth() - 1; lvl >= 0; --lvl)
                for (Vertex w : g.neighbors(path.back()))
                    if (L.level_of[w] == lvl) { path.push_back(w); break; }
            std::reverse(path.begin(), path.end());
            VertexSet wit;
            for (int c = 0; c < l; ++c)
                for (int j = 0; j < 4; ++j) wit.push_back(path[5 * c + j]);
            return SolverOutcome::not_applicable(
                "root " + std::to_string(v) + " has " + std::to_string(st0.depth() + 1) +
                    " distance levels; graph is not " + std::to_string(l) + "P4-free",
                Witness{std::move(wit)});
        }
        std::function<bool(const LevelState&)> go = [&](const LevelState& st) -> bool {
            if (st.i >= st.depth()) {
                if (is_eds(g, st.committed)) {
                    out.status = SolverOutcome::Status::Found;
                    out.eds = EdsCertificate{st.committed};
                    return true;
                }
                return false;
            }
            Frontier f = frontier(st);
            if (f.has_empty) return false;
            auto mis = detail::mis_in_square(g, f.pool, mis_cap);
            if (mis.capped) { capped = true; return true; }
            for (const VertexSet& z : mis.sets) {
                ++out.stats.candidate_sets;
                auto ext = extend(st, z);
                if (std::holds_alternative<LevelState>(ext) && go(std::get<LevelState>(ext)))
                    return true;
            }
            return false;
        };
        if (go(st0)) {
            if (capped) break;
            out.stats.elapsed_ms = timer.ms();
            return out;
        }
    }
    if (capped)
        return SolverOutcome::not_applicable("per-stratum enumeration exceeded its cap",
                                             std::nullopt, true);
    out.stats.elapsed_ms = timer.ms();
    return out;
}

namespace detail {

// Stage-3 candidates for D cap N_3 on the reduced instance: fixing one
// member y, every other member is the inclusion-minimal dominator of an
// undominated stratum-2 vertex outside N(y). At most |N_3| sets plus ties.
inline std::vector<VertexSet> stage3_candidates(const ReducedInstance& S, const VertexSet& forced,
                                                ChainContext& ctx) {
    const Graph& g = *S.g;
    Levels LS = residual_levels(S);
    std::set<VertexSet> cands;
    VertexSet base = forced;
    cands.insert(base); // the "no further stratum-3 member" case
    ctx.charge();

    std::vector<uint8_t> near_y(g.n(), 0);
    for (Vertex y : LS.stratum(3)) {
        if (S.excluded[y]) continue;
        // Mark N[N[y]]: stratum-3 vertices there sit within distance 2 of y.
        std::vector<Vertex> touched;
        auto mark = [&](Vertex t) {
            if (!near_y[t]) { near_y[t] = 1; touched.push_back(t); }
        };
        mark(y);
        for (Vertex w : g.neighbors(y)) {
            mark(w);
            for (Vertex t : g.neighbors(w)) mark(t);
        }

        bool ok = true;
        VertexSet picks{y};
        std::vector<VertexSet> tie_lists;
        for (Vertex x : LS.stratum(2)) {
            if (g.has_edge(x, y)) continue; // dominated by y itself
            VertexSet c;
            for (Vertex m : g.neighbors(x))
                if (LS.level_of[m] == 3 && !S.excluded[m] && !near_y[m]) c.push_back(m);
            if (c.empty()) { ok = false; break; }
            if (c.size() == 1) { insert_sorted(picks, c[0]); continue; }
            // Inclusion-minimal next-stratum neighborhood, ignoring N(y).
            std::vector<VertexSet> keys(c.size());
            for (size_t ci = 0; ci < c.size(); ++ci)
                for (Vertex w : g.neighbors(c[ci]))
                    if (LS.level_of[w] == 4 && !near_y[w]) keys[ci].push_back(w);
            size_t best = 0;
            for (size_t ci = 1; ci < c.size(); ++ci)
                if (keys[ci].size() < keys[best].size()) best = ci;
            bool comparable = true;
            for (size_t ci = 0; ci < c.size(); ++ci)
                if (!std::includes(keys[ci].begin(), keys[ci].end(), keys[best].begin(),
                                   keys[best].end())) {
                    comparable = false;
                    break;
                }
            if (!comparable) { ok = false; break; }
            VertexSet tied;
            for (size_t ci = 0; ci < c.size(); ++ci)
                if (keys[ci] == keys[best]) tied.push_back(c[ci]);
            if (tied.size() == 1)
                insert_sorted(picks, tied[0]);
            else
                tie_lists.push_back(std::move(tied));
        }
        if (ok) {
            std::vector<size_t> choice(tie_lists.size(), 0);
            for (;;) {
                VertexSet q = base;
                for (Vertex p : picks) insert_sorted(q, p);
                for (size_t t = 0; t < tie_lists.size(); ++t)
                    insert_sorted(q, tie_lists[t][choice[t]]);
                if (cands.insert(std::move(q)).second && !ctx.charge()) break;
                size_t t = 0;
                while (t < tie_lists.size()) {
                    if (++choice[t] < tie_lists[t].size()) break;
                    choice[t] = 0;
                    ++t;
                }
                if (t >= tie_lists.size()) break;
            }
        }
        for (Vertex t : touched) near_y[t] = 0;
        if (ctx.capped) break;
    }
    return {cands.begin(), cands.end()};
}

// Stage-4 candidates, same mechanism one stratum up, on the fixed-level state.
inline std::vector<VertexSet> stage4_candidates(const LevelState& st3, ChainContext& ctx) {
    const Graph& g = *st3.g;
    Frontier f = frontier(st3);
    std::set<VertexSet> cands;
    cands.insert(VertexSet{});
    ctx.charge();
    if (f.has_empty) return {};

    std::vector<uint8_t> near_y(g.n(), 0), in_pool(g.n(), 0);
    for (Vertex w : f.pool) in_pool[w] = 1;
    for (Vertex y : f.pool) {
        std::vector<Vertex> touched;
        auto mark = [&](Vertex t) {
            if (!near_y[t]) { near_y[t] = 1; touched.push_back(t); }
        };
        mark(y);
        for (Vertex w : g.neighbors(y)) {
            mark(w);
            for (Vertex t : g.neighbors(w)) mark(t);
        }
        bool ok = true;
        VertexSet picks{y};
        std::vector<VertexSet> tie_lists;
        for (Vertex x : f.undominated) {
            if (g.has_edge(x, y)) continue;
            VertexSet c;
            for (Vertex m : g.neighbors(x))
                if (in_pool[m] && !near_y[m]) c.push_back(m);
            if (c.empty()) { ok = false; break; }
            std::vector<VertexSet> keys(c.size());
            for (size_t ci = 0; ci < c.size(); ++ci)
                for (Vertex w : g.neighbors(c[ci]))
                    if (st3.levels.level_of[w] == st3.i + 2 && !near_y[w]) keys[ci].push_back(w);
            size_t best = 0;
            for (size_t ci = 1; ci < c.size(); ++ci)
                if (keys[ci].size() < keys[best].size()) best = ci;
            bool comparable = true;
            for (size_t ci = 0; ci < c.size(); ++ci)
                if (!std::includes(keys[ci].begin(), keys[ci].end(), keys[best].begin(),
                                   keys[best].end())) {
                    comparable = false;
                    break;
                }
            if (!comparable) { ok = false; break; }
            VertexSet tied;
            for (size_t ci = 0; ci < c.size(); ++ci)
                if (keys[ci] == keys[best]) tied.push_back(c[ci]);
            if (tied.size() == 1)
                insert_sorted(picks, tied[0]);
            else
                tie_lists.push_back(std::move(tied));
        }
        if (ok) {
            std::vector<size_t> choice(tie_lists.size(), 0);
            for (;;) {
                VertexSet q = picks;
                for (size_t t = 0; t < tie_lists.size(); ++t)
                    insert_sorted(q, tie_lists[t][choice[t]]);
                if (cands.insert(std::move(q)).second && !ctx.charge()) break;
                size_t t = 0;
                while (t < tie_lists.size()) {
                    if (++choice[t] < tie_lists[t].size()) break;
                    choice[t] = 0;
                    ++t;
                }
                if (t >= tie_lists.size()) break;
            }
        }
        for (Vertex t : touched) near_y[t] = 0;
        if (ctx.capped) break;
    }
    return {cands.begin(), cands.end()};
}

// Shared body of the S_{2,2,4} / S_{2,2,3} solvers. For S_{2,2,3} the
// inclusion rule is valid from stratum 3 on, so the stage-4 enumeration is
// skipped and the forced chain starts right after stage 3.
inline SolverOutcome solve_s22k(const Graph& g, bool enumerate_stage4) {
    Timer timer;
    if (auto pre = precheck(g)) return *pre;
    if (g.n() == 0) return SolverOutcome::found({{}});
    SolverOutcome out;
    ChainContext ctx;
    ctx.cap = ipow_capped(std::max<uint64_t>(g.n(), 2), 3, 1ull << 40);
    for (Vertex v = 0; v < g.n() && !ctx.capped; ++v) {
        ++out.stats.roots_explored;
        Levels L = distance_levels(g, v);
        RuleOutcome ro = v_forced_rules(L, ReducedInstance::start(g, v));
        if (ro.no_eds) continue;
        LevelState st0 = init_state(g, v);
        auto z3s = stage3_candidates(ro.state, ro.forced, ctx);
        bool stop = false;
        for (const VertexSet& z3 : z3s) {
            auto e3 = extend(st0, z3);
            if (!std::holds_alternative<LevelState>(e3)) continue;
            const LevelState& st3 = std::get<LevelState>(e3);
            if (enumerate_stage4) {
                auto z4s = stage4_candidates(st3, ctx);
                for (const VertexSet& z4 : z4s) {
                    auto e4 = extend(st3, z4);
                    if (!std::holds_alternative<LevelState>(e4)) continue;
                    if (forced_chain(std::get<LevelState>(e4), ctx)) { stop = true; break; }
                }
            } else {
                if (forced_chain(st3, ctx)) stop = true;
            }
            if (stop || ctx.capped) break;
        }
        if (stop && !ctx.found.empty()) break;
    }
    out.stats.candidate_sets = ctx.candidate_sets;
    out.stats.elapsed_ms = timer.ms();
    if (!ctx.found.empty()) {
        auto res = SolverOutcome::found({*ctx.found.begin()});
        res.stats = out.stats;
        return res;
    }
    if (ctx.capped)
        return SolverOutcome::not_applicable("candidate-set cap exceeded", std::nullopt, true);
    return out;
}

} // namespace detail

// S_{2,2,4}-free bipartite: stage-3 and stage-4 slices enumerated via the
// fixed-member trick, everything deeper forced by the inclusion rule.
inline SolverOutcome solve_s224_free(const Graph& g) { return detail::solve_s22k(g, true); }

// S_{2,2,3}-free bipartite: as above, with the forced chain taking over one
// stratum earlier.
inline SolverOutcome solve_s223_free(const Graph& g) { return detail::solve_s22k(g, false); }

struct EnumerateOutcome {
    bool applicable = true;
    std::optional<Witness> witness; // the spider, when not applicable
    std::vector<EdsCertificate> certificates;
};

// S_{2,2,2}-free bipartite: every e.d.s. through a root is fully forced, so
// the graph has at most n of them and they can all be listed.
inline EnumerateOutcome enumerate_s222_free(const Graph& g) {
    EnumerateOutcome out;
    if (auto w = contains_induced(g, Pattern::spider(2, 2, 2))) {
        out.applicable = false;
        out.witness = w;
        return out;
    }
    if (detail::precheck(g)) {
        out.applicable = false;
        return out;
    }
    detail::ChainContext ctx;
    ctx.collect_all = true;
    ctx.cap = static_cast<uint64_t>(std::max(g.n(), 4)) * std::max(g.n(), 4);
    for (Vertex v = 0; v < g.n(); ++v) {
        LevelState st0 = init_state(g, v);
        detail::forced_chain(st0, ctx);
        if (ctx.capped) break;
    }
    for (const VertexSet& d : ctx.found) out.certificates.push_back({d});
    return out;
}

// P_9-free bipartite with maximum degree 3. After the forced rules, at most
// two D-members sit at stratum 3 and at most two at stratum 4; stratum 5 is
// committed wholesale.
inline SolverOutcome solve_p9_deg3(const Graph& g) {
    detail::Timer timer;
    if (auto pre = detail::precheck(g)) return *pre;
    if (g.n() == 0) return SolverOutcome::found({{}});
    for (Vertex v = 0; v < g.n(); ++v)
        if (g.degree(v) > 3) {
            VertexSet w{v};
            for (Vertex u : g.neighbors(v)) w.push_back(u);
            return SolverOutcome::not_applicable("vertex " + std::to_string(v) + " has degree > 3",
                                                 Witness{std::move(w)});
        }
    // A connected max-degree-3 bipartite graph containing K_{3,3} is K_{3,3}
    // itself (the six vertices are saturated), and K_{3,3} has no e.d.s.
    if (g.n() == 6) {
        bool cubic = true;
        for (Vertex v = 0; v < 6; ++v)
            if (g.degree(v) != 3) { cubic = false; break; }
        if (cubic) {
            SolverOutcome o = SolverOutcome::no_eds();
            o.reason = "K33";
            o.stats.elapsed_ms = timer.ms();
            return o;
        }
    }
    Vertex v0;
    try {
        v0 = find_central_vertex(g, 9);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::EccentricityBoundViolated) throw;
        return SolverOutcome::not_applicable("no vertex of eccentricity <= 4; graph is not P9-free",
                                             detail::desk_witness(g, Pattern::path(9)));
    }
    SolverOutcome out;
    VertexSet roots{v0};
    for (Vertex w : g.neighbors(v0)) roots.push_back(w);
    std::sort(roots.begin(), roots.end());

    // Subsets of size <= 2, lexicographic: {}, {a}, {a,b}.
    auto subsets_le2 = [](const VertexSet& pool) {
        std::vector<VertexSet> subs{{}};
        for (size_t i = 0; i < pool.size(); ++i) subs.push_back({pool[i]});
        for (size_t i = 0; i < pool.size(); ++i)
            for (size_t j = i + 1; j < pool.size(); ++j) subs.push_back({pool[i], pool[j]});
        return subs;
    };

    for (Vertex v : roots) {
        ++out.stats.roots_explored;
        Levels L = distance_levels(g, v);
        RuleOutcome ro = v_forced_rules(L, ReducedInstance::start(g, v));
        if (ro.no_eds) continue;
        // The rules only ever commit stratum-3 vertices, so the whole search
        // runs on the fixed strata of v.
        LevelState st0 = init_state(g, v);
        VertexSet pool3 = frontier(st0).pool;
        for (Vertex f : ro.forced) {
            auto it = std::find(pool3.begin(), pool3.end(), f);
            if (it != pool3.end()) pool3.erase(it);
        }
        for (const VertexSet& t3 : subsets_le2(pool3)) {
            VertexSet z3 = ro.forced;
            for (Vertex y : t3) insert_sorted(z3, y);
            auto e3 = extend(st0, z3);
            if (!std::holds_alternative<LevelState>(e3)) continue;
            const LevelState& st3 = std::get<LevelState>(e3);
            ++out.stats.candidate_sets;

            DiForcedOutcome d4 = di_forced_candidates(st3);
            if (d4.no_eds) continue;
            VertexSet pool4 = frontier(st3).pool;
            for (Vertex f : d4.forced) {
                auto it = std::find(pool4.begin(), pool4.end(), f);
                if (it != pool4.end()) pool4.erase(it);
            }
            for (const VertexSet& t4 : subsets_le2(pool4)) {
                VertexSet z4 = d4.forced;
                for (Vertex y : t4) insert_sorted(z4, y);
                auto e4 = extend(st3, z4);
                if (!std::holds_alternative<LevelState>(e4)) continue;
                ++out.stats.candidate_sets;
                // Strata past 4 are fully forced (the last stratum commits
                // wholesale); the chain never reaches an inclusion tie here.
                detail::ChainContext ctx;
                detail::forced_chain(std::get<LevelState>(e4), ctx);
                if (!ctx.found.empty()) {
                    auto res = SolverOutcome::found({*ctx.found.begin()});
                    res.stats = out.stats;
                    res.stats.elapsed_ms = timer.ms();
                    return res;
                }
            }
        }
    }
    out.stats.elapsed_ms = timer.ms();
    return out;
}

struct DispatchOptions {
    uint64_t oracle_budget = 100'000'000;
    int lp4_cap = 3;           // largest l tried for the lP4 route
    int classify_cap_n = 64;   // class membership is verified only up to here
};

enum class SolverClass { Auto, P5, P7, LP4, S222, S223, S224, P9Deg3, Oracle };

inline SolverClass parse_solver_class(const std::string& s, int* l_out) {
    if (s == "auto") return SolverClass::Auto;
    if (s == "p5") return SolverClass::P5;
    if (s == "p7") return SolverClass::P7;
    if (s == "s222") return SolverClass::S222;
    if (s == "s223") return SolverClass::S223;
    if (s == "s224") return SolverClass::S224;
    if (s == "p9deg3") return SolverClass::P9Deg3;
    if (s == "oracle") return SolverClass::Oracle;
    if (s.rfind("lp4", 0) == 0) {
        int l = 2;
        if (s.size() > 3) {
            if (s[3] != '=') throw Error(ErrorCode::UnknownClassName, "unknown class: " + s);
            try {
                l = std::stoi(s.substr(4));
            } catch (...) { throw Error(ErrorCode::UnknownClassName, "unknown class: " + s); }
        }
        if (l < 2) throw Error(ErrorCode::UnknownClassName, "lp4 requires l >= 2");
        if (l_out) *l_out = l;
        return SolverClass::LP4;
    }
    throw Error(ErrorCode::UnknownClassName, "unknown class: " + s);
}

namespace detail {

inline SolverOutcome run_oracle(const Graph& g, uint64_t budget) {
    Timer timer;
    SolverOutcome out;
    try {
        BruteResult br = brute_force_eds(g, BruteMode::First, budget);
        if (!br.found.empty()) {
            out = SolverOutcome::found(br.found.front());
        }
        out.stats.candidate_sets = br.nodes;
    } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
        out = SolverOutcome::not_applicable("oracle budget exhausted", std::nullopt, true);
    }
    out.stats.elapsed_ms = timer.ms();
    return out;
}

inline SolverOutcome wrap_enumerate(const Graph& g) {
    EnumerateOutcome e = enumerate_s222_free(g);
    if (!e.applicable)
        return SolverOutcome::not_applicable("graph is not S2_2_2-free", e.witness);
    if (e.certificates.empty()) return SolverOutcome::no_eds();
    return SolverOutcome::found(e.certificates.front());
}

// All roots within three strata: the P_5-free procedure applies (this is
// weaker than P_5-freeness, e.g. C_6 qualifies).
inline bool shallow_everywhere(const Graph& g) {
    for (Vertex v = 0; v < g.n(); ++v)
        if (distance_levels(g, v).depth() >= 4) return false;
    return true;
}

inline SolverOutcome dispatch_connected(const Graph& g, SolverClass cls, int lp4_l,
                                        const DispatchOptions& opt) {
    switch (cls) {
        case SolverClass::P5: return solve_p5_free(g);
        case SolverClass::P7: return solve_p7_free(g);
        case SolverClass::LP4: return solve_lp4_free(g, lp4_l);
        case SolverClass::S222: return wrap_enumerate(g);
        case SolverClass::S223: return solve_s223_free(g);
        case SolverClass::S224: return solve_s224_free(g);
        case SolverClass::P9Deg3: return solve_p9_deg3(g);
        case SolverClass::Oracle: return run_oracle(g, opt.oracle_budget);
        case SolverClass::Auto: break;
    }
    if (!is_bipartite(g)) return run_oracle(g, opt.oracle_budget);
    if (g.n() > opt.classify_cap_n) {
        // Too large to verify class membership; only certificate-producing
        // routes are trusted.
        if (shallow_everywhere(g)) return solve_p5_free(g);
        SolverOutcome s = solve_s224_free(g);
        if (s.status == SolverOutcome::Status::Found) return s;
        return SolverOutcome::not_applicable(
            "class membership not verified at this size; rerun with an explicit --class");
    }
    ClassReport r = classify(g, opt.lp4_cap);
    if (r.k33present && r.maxdeg3) {
        SolverOutcome o = SolverOutcome::no_eds();
        o.reason = "K33";
        return o;
    }
    if (shallow_everywhere(g)) return solve_p5_free(g);
    if (r.s222free.value) return wrap_enumerate(g);
    if (r.p7free.value) return solve_p7_free(g);
    if (r.s223free.value) return solve_s223_free(g);
    if (r.s224free.value) return solve_s224_free(g);
    if (r.maxdeg3 && r.p9free.value) return solve_p9_deg3(g);
    for (auto& [l, flag] : r.lp4free)
        if (flag.value && !find_homogeneous_set(g)) return solve_lp4_free(g, l);
    return run_oracle(g, opt.oracle_budget);
}

} // namespace detail

// Route a graph to the cheapest applicable solver (or a named one), running
// per connected component; a graph has an e.d.s. iff every component does.
inline SolverOutcome dispatch(const Graph& g, SolverClass cls = SolverClass::Auto, int lp4_l = 2,
                              const DispatchOptions& opt = {}) {
    detail::Timer timer;
    auto comps = connected_components(g);
    if (comps.size() <= 1) {
        SolverOutcome o = detail::dispatch_connected(g, cls, lp4_l, opt);
        o.stats.elapsed_ms = timer.ms();
        return o;
    }
    VertexSet merged;
    SolverOutcome total;
    for (const VertexSet& comp : comps) {
        Graph sub = induced_subgraph(g, comp);
        SolverOutcome o = detail::dispatch_connected(sub, cls, lp4_l, opt);
        total.stats.roots_explored += o.stats.roots_explored;
        total.stats.candidate_sets += o.stats.candidate_sets;
        if (o.status == SolverOutcome::Status::NotApplicable) {
            o.reason = "component {" + std::to_string(comp.front()) + ", ...}: " + o.reason;
            if (o.witness)
                for (Vertex& w : o.witness->mapping) w = comp[w];
            o.stats = total.stats;
            o.stats.elapsed_ms = timer.ms();
            return o;
        }
        if (o.status == SolverOutcome::Status::NoEds) {
            total.status = SolverOutcome::Status::NoEds;
            total.reason = o.reason;
            total.stats.elapsed_ms = timer.ms();
            return total;
        }
        for (Vertex v : o.eds->members) merged.push_back(comp[v]);
    }
    std::sort(merged.begin(), merged.end());
    SolverOutcome o = SolverOutcome::found({std::move(merged)});
    o.stats = total.stats;
    o.stats.elapsed_ms = timer.ms();
    return o;
}

} // namespace eds
