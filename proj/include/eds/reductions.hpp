#pragma once

#include <array>
#include <functional>

#include "eds/eds_core.hpp"
#include "eds/recognizers.hpp"

namespace eds {

// Exact Cover by 3-Sets: ground set {0..n-1}, family of 3-element subsets.
struct X3CInstance {
    int n = 0;
    std::vector<std::array<int, 3>> triples;

    void validate() const {
        for (auto& t : triples) {
            if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
                throw Error(ErrorCode::InvalidSolution, "triple members must be distinct");
            for (int x : t)
                if (x < 0 || x >= n)
                    throw Error(ErrorCode::OutOfRange, "triple member out of range");
        }
    }
};

// Vertex roles in the transformation graph: the ground vertices, one x_j/y_j
// pair per triple, the apex z joined to the ground set, and the z-w-u tail.
struct ReductionMap {
    enum class Role { Ground, X, Y, Z, W, U, GadgetInternal };
    struct Entry {
        Role role = Role::Ground;
        int index = -1;   // ground element or triple index
        int gx = -1;      // gadget: triple index j of the x_j endpoint
        int gv = -1;      // gadget: ground index i of the v_i endpoint
        int pos = -1;     // gadget: position along the chain, 1-based from x_j
    };
    std::vector<Entry> roles;

    Vertex x_vertex(int j) const { return x_base + j; }
    Vertex y_vertex(int j) const { return y_base + j; }
    int x_base = 0, y_base = 0;
    Vertex z = -1, w = -1, u = -1;
};

// The transformation graph G_H: x_j sees the members of its triple, y_j is
// pendant on x_j, z sees every ground vertex, and z-w-u is a tail. G_H has
// n + 2m + 3 vertices and is bipartite with diameter at most 6.
inline std::pair<Graph, ReductionMap> x3c_to_ed(const X3CInstance& h) {
    h.validate();
    const int n = h.n;
    const int m = static_cast<int>(h.triples.size());
    ReductionMap map;
    map.x_base = n;
    map.y_base = n + m;
    map.z = n + 2 * m;
    map.w = n + 2 * m + 1;
    map.u = n + 2 * m + 2;
    map.roles.resize(n + 2 * m + 3);
    for (int i = 0; i < n; ++i) map.roles[i] = {ReductionMap::Role::Ground, i, -1, -1, -1};
    for (int j = 0; j < m; ++j) {
        map.roles[map.x_vertex(j)] = {ReductionMap::Role::X, j, -1, -1, -1};
        map.roles[map.y_vertex(j)] = {ReductionMap::Role::Y, j, -1, -1, -1};
    }
    map.roles[map.z] = {ReductionMap::Role::Z, -1, -1, -1, -1};
    map.roles[map.w] = {ReductionMap::Role::W, -1, -1, -1, -1};
    map.roles[map.u] = {ReductionMap::Role::U, -1, -1, -1, -1};

    std::vector<std::pair<Vertex, Vertex>> es;
    for (int j = 0; j < m; ++j) {
        for (int v : h.triples[j]) es.emplace_back(v, map.x_vertex(j));
        es.emplace_back(map.x_vertex(j), map.y_vertex(j));
    }
    for (int i = 0; i < n; ++i) es.emplace_back(map.z, i);
    es.emplace_back(map.z, map.w);
    es.emplace_back(map.w, map.u);
    return {build_graph(n + 2 * m + 3, es), std::move(map)};
}

using ExactCover = std::vector<int>; // triple indices, sorted

inline bool is_exact_cover(const X3CInstance& h, const ExactCover& cover) {
    std::vector<int> cnt(h.n, 0);
    for (int j : cover) {
        if (j < 0 || j >= static_cast<int>(h.triples.size())) return false;
        for (int v : h.triples[j]) ++cnt[v];
    }
    return std::all_of(cnt.begin(), cnt.end(), [](int c) { return c == 1; });
}

// A cover picks x_j for chosen triples, y_j for the rest, plus w.
inline EdsCertificate cover_to_eds(const X3CInstance& h, const ReductionMap& map,
                                   const ExactCover& cover) {
    if (!is_exact_cover(h, cover))
        throw Error(ErrorCode::InvalidSolution, "not an exact cover");
    std::vector<uint8_t> chosen(h.triples.size(), 0);
    for (int j : cover) chosen[j] = 1;
    VertexSet d;
    for (int j = 0; j < static_cast<int>(h.triples.size()); ++j)
        d.push_back(chosen[j] ? map.x_vertex(j) : map.y_vertex(j));
    d.push_back(map.w);
    std::sort(d.begin(), d.end());
    auto [g, m2] = x3c_to_ed(h);
    if (!is_eds(g, d))
        throw Error(ErrorCode::InvalidSolution, "constructed set failed e.d.s. verification");
    return {std::move(d)};
}

// Any e.d.s. of G_H avoids the ground set and z, contains w, and its X-part
// reads off an exact cover.
inline ExactCover eds_to_cover(const X3CInstance& h, const ReductionMap& map,
                               const EdsCertificate& cert) {
    auto [g, m2] = x3c_to_ed(h);
    if (!is_eds(g, cert.members))
        throw Error(ErrorCode::InvalidSolution, "input set is not an e.d.s. of G_H");
    if (!contains_sorted(cert.members, map.w))
        throw Error(ErrorCode::InvalidSolution, "w must belong to every e.d.s. of G_H");
    ExactCover cover;
    for (Vertex v : cert.members) {
        if (map.roles[v].role == ReductionMap::Role::Ground ||
            map.roles[v].role == ReductionMap::Role::Z)
            throw Error(ErrorCode::InvalidSolution, "ground/z vertices are excluded from every e.d.s.");
        if (map.roles[v].role == ReductionMap::Role::X) cover.push_back(map.roles[v].index);
    }
    if (!is_exact_cover(h, cover))
        throw Error(ErrorCode::InvalidSolution, "X-part does not form an exact cover");
    return cover;
}

enum class RoundTripDirection { CoverToEds, EdsToCover };

struct RoundTripSolution {
    ExactCover cover;
    EdsCertificate eds;
};

inline RoundTripSolution round_trip(const X3CInstance& h, const ReductionMap& map,
                                    RoundTripDirection dir, const RoundTripSolution& in) {
    RoundTripSolution out;
    if (dir == RoundTripDirection::CoverToEds) {
        out.cover = in.cover;
        out.eds = cover_to_eds(h, map, in.cover);
    } else {
        out.eds = in.eds;
        out.cover = eds_to_cover(h, map, in.eds);
    }
    return out;
}

namespace detail {

// Replace every incidence chain x_j .. v_i by a fresh path of 4^r edges;
// r starts at max(1, k-1) and grows until the result has no induced even
// cycle of length <= 2k. One round already removes every C_4 of G_H.
inline std::pair<Graph, ReductionMap> subdivide_rounds(const X3CInstance& h, int k) {
    if (k < 2) throw Error(ErrorCode::OutOfRange, "girth target k must be >= 2");
    const int n = h.n;
    const int m = static_cast<int>(h.triples.size());
    int rounds = std::max(1, k - 1);
    for (int attempt = 0; attempt < 4; ++attempt, ++rounds) {
        int chain_edges = 1;
        for (int r = 0; r < rounds; ++r) chain_edges *= 4;
        ReductionMap map;
        map.x_base = n;
        map.y_base = n + m;
        map.z = n + 2 * m;
        map.w = n + 2 * m + 1;
        map.u = n + 2 * m + 2;
        int next = n + 2 * m + 3;
        std::vector<std::pair<Vertex, Vertex>> es;
        std::vector<ReductionMap::Entry> roles(n + 2 * m + 3);
        for (int i = 0; i < n; ++i) roles[i] = {ReductionMap::Role::Ground, i, -1, -1, -1};
        for (int j = 0; j < m; ++j) {
            roles[map.x_vertex(j)] = {ReductionMap::Role::X, j, -1, -1, -1};
            roles[map.y_vertex(j)] = {ReductionMap::Role::Y, j, -1, -1, -1};
            es.emplace_back(map.x_vertex(j), map.y_vertex(j));
        }
        roles[map.z] = {ReductionMap::Role::Z, -1, -1, -1, -1};
        roles[map.w] = {ReductionMap::Role::W, -1, -1, -1, -1};
        roles[map.u] = {ReductionMap::Role::U, -1, -1, -1, -1};
        for (int i = 0; i < n; ++i) es.emplace_back(map.z, i);
        es.emplace_back(map.z, map.w);
        es.emplace_back(map.w, map.u);
        for (int j = 0; j < m; ++j)
            for (int v : h.triples[j]) {
                Vertex prev = map.x_vertex(j);
                for (int p = 1; p < chain_edges; ++p) {
                    roles.push_back({ReductionMap::Role::GadgetInternal, -1, j, v, p});
                    es.emplace_back(prev, next);
                    prev = next++;
                }
                es.emplace_back(prev, v);
            }
        Graph g = build_graph(next, es);
        ReductionMap out = std::move(map);
        out.roles = std::move(roles);
        auto cyc = shortest_induced_even_cycle_at_least(g, 4);
        if (!cyc || static_cast<int>(cyc->mapping.size()) > 2 * k)
            return {std::move(g), std::move(out)};
    }
    throw Error(ErrorCode::InvalidSolution,
                "subdivision failed to reach the requested cycle-freeness");
}

} // namespace detail

// Girth-raising gadget on a graph produced by x3c_to_ed: incidence edges are
// stretched into paths until the result is (C_4, ..., C_{2k})-free. The
// instance is read back off the map, so only those edges are touched.
inline std::pair<Graph, ReductionMap> subdivide_for_girth(const Graph& g, const ReductionMap& map,
                                                          int k) {
    X3CInstance h;
    int m = 0;
    for (auto& e : map.roles) {
        if (e.role == ReductionMap::Role::Ground) h.n = std::max(h.n, e.index + 1);
        if (e.role == ReductionMap::Role::X) m = std::max(m, e.index + 1);
    }
    h.triples.resize(m);
    for (int j = 0; j < m; ++j) {
        int at = 0;
        for (Vertex v : g.neighbors(map.x_vertex(j)))
            if (map.roles[v].role == ReductionMap::Role::Ground) {
                if (at >= 3) throw Error(ErrorCode::InvalidSolution, "not an x3c_to_ed graph");
                h.triples[j][at++] = v;
            }
        if (at != 3) throw Error(ErrorCode::InvalidSolution, "not an x3c_to_ed graph");
    }
    return detail::subdivide_rounds(h, k);
}

// Exact X3C backtracking over the lowest uncovered ground element.
inline std::optional<ExactCover> solve_x3c_brute(const X3CInstance& h,
                                                 uint64_t budget = 50'000'000) {
    h.validate();
    if (h.n % 3 != 0) return std::nullopt;
    std::vector<std::vector<int>> containing(h.n);
    for (int j = 0; j < static_cast<int>(h.triples.size()); ++j)
        for (int v : h.triples[j]) containing[v].push_back(j);
    std::vector<uint8_t> covered(h.n, 0);
    ExactCover chosen;
    uint64_t nodes = 0;
    std::function<bool(int)> go = [&](int from) -> bool {
        if (nodes++ >= budget) throw Error(ErrorCode::BudgetExceeded, "X3C budget exhausted");
        int x = -1;
        for (int v = from; v < h.n; ++v)
            if (!covered[v]) { x = v; break; }
        if (x == -1) return true;
        for (int j : containing[x]) {
            auto& t = h.triples[j];
            if (covered[t[0]] || covered[t[1]] || covered[t[2]]) continue;
            covered[t[0]] = covered[t[1]] = covered[t[2]] = 1;
            chosen.push_back(j);
            if (go(x + 1)) return true;
            chosen.pop_back();
            covered[t[0]] = covered[t[1]] = covered[t[2]] = 0;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace eds
