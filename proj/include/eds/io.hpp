#pragma once

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "eds/reductions.hpp"
#include "eds/solvers.hpp"

namespace eds {

// GraphFile: header "n m", then m edge lines "u v" (0-based), then optional
// weight lines "w u p/q". '#' starts a comment. Printing is canonical:
// edges sorted lexicographically, non-default weights in vertex order, so
// parse(print(g)) == g.

namespace detail {

inline bool next_content_line(std::istream& is, std::string& line) {
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto end = line.find_last_not_of(" \t\r");
        if (end == std::string::npos) continue;
        line.erase(end + 1);
        return true;
    }
    return false;
}

inline Rational parse_rational(const std::string& tok) {
    Rational r;
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            r.num = std::stoll(tok);
            r.den = 1;
        } else {
            r.num = std::stoll(tok.substr(0, slash));
            r.den = std::stoll(tok.substr(slash + 1));
        }
    } catch (...) {
        throw Error(ErrorCode::ParseError, "bad weight: " + tok);
    }
    if (r.den == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + tok);
    r.reduce();
    return r;
}

} // namespace detail

inline Graph read_graph(std::istream& is) {
    std::string line;
    if (!detail::next_content_line(is, line))
        throw Error(ErrorCode::ParseError, "empty graph file");
    std::istringstream head(line);
    int n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw Error(ErrorCode::ParseError, "bad header, expected 'n m'");
    std::vector<std::pair<Vertex, Vertex>> es;
    std::vector<std::pair<Vertex, Rational>> ws;
    int edges_seen = 0;
    while (detail::next_content_line(is, line)) {
        std::istringstream ls(line);
        std::string first;
        ls >> first;
        if (first == "w") {
            int v;
            std::string tok;
            if (!(ls >> v >> tok)) throw Error(ErrorCode::ParseError, "bad weight line: " + line);
            if (v < 0 || v >= n) throw Error(ErrorCode::ParseError, "weight vertex out of range");
            ws.emplace_back(v, detail::parse_rational(tok));
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw Error(ErrorCode::ParseError, "bad edge line: " + line);
        }
        if (!(ls >> v)) throw Error(ErrorCode::ParseError, "bad edge line: " + line);
        es.emplace_back(u, v);
        ++edges_seen;
    }
    if (edges_seen != m)
        throw Error(ErrorCode::ParseError, "header promises " + std::to_string(m) +
                                               " edges, file has " + std::to_string(edges_seen));
    Graph g = build_graph(n, es);
    for (auto& [v, w] : ws) g.set_weight(v, w);
    return g;
}

inline void write_graph(std::ostream& os, const Graph& g) {
    auto es = g.edges();
    std::sort(es.begin(), es.end());
    os << g.n() << " " << es.size() << "\n";
    for (auto [u, v] : es) os << u << " " << v << "\n";
    if (g.has_weights())
        for (Vertex v = 0; v < g.n(); ++v) {
            Rational w = g.weight(v);
            if (w.is_one()) continue;
            os << "w " << v << " " << w.num;
            if (w.den != 1) os << "/" << w.den;
            os << "\n";
        }
}

// X3CFile: header "n m", then m lines "a b c".
inline X3CInstance read_x3c(std::istream& is) {
    std::string line;
    if (!detail::next_content_line(is, line))
        throw Error(ErrorCode::ParseError, "empty x3c file");
    std::istringstream head(line);
    X3CInstance h;
    int m = -1;
    if (!(head >> h.n >> m) || h.n < 0 || m < 0)
        throw Error(ErrorCode::ParseError, "bad header, expected 'n m'");
    while (detail::next_content_line(is, line)) {
        std::istringstream ls(line);
        std::array<int, 3> t{};
        if (!(ls >> t[0] >> t[1] >> t[2]))
            throw Error(ErrorCode::ParseError, "bad triple line: " + line);
        h.triples.push_back(t);
    }
    if (static_cast<int>(h.triples.size()) != m)
        throw Error(ErrorCode::ParseError, "header promises " + std::to_string(m) + " triples");
    h.validate();
    return h;
}

inline void write_x3c(std::ostream& os, const X3CInstance& h) {
    os << h.n << " " << h.triples.size() << "\n";
    for (auto& t : h.triples) os << t[0] << " " << t[1] << " " << t[2] << "\n";
}

// "0,3,7" -> sorted vertex set; empty string -> empty set.
inline VertexSet parse_vertex_set(const std::string& s) {
    VertexSet out;
    size_t i = 0;
    while (i < s.size()) {
        auto comma = s.find(',', i);
        std::string tok = s.substr(i, comma == std::string::npos ? std::string::npos : comma - i);
        if (!tok.empty()) {
            try {
                out.push_back(std::stoi(tok));
            } catch (...) {
                throw Error(ErrorCode::ParseError, "bad vertex: " + tok);
            }
        }
        i = comma == std::string::npos ? s.size() : comma + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline nlohmann::json to_json(const SolverOutcome& o) {
    nlohmann::json j;
    switch (o.status) {
        case SolverOutcome::Status::Found: j["status"] = "found"; break;
        case SolverOutcome::Status::NoEds: j["status"] = "no_eds"; break;
        case SolverOutcome::Status::NotApplicable: j["status"] = "not_applicable"; break;
    }
    if (o.eds) j["eds"] = o.eds->members;
    if (!o.reason.empty()) j["reason"] = o.reason;
    if (o.witness) j["witness"] = o.witness->mapping;
    j["stats"] = {{"roots_explored", o.stats.roots_explored},
                  {"candidate_sets", o.stats.candidate_sets},
                  {"cap_exceeded", o.cap_exceeded}};
    return j;
}

inline nlohmann::json to_json(const ClassReport& r) {
    nlohmann::json j;
    auto flag = [](bool value, const std::optional<Witness>& w) {
        nlohmann::json f;
        f["value"] = value;
        if (w) f["witness"] = w->mapping;
        return f;
    };
    j["bipartite"] = flag(r.bipartite, r.odd_cycle);
    j["connected"] = flag(r.connected, std::nullopt);
    j["maxdeg3"] = flag(r.maxdeg3, r.high_degree);
    j["p5free"] = flag(r.p5free.value, r.p5free.witness);
    j["p6free"] = flag(r.p6free.value, r.p6free.witness);
    j["p7free"] = flag(r.p7free.value, r.p7free.witness);
    j["p9free"] = flag(r.p9free.value, r.p9free.witness);
    j["s222free"] = flag(r.s222free.value, r.s222free.witness);
    j["s223free"] = flag(r.s223free.value, r.s223free.witness);
    j["s224free"] = flag(r.s224free.value, r.s224free.witness);
    j["s124free"] = flag(r.s124free.value, r.s124free.witness);
    j["h4free"] = flag(r.h4free.value, r.h4free.witness);
    for (auto& [l, f] : r.lp4free)
        j[std::to_string(l) + "p4free"] = flag(f.value, f.witness);
    j["chordal_bipartite"] = flag(r.chordal_bipartite, r.long_even_cycle);
    j["k33present"] = flag(r.k33present, r.k33);
    j["k23_degree3_exclusions"] = r.k23_degree3_exclusions;
    return j;
}

inline nlohmann::json to_json(const ReductionMap& map) {
    nlohmann::json arr = nlohmann::json::array();
    for (size_t v = 0; v < map.roles.size(); ++v) {
        const auto& e = map.roles[v];
        nlohmann::json r;
        r["vertex"] = v;
        switch (e.role) {
            case ReductionMap::Role::Ground: r["role"] = "ground"; r["index"] = e.index; break;
            case ReductionMap::Role::X: r["role"] = "x"; r["index"] = e.index; break;
            case ReductionMap::Role::Y: r["role"] = "y"; r["index"] = e.index; break;
            case ReductionMap::Role::Z: r["role"] = "z"; break;
            case ReductionMap::Role::W: r["role"] = "w"; break;
            case ReductionMap::Role::U: r["role"] = "u"; break;
            case ReductionMap::Role::GadgetInternal:
                r["role"] = "gadget";
                r["triple"] = e.gx;
                r["ground"] = e.gv;
                r["pos"] = e.pos;
                break;
        }
        arr.push_back(std::move(r));
    }
    return arr;
}

} // namespace eds
