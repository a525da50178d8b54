#pragma once

#include <cctype>
#include <sstream>

#include "eds/graph.hpp"

namespace eds {

// The fixed forbidden-subgraph shapes this library recognizes. Spider(i,j,k)
// is the tree with one center and three pendant paths of lengths i, j, k
// (so Spider(1,1,1) is the claw). A4 is a C_4 with one pendant vertex; H4 is
// the "extended domino": two squares sharing an edge plus a pendant P_2 tail
// at a corner.
struct Pattern {
    enum class Kind { Path, DisjointPaths, Spider, Cycle, A4, H4, K23, K33 };

    Kind kind = Kind::Path;
    int a = 1, b = 0, c = 0; // Path: a=k; DisjointPaths: a=l, b=k; Spider: a,b,c legs; Cycle: a=m

    static Pattern path(int k) { return {Kind::Path, k, 0, 0}; }
    static Pattern disjoint_paths(int l, int k) { return {Kind::DisjointPaths, l, k, 0}; }
    static Pattern spider(int i, int j, int k) { return {Kind::Spider, i, j, k}; }
    static Pattern cycle(int m) { return {Kind::Cycle, m, 0, 0}; }
    static Pattern a4() { return {Kind::A4, 0, 0, 0}; }
    static Pattern h4() { return {Kind::H4, 0, 0, 0}; }
    static Pattern k23() { return {Kind::K23, 0, 0, 0}; }
    static Pattern k33() { return {Kind::K33, 0, 0, 0}; }

    int size() const {
        switch (kind) {
            case Kind::Path: return a;
            case Kind::DisjointPaths: return a * b;
            case Kind::Spider: return 1 + a + b + c;
            case Kind::Cycle: return a;
            case Kind::A4: return 5;
            case Kind::H4: return 8;
            case Kind::K23: return 5;
            case Kind::K33: return 6;
        }
        return 0;
    }

    std::string name() const {
        std::ostringstream os;
        switch (kind) {
            case Kind::Path: os << "P" << a; break;
            case Kind::DisjointPaths: os << a << "P" << b; break;
            case Kind::Spider: os << "S" << a << "_" << b << "_" << c; break;
            case Kind::Cycle: os << "C" << a; break;
            case Kind::A4: os << "A4"; break;
            case Kind::H4: os << "H4"; break;
            case Kind::K23: os << "K2_3"; break;
            case Kind::K33: os << "K3_3"; break;
        }
        return os.str();
    }

    // The pattern as a concrete graph, in a fixed vertex order. Witnesses
    // returned by the recognizers list host vertices in this order.
    Graph graph() const {
        std::vector<std::pair<Vertex, Vertex>> es;
        switch (kind) {
            case Kind::Path:
                for (int i = 0; i + 1 < a; ++i) es.emplace_back(i, i + 1);
                return build_graph(a, es);
            case Kind::DisjointPaths:
                for (int comp = 0; comp < a; ++comp)
                    for (int i = 0; i + 1 < b; ++i)
                        es.emplace_back(comp * b + i, comp * b + i + 1);
                return build_graph(a * b, es);
            case Kind::Spider: {
                int next = 1;
                for (int leg : {a, b, c}) {
                    int prev = 0;
                    for (int i = 0; i < leg; ++i) {
                        es.emplace_back(prev, next);
                        prev = next++;
                    }
                }
                return build_graph(next, es);
            }
            case Kind::Cycle:
                for (int i = 0; i < a; ++i) es.emplace_back(i, (i + 1) % a);
                return build_graph(a, es);
            case Kind::A4:
                es = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}};
                return build_graph(5, es);
            case Kind::H4:
                // Squares 0-1-2-3 and 0-4-5-3 share edge 0-3; tail 5-6-7.
                es = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 3}, {5, 6}, {6, 7}};
                return build_graph(8, es);
            case Kind::K23:
                for (int x : {0, 1})
                    for (int y : {2, 3, 4}) es.emplace_back(x, y);
                return build_graph(5, es);
            case Kind::K33:
                for (int x : {0, 1, 2})
                    for (int y : {3, 4, 5}) es.emplace_back(x, y);
                return build_graph(6, es);
        }
        return Graph{};
    }
};

// Accepts P7, C6, 2P4, S2_2_4, A4, H4, K2_3, K3_3.
inline Pattern parse_pattern(const std::string& s) {
    auto fail = [&] { throw Error(ErrorCode::ParseError, "unrecognized pattern: " + s); };
    if (s == "A4") return Pattern::a4();
    if (s == "H4") return Pattern::h4();
    if (s == "K2_3") return Pattern::k23();
    if (s == "K3_3") return Pattern::k33();
    if (s.empty()) fail();
    if (s[0] == 'P' || s[0] == 'C') {
        int k = 0;
        try {
            k = std::stoi(s.substr(1));
        } catch (...) { fail(); }
        if (k < 1 || (s[0] == 'C' && k < 4)) fail();
        return s[0] == 'P' ? Pattern::path(k) : Pattern::cycle(k);
    }
    if (s[0] == 'S') {
        int i, j, k;
        char u1, u2;
        std::istringstream is(s.substr(1));
        if ((is >> i >> u1 >> j >> u2 >> k) && u1 == '_' && u2 == '_' && i >= 1 && j >= 1 && k >= 1)
            return Pattern::spider(i, j, k);
        fail();
    }
    if (std::isdigit(static_cast<unsigned char>(s[0]))) {
        auto pos = s.find('P');
        if (pos != std::string::npos) {
            try {
                int l = std::stoi(s.substr(0, pos));
                int k = std::stoi(s.substr(pos + 1));
                if (l >= 1 && k >= 1) return Pattern::disjoint_paths(l, k);
            } catch (...) { fail(); }
        }
    }
    fail();
    return Pattern{};
}

// Host vertices realizing a pattern, listed in the pattern's vertex order.
struct Witness {
    VertexSet mapping;
};

} // namespace eds
