#pragma once

#include <memory>

#include "eds/recognizers.hpp"
#include "eds/reductions.hpp"

namespace eds {

// xoshiro256** 1.0, seeded through splitmix64. The algorithm is pinned so
// that identical (spec, seed) pairs reproduce instances bit-for-bit across
// platforms and ports; see README for the exact constants.
class Xoshiro256ss {
public:
    explicit Xoshiro256ss(uint64_t seed) {
        uint64_t x = seed;
        for (auto& si : s_) {
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            si = z ^ (z >> 31);
        }
    }

    uint64_t next() {
        auto rotl = [](uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
        uint64_t result = rotl(s_[1] * 5, 7) * 9;
        uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) by rejection on the top bits.
    uint64_t below(uint64_t bound) {
        if (bound <= 1) return 0;
        uint64_t threshold = (~bound + 1) % bound; // == 2^64 mod bound
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    uint64_t s_[4];
};

// A reproducible instance recipe: the seed fully determines the output.
struct GenSpec {
    enum class Kind { RandomBipartite, HFreeRejection, PlantedEds, RandomX3C, Named };

    Kind kind = Kind::Named;
    uint64_t seed = 0;

    // RandomBipartite
    int nx = 0, ny = 0;
    double edge_prob = 0.0;

    // HFreeRejection
    std::shared_ptr<GenSpec> inner;
    Pattern pattern;
    int max_tries = 100;

    // PlantedEds: style "cat" (caterpillar spine, centers three apart) or
    // "wide" (two stars bridged leaf-to-leaf). Centers come first in the
    // vertex numbering and form the planted certificate.
    std::string planted_style = "cat";
    std::vector<int> degrees; // per-center degree (cat) or pendant count (wide)
    int centers = 2;
    int pendants = 2;
    int bridges = 1;

    // RandomX3C
    int ground = 0, triples = 0;

    // Named
    std::string name; // P7, C6, S2_2_4, K2_3, ...
};

struct Generated {
    std::optional<Graph> graph;
    std::optional<X3CInstance> x3c;
    VertexSet planted; // planted e.d.s., when the spec plants one
};

namespace detail {

inline Graph gen_named(const std::string& name) {
    // K_{a,b} is not a recognizer pattern for general a,b; handle it here.
    if (name.size() > 1 && name[0] == 'K') {
        auto us = name.find('_');
        if (us != std::string::npos) {
            int a = std::stoi(name.substr(1, us - 1));
            int b = std::stoi(name.substr(us + 1));
            std::vector<std::pair<Vertex, Vertex>> es;
            for (int i = 0; i < a; ++i)
                for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
            return build_graph(a + b, es);
        }
    }
    return parse_pattern(name).graph();
}

inline Graph gen_random_bipartite(int nx, int ny, double p, Xoshiro256ss& rng) {
    std::vector<std::pair<Vertex, Vertex>> es;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            if (rng.unit() < p) es.emplace_back(i, nx + j);
    return build_graph(nx + ny, es);
}

// Caterpillar of stars: centers c_0..c_{k-1} spaced three apart along a
// spine (c_i - a_i - b_i - c_{i+1}), pendants filling each center up to its
// requested degree. Every vertex is dominated exactly once by the centers.
inline Generated gen_planted_cat(const std::vector<int>& degrees) {
    const int k = static_cast<int>(degrees.size());
    std::vector<std::pair<Vertex, Vertex>> es;
    int next = k;
    for (int i = 0; i + 1 < k; ++i) {
        int a = next++, b = next++;
        es.emplace_back(i, a);
        es.emplace_back(a, b);
        es.emplace_back(b, i + 1);
    }
    for (int i = 0; i < k; ++i) {
        int spine = (k == 1) ? 0 : (i == 0 || i == k - 1 ? 1 : 2);
        for (int p = 0; p < degrees[i] - spine; ++p) es.emplace_back(i, next++);
    }
    Generated out;
    out.graph = build_graph(next, es);
    for (int i = 0; i < k; ++i) out.planted.push_back(i);
    return out;
}

// Two stars with opposite polarity, joined by leaf-leaf bridges. Radius
// stays small, so the shallow solvers apply at any size.
inline Generated gen_planted_wide(int pendants, int bridges, Xoshiro256ss& rng) {
    std::vector<std::pair<Vertex, Vertex>> es;
    const Vertex c0 = 0, c1 = 1;
    std::vector<Vertex> leaves0, leaves1;
    int next = 2;
    for (int p = 0; p < pendants; ++p) { leaves0.push_back(next); es.emplace_back(c0, next++); }
    for (int p = 0; p < pendants; ++p) { leaves1.push_back(next); es.emplace_back(c1, next++); }
    bridges = std::max(1, std::min(bridges, pendants * pendants));
    std::vector<uint64_t> picked;
    for (int bdone = 0; bdone < bridges;) {
        uint64_t a = rng.below(leaves0.size());
        uint64_t b = rng.below(leaves1.size());
        uint64_t code = a * leaves1.size() + b;
        if (std::find(picked.begin(), picked.end(), code) != picked.end()) continue;
        picked.push_back(code);
        es.emplace_back(leaves0[a], leaves1[b]);
        ++bdone;
    }
    Generated out;
    out.graph = build_graph(next, es);
    out.planted = {c0, c1};
    return out;
}

inline X3CInstance gen_random_x3c(int n, int m, Xoshiro256ss& rng) {
    X3CInstance h;
    h.n = n;
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int j = 0; j < m; ++j) {
        // Partial Fisher-Yates: the first three entries become the triple.
        for (int t = 0; t < 3; ++t) {
            uint64_t pick = t + rng.below(n - t);
            std::swap(pool[t], pool[pick]);
        }
        std::array<int, 3> tr{pool[0], pool[1], pool[2]};
        std::sort(tr.begin(), tr.end());
        h.triples.push_back(tr);
    }
    return h;
}

} // namespace detail

inline Generated generate(const GenSpec& spec) {
    Xoshiro256ss rng(spec.seed);
    Generated out;
    switch (spec.kind) {
        case GenSpec::Kind::Named:
            out.graph = detail::gen_named(spec.name);
            return out;
        case GenSpec::Kind::RandomBipartite:
            out.graph = detail::gen_random_bipartite(spec.nx, spec.ny, spec.edge_prob, rng);
            return out;
        case GenSpec::Kind::RandomX3C:
            out.x3c = detail::gen_random_x3c(spec.ground, spec.triples, rng);
            return out;
        case GenSpec::Kind::PlantedEds: {
            if (spec.planted_style == "wide")
                return detail::gen_planted_wide(spec.pendants, spec.bridges, rng);
            std::vector<int> degs = spec.degrees;
            if (degs.empty()) degs.assign(spec.centers, spec.pendants + 2);
            return detail::gen_planted_cat(degs);
        }
        case GenSpec::Kind::HFreeRejection: {
            if (!spec.inner) throw Error(ErrorCode::ParseError, "hfree spec needs an inner spec");
            for (int t = 0; t < spec.max_tries; ++t) {
                GenSpec inner = *spec.inner;
                inner.seed = rng.next();
                Generated cand = generate(inner);
                if (!cand.graph) throw Error(ErrorCode::ParseError, "hfree inner spec must yield a graph");
                if (!contains_induced(*cand.graph, spec.pattern)) return cand;
            }
            throw Error(ErrorCode::RejectionExhausted,
                        "no " + spec.pattern.name() + "-free sample within " +
                            std::to_string(spec.max_tries) + " tries");
        }
    }
    throw Error(ErrorCode::ParseError, "invalid generator spec");
}

// Spec strings: "named:C6", "rbip:nx=8,ny=8,p=0.2", "x3c:n=9,m=6",
// "planted:style=cat,degrees=2:3:2", "planted:style=wide,pendants=999,bridges=40",
// "hfree:pattern=S2_2_4,tries=100,inner=(rbip:nx=8,ny=8,p=0.2)".
inline GenSpec parse_genspec(const std::string& s) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::ParseError, "bad generator spec '" + s + "': " + why);
    };
    auto colon = s.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    std::string kind = s.substr(0, colon);
    std::string rest = s.substr(colon + 1);
    GenSpec spec;
    if (kind == "named") {
        spec.kind = GenSpec::Kind::Named;
        spec.name = rest;
        return spec;
    }
    // key=value pairs, comma separated; parentheses nest inner specs.
    std::vector<std::pair<std::string, std::string>> kv;
    size_t i = 0;
    while (i < rest.size()) {
        auto eq = rest.find('=', i);
        if (eq == std::string::npos) fail("expected key=value");
        std::string key = rest.substr(i, eq - i);
        std::string val;
        size_t j = eq + 1;
        if (j < rest.size() && rest[j] == '(') {
            int depth = 0;
            size_t start = ++j;
            while (j < rest.size()) {
                if (rest[j] == '(') ++depth;
                if (rest[j] == ')') {
                    if (depth == 0) break;
                    --depth;
                }
                ++j;
            }
            if (j >= rest.size()) fail("unbalanced parentheses");
            val = rest.substr(start, j - start);
            ++j;
        } else {
            auto comma = rest.find(',', j);
            val = rest.substr(j, comma == std::string::npos ? std::string::npos : comma - j);
            j = comma == std::string::npos ? rest.size() : comma;
        }
        kv.emplace_back(key, val);
        if (j < rest.size() && rest[j] == ',') ++j;
        i = j;
    }
    auto get = [&](const std::string& key) -> std::optional<std::string> {
        for (auto& [k, v] : kv)
            if (k == key) return v;
        return std::nullopt;
    };
    auto geti = [&](const std::string& key, int dflt) {
        auto v = get(key);
        return v ? std::stoi(*v) : dflt;
    };
    if (kind == "rbip") {
        spec.kind = GenSpec::Kind::RandomBipartite;
        spec.nx = geti("nx", 0);
        spec.ny = geti("ny", 0);
        if (auto v = get("p")) spec.edge_prob = std::stod(*v);
        if (spec.nx <= 0 || spec.ny <= 0) fail("rbip needs nx, ny > 0");
        return spec;
    }
    if (kind == "x3c") {
        spec.kind = GenSpec::Kind::RandomX3C;
        spec.ground = geti("n", 0);
        spec.triples = geti("m", 0);
        if (spec.ground <= 0 || spec.triples <= 0) fail("x3c needs n, m > 0");
        return spec;
    }
    if (kind == "planted") {
        spec.kind = GenSpec::Kind::PlantedEds;
        if (auto v = get("style")) spec.planted_style = *v;
        spec.centers = geti("centers", 2);
        spec.pendants = geti("pendants", 2);
        spec.bridges = geti("bridges", 1);
        if (auto v = get("degrees")) {
            spec.degrees.clear();
            std::string d = *v;
            size_t p = 0;
            while (p < d.size()) {
                auto q = d.find(':', p);
                spec.degrees.push_back(std::stoi(d.substr(p, q == std::string::npos ? std::string::npos : q - p)));
                p = q == std::string::npos ? d.size() : q + 1;
            }
        } else if (spec.planted_style == "cat") {
            spec.degrees.assign(spec.centers, spec.pendants + 2);
        }
        return spec;
    }
    if (kind == "hfree") {
        spec.kind = GenSpec::Kind::HFreeRejection;
        if (auto v = get("pattern")) spec.pattern = parse_pattern(*v);
        else fail("hfree needs pattern=");
        spec.max_tries = geti("tries", 100);
        if (auto v = get("inner")) spec.inner = std::make_shared<GenSpec>(parse_genspec(*v));
        else fail("hfree needs inner=(...)");
        return spec;
    }
    fail("unknown kind '" + kind + "'");
    return spec;
}

} // namespace eds
