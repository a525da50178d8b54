#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace eds;
using th::cycle_graph;
using th::path_graph;
using th::spider_graph;

TEST_CASE("pattern graphs") {
    CHECK(Pattern::path(7).graph().m() == 6);
    CHECK(Pattern::cycle(6).graph().m() == 6);
    CHECK(Pattern::spider(2, 2, 4).size() == 9);
    CHECK(Pattern::disjoint_paths(2, 4).graph().m() == 6);
    CHECK(Pattern::a4().graph().m() == 5);
    Graph h4 = Pattern::h4().graph();
    CHECK(h4.n() == 8);
    CHECK(h4.m() == 9);
    CHECK(is_bipartite(h4));
    CHECK(parse_pattern("S2_2_4").name() == "S2_2_4");
    CHECK(parse_pattern("2P4").graph().n() == 8);
    CHECK_THROWS_AS(parse_pattern("Q9"), Error);
}

TEST_CASE("contains_induced examples") {
    Graph p7 = path_graph(7);
    auto w = contains_induced(p7, Pattern::path(7));
    REQUIRE(w.has_value());
    CHECK(th::witness_matches(p7, Pattern::path(7), *w));

    // C_6 is 2-regular, so it has no claw.
    CHECK(!contains_induced(cycle_graph(6), Pattern::spider(1, 1, 1)));

    Graph host = spider_graph(2, 2, 4);
    auto ws = contains_induced(host, Pattern::spider(1, 2, 4));
    REQUIRE(ws.has_value());
    CHECK(th::witness_matches(host, Pattern::spider(1, 2, 4), *ws));

    CHECK_THROWS_MATCHES(contains_induced(p7, Pattern::path(14)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::PatternTooLarge;
                         }));
}

TEST_CASE("contains_induced agrees with naive enumeration") {
    std::vector<Pattern> pats = {Pattern::path(5), Pattern::cycle(6), Pattern::spider(1, 1, 1),
                                 Pattern::spider(1, 1, 2), Pattern::a4()};
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 7 + static_cast<int>(seed % 6); // up to 12
        Graph g = th::random_graph(n, 0.3, seed * 101);
        for (const Pattern& p : pats) {
            CAPTURE(seed, n, p.name());
            auto w = contains_induced(g, p);
            CHECK(w.has_value() == th::naive_contains_induced(g, p));
            if (w) CHECK(th::witness_matches(g, p, *w));
        }
    }
}

TEST_CASE("hereditary consistency under vertex deletion") {
    Xoshiro256ss rng(42);
    for (uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = th::random_graph(11, 0.25, seed * 7);
        Pattern p = Pattern::spider(1, 1, 2);
        if (contains_induced(g, p)) continue;
        // Any induced subgraph stays pattern-free.
        VertexSet keep;
        for (Vertex v = 0; v < g.n(); ++v)
            if (rng.unit() < 0.7) keep.push_back(v);
        CHECK(!contains_induced(induced_subgraph(g, keep), p));
    }
}

TEST_CASE("spider monotonicity: S224 present implies S124 present") {
    int hits = 0;
    for (uint64_t seed = 1; seed <= 60 && hits < 8; ++seed) {
        Graph g = th::random_bipartite(7, 7, 0.22, seed * 31);
        if (contains_induced(g, Pattern::spider(2, 2, 4))) {
            ++hits;
            CHECK(contains_induced(g, Pattern::spider(1, 2, 4)).has_value());
        }
    }
    CHECK(contains_induced(spider_graph(2, 2, 4), Pattern::spider(1, 2, 4)).has_value());
}

TEST_CASE("shortest induced even cycle") {
    auto w = shortest_induced_even_cycle_at_least(cycle_graph(6), 6);
    REQUIRE(w.has_value());
    CHECK(w->mapping.size() == 6);

    CHECK(!shortest_induced_even_cycle_at_least(th::complete_bipartite(2, 3), 6));
    CHECK(!shortest_induced_even_cycle_at_least(path_graph(6), 6));
    CHECK_THROWS_AS(shortest_induced_even_cycle_at_least(cycle_graph(5), 6), Error);

    // C_4-rich graph with a long induced cycle: the exhaustive branch.
    Graph c8 = cycle_graph(8);
    auto w8 = shortest_induced_even_cycle_at_least(c8, 6);
    REQUIRE(w8.has_value());
    CHECK(w8->mapping.size() == 8);
}

TEST_CASE("contains_hole") {
    auto w5 = contains_hole(cycle_graph(5));
    REQUIRE(w5.has_value());
    CHECK(w5->mapping.size() == 5);

    CHECK(!contains_hole(cycle_graph(4)));
    CHECK(!contains_hole(path_graph(9)));

    // C_12 is not chordal bipartite, and its square indeed carries a hole.
    CHECK(contains_hole(square(cycle_graph(12))).has_value());

    // Verify returned holes are chordless cycles.
    Graph g = square(cycle_graph(12));
    auto w = contains_hole(g);
    REQUIRE(w.has_value());
    const VertexSet& c = w->mapping;
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j) {
            bool ring = (j == i + 1) || (i == 0 && j + 1 == c.size());
            CHECK(g.has_edge(c[i], c[j]) == ring);
        }
}

TEST_CASE("classify") {
    ClassReport c6 = classify(cycle_graph(6));
    CHECK(c6.bipartite);
    CHECK(c6.connected);
    CHECK(c6.p7free.value);
    CHECK(c6.s222free.value);
    CHECK(!c6.chordal_bipartite);

    ClassReport p8 = classify(path_graph(8));
    CHECK(!p8.p7free.value);
    REQUIRE(p8.p7free.witness.has_value());
    CHECK(p8.p7free.witness->mapping.size() == 7);
    CHECK(th::witness_matches(path_graph(8), Pattern::path(7), *p8.p7free.witness));
    CHECK(p8.p9free.value);
    CHECK(p8.chordal_bipartite);

    ClassReport k33 = classify(th::complete_bipartite(3, 3));
    CHECK(k33.k33present);
    CHECK(k33.maxdeg3);

    ClassReport k23 = classify(th::complete_bipartite(2, 3));
    CHECK(k23.k23_degree3_exclusions == VertexSet{0, 1});

    // Hereditary implications hold in every report.
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        ClassReport r = classify(th::random_bipartite(6, 6, 0.3, seed));
        if (r.p5free.value) CHECK(r.p6free.value);
        if (r.p6free.value) CHECK(r.p7free.value);
        if (r.s222free.value) CHECK(r.s223free.value);
        if (r.s223free.value) CHECK(r.s224free.value);
        if (r.s124free.value) CHECK(r.s224free.value);
    }
}
