#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "helpers.hpp"

using namespace eds;

TEST_CASE("named generation") {
    GenSpec spec = parse_genspec("named:C6");
    Generated out = generate(spec);
    REQUIRE(out.graph.has_value());
    CHECK(*out.graph == th::cycle_graph(6));

    CHECK(generate(parse_genspec("named:K2_3")).graph->m() == 6);
    CHECK(generate(parse_genspec("named:S2_2_4")).graph->n() == 9);
}

TEST_CASE("planted instances carry their certificate") {
    GenSpec cat = parse_genspec("planted:style=cat,degrees=2:3:2");
    Generated out = generate(cat);
    REQUIRE(out.graph.has_value());
    CHECK(out.planted == VertexSet{0, 1, 2});
    CHECK(is_eds(*out.graph, out.planted));
    CHECK(is_bipartite(*out.graph));
    for (size_t i = 0; i < out.planted.size(); ++i)
        CHECK(out.graph->degree(static_cast<Vertex>(i)) == (i == 1 ? 3 : 2));

    GenSpec wide = parse_genspec("planted:style=wide,pendants=20,bridges=12");
    wide.seed = 7;
    Generated w = generate(wide);
    CHECK(is_eds(*w.graph, w.planted));
    CHECK(is_bipartite(*w.graph));
    CHECK(is_connected(*w.graph));

    // Larger caterpillars stay S_{2,2,2}-free and bipartite.
    GenSpec big = parse_genspec("planted:style=cat,centers=12,pendants=3");
    Generated b = generate(big);
    CHECK(is_eds(*b.graph, b.planted));
    CHECK(!contains_induced(*b.graph, Pattern::spider(2, 2, 2)));
}

TEST_CASE("rejection sampling produces pattern-free graphs") {
    GenSpec spec = parse_genspec("hfree:pattern=S2_2_4,tries=200,inner=(rbip:nx=8,ny=8,p=0.2)");
    spec.seed = 11;
    Generated out = generate(spec);
    REQUIRE(out.graph.has_value());
    CHECK(!contains_induced(*out.graph, Pattern::spider(2, 2, 4)));

    // Impossible demand: P_1-free nonempty graphs do not exist.
    GenSpec bad = parse_genspec("hfree:pattern=P1,tries=5,inner=(rbip:nx=3,ny=3,p=0.5)");
    CHECK_THROWS_MATCHES(generate(bad), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::RejectionExhausted;
                         }));
}

TEST_CASE("same seed, same bytes") {
    for (const char* s : {"rbip:nx=9,ny=7,p=0.31", "x3c:n=9,m=6",
                          "planted:style=wide,pendants=15,bridges=9"}) {
        GenSpec spec = parse_genspec(s);
        spec.seed = 1234;
        std::ostringstream a, b;
        Generated ga = generate(spec);
        Generated gb = generate(spec);
        if (ga.graph) {
            write_graph(a, *ga.graph);
            write_graph(b, *gb.graph);
        } else {
            write_x3c(a, *ga.x3c);
            write_x3c(b, *gb.x3c);
        }
        CHECK(a.str() == b.str());
        CHECK(!a.str().empty());
    }

    // Different seeds give different random graphs (overwhelmingly).
    GenSpec spec = parse_genspec("rbip:nx=10,ny=10,p=0.4");
    spec.seed = 1;
    Graph g1 = *generate(spec).graph;
    spec.seed = 2;
    Graph g2 = *generate(spec).graph;
    CHECK(!(g1 == g2));
}

TEST_CASE("x3c generation is well formed") {
    GenSpec spec = parse_genspec("x3c:n=12,m=8");
    spec.seed = 99;
    auto h = *generate(spec).x3c;
    CHECK(h.n == 12);
    CHECK(h.triples.size() == 8);
    h.validate();
    for (auto& t : h.triples) {
        CHECK(t[0] < t[1]);
        CHECK(t[1] < t[2]);
    }
}

TEST_CASE("spec parse errors") {
    CHECK_THROWS_AS(parse_genspec("nonsense"), Error);
    CHECK_THROWS_AS(parse_genspec("rbip:nx=0,ny=5,p=0.5"), Error);
    CHECK_THROWS_AS(parse_genspec("hfree:pattern=P5"), Error);
    CHECK_THROWS_AS(parse_genspec("hfree:pattern=P5,inner=(rbip:nx=3,ny=3"), Error);
}

TEST_CASE("prng reference values stay pinned") {
    // First outputs for seed 0; a cross-language port must reproduce these.
    Xoshiro256ss rng(0);
    CHECK(rng.next() == 0x99ec5f36cb75f2b4ull);
    CHECK(rng.next() == 0xbf6e1f784956452aull);
}
