#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace eds;
using th::cycle_graph;
using th::path_graph;

TEST_CASE("is_eds examples") {
    CHECK(is_eds(cycle_graph(6), {0, 3}));
    CHECK(!is_eds(cycle_graph(4), {0}));
    CHECK(is_eds(path_graph(3), {1}));
    CHECK(is_eds(build_graph(0, {}), {}));
}

TEST_CASE("is_eds three-way agreement") {
    // Defining property vs: independent in the square + closed neighborhood
    // sizes summing to n + domination.
    Xoshiro256ss rng(7);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        int n = 10 + static_cast<int>(seed * 5 % 55);
        Graph g = th::random_graph(n, 2.5 / n, seed * 11);
        Graph sq = square(g);
        for (int trial = 0; trial < 30; ++trial) {
            VertexSet d;
            for (Vertex v = 0; v < n; ++v)
                if (rng.unit() < 0.2) d.push_back(v);
            bool indep = true;
            for (size_t i = 0; i < d.size() && indep; ++i)
                for (size_t j = i + 1; j < d.size() && indep; ++j)
                    if (sq.has_edge(d[i], d[j])) indep = false;
            int total = 0;
            std::vector<uint8_t> dom(n, 0);
            for (Vertex v : d) {
                total += 1 + g.degree(v);
                dom[v] = 1;
                for (Vertex w : g.neighbors(v)) dom[w] = 1;
            }
            bool dominates = std::all_of(dom.begin(), dom.end(), [](uint8_t b) { return b != 0; });
            CHECK(is_eds(g, d) == (indep && total == n && dominates));
        }
    }
}

TEST_CASE("brute force oracle examples") {
    CHECK(brute_force_eds(cycle_graph(4), BruteMode::All).found.empty());

    auto p4 = brute_force_eds(path_graph(4), BruteMode::All);
    REQUIRE(p4.found.size() == 1);
    CHECK(p4.found[0].members == VertexSet{0, 3});

    auto p7 = brute_force_eds(path_graph(7), BruteMode::First);
    REQUIRE(!p7.found.empty());
    CHECK(p7.found[0].members == VertexSet{0, 3, 6});
}

TEST_CASE("brute force agrees with subset enumeration") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        int n = 5 + static_cast<int>(seed % 12); // up to 16
        Graph g = th::random_graph(n, 0.22, seed * 17);
        auto ours = brute_force_eds(g, BruteMode::All);
        std::vector<VertexSet> got;
        for (auto& c : ours.found) got.push_back(c.members);
        std::sort(got.begin(), got.end());
        auto ref = th::all_eds_by_subsets(g);
        CAPTURE(seed, n);
        CHECK(got == ref);
        CHECK(ours.count == ref.size());
    }
}

TEST_CASE("brute force budget") {
    Graph g = th::random_graph(18, 0.2, 3);
    CHECK_THROWS_MATCHES(brute_force_eds(g, BruteMode::All, 2), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::BudgetExceeded;
                         }));
}

TEST_CASE("apply_forced") {
    Graph p5 = path_graph(5);
    ReducedInstance inst = ReducedInstance::start(p5, 0);
    CHECK(inst.excluded[2]);

    auto next = apply_forced(inst, 3);
    REQUIRE(next.has_value());
    CHECK(next->committed == VertexSet{0, 3});
    CHECK(is_eds(p5, next->committed));

    // Forcing a neighbor of a committed vertex conflicts.
    CHECK(!apply_forced(inst, 1).has_value());

    // C_4: the antipode sits at distance 2.
    Graph c4 = cycle_graph(4);
    ReducedInstance ic4 = ReducedInstance::start(c4, 0);
    CHECK(!apply_forced(ic4, 2).has_value());
}

TEST_CASE("v_forced_rules examples") {
    // P_4 rooted at an internal vertex: rule (i) fires.
    Graph p4 = path_graph(4);
    auto r1 = v_forced_rules(distance_levels(p4, 1), ReducedInstance::start(p4, 1));
    CHECK(r1.no_eds);

    // P_5 rooted at an end: the unique stratum-3 dominator is forced.
    Graph p5 = path_graph(5);
    auto r2 = v_forced_rules(distance_levels(p5, 0), ReducedInstance::start(p5, 0));
    CHECK(!r2.no_eds);
    CHECK(r2.forced == VertexSet{3});

    // S_{2,2,2} rooted at the center: leg tips have no stratum-3 neighbor.
    Graph s = th::spider_graph(2, 2, 2);
    auto r3 = v_forced_rules(distance_levels(s, 0), ReducedInstance::start(s, 0));
    CHECK(r3.no_eds);
}

TEST_CASE("after the fixpoint every stratum-3 vertex has a deeper neighbor") {
    int checked = 0;
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = th::random_bipartite(6, 6, 0.25, seed * 19);
        if (!is_connected(g)) continue;
        for (Vertex v = 0; v < g.n(); v += 3) {
            auto ro = v_forced_rules(distance_levels(g, v), ReducedInstance::start(g, v));
            if (ro.no_eds) continue;
            Levels L = residual_levels(ro.state);
            for (Vertex y : L.stratum(3)) {
                bool deeper = false;
                for (Vertex w : g.neighbors(y))
                    if (L.level_of[w] == 4) deeper = true;
                CHECK(deeper);
                ++checked;
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("two stratum-3 D-members span a 2P3") {
    int checked = 0;
    std::vector<Graph> hosts;
    // P_9 from its middle vertex has D = {0,4,8} with both ends at stratum 3.
    hosts.push_back(path_graph(9));
    for (uint64_t seed = 1; seed <= 120 && checked < 10; ++seed) {
        Graph g = th::random_bipartite(7, 7, 0.2, seed * 23);
        if (is_connected(g)) hosts.push_back(g);
    }
    for (const Graph& g : hosts) {
        if (checked >= 10) break;
        auto all = brute_force_eds(g, BruteMode::All);
        for (auto& cert : all.found) {
            for (Vertex v : cert.members) {
                Levels L = distance_levels(g, v);
                VertexSet n3d;
                for (Vertex y : cert.members)
                    if (L.level_of[y] == 3) {
                        bool deeper = false;
                        for (Vertex w : g.neighbors(y))
                            if (L.level_of[w] == 4) deeper = true;
                        if (deeper) n3d.push_back(y);
                    }
                for (size_t i = 0; i < n3d.size(); ++i)
                    for (size_t j = i + 1; j < n3d.size(); ++j) {
                        Vertex y1 = n3d[i], y2 = n3d[j];
                        auto pick = [&](Vertex y, int lvl) {
                            for (Vertex w : g.neighbors(y))
                                if (L.level_of[w] == lvl) return w;
                            return -1;
                        };
                        Vertex x1 = pick(y1, 2), z1 = pick(y1, 4);
                        Vertex x2 = pick(y2, 2), z2 = pick(y2, 4);
                        REQUIRE(x1 >= 0);
                        REQUIRE(z1 >= 0);
                        // The six vertices induce two disjoint paths x-y-z.
                        VertexSet six{x1, y1, z1, x2, y2, z2};
                        Graph sub = induced_subgraph(g, [&] {
                            VertexSet s = six;
                            std::sort(s.begin(), s.end());
                            return s;
                        }());
                        CHECK(sub.m() == 4);
                        CHECK(!contains_induced(sub, Pattern::path(4)).has_value());
                        ++checked;
                    }
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("three stratum-3 D-members force a large spider") {
    std::vector<Pattern> spiders = {Pattern::spider(4, 4, 4), Pattern::spider(3, 3, 3),
                                    Pattern::spider(2, 4, 4), Pattern::spider(3, 3, 5)};
    auto check_host = [&](const Graph& g, const EdsCertificate& cert, Vertex v) -> bool {
        Levels L = distance_levels(g, v);
        int n3d = 0;
        for (Vertex y : cert.members)
            if (L.level_of[y] == 3) {
                bool deeper = false;
                for (Vertex w : g.neighbors(y))
                    if (L.level_of[w] == 4) deeper = true;
                if (deeper) ++n3d;
            }
        if (n3d < 3) return false;
        bool any = false;
        for (const Pattern& p : spiders)
            if (contains_induced(g, p)) any = true;
        CHECK(any);
        return true;
    };

    // Hand instance: S_{4,4,4} itself, rooted at its center.
    Graph s444 = th::spider_graph(4, 4, 4);
    auto all = brute_force_eds(s444, BruteMode::All);
    bool exercised = false;
    for (auto& cert : all.found)
        for (Vertex v : cert.members) exercised |= check_host(s444, cert, v);
    CHECK(exercised);

    // Random bipartite hosts, where qualifying roots exist.
    int hits = 0;
    for (uint64_t seed = 1; seed <= 80 && hits < 3; ++seed) {
        Graph g = th::random_bipartite(11, 11, 0.14, seed * 29);
        if (!is_connected(g) || g.n() > 22) continue;
        auto found = brute_force_eds(g, BruteMode::All);
        for (auto& cert : found.found)
            for (Vertex v : cert.members)
                if (check_host(g, cert, v)) ++hits;
    }
    SUCCEED(); // random qualifying roots are rare; the hand instance covers the claim
}
