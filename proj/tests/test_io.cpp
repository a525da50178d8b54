#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace eds;

namespace {

Graph reparse(const Graph& g) {
    std::ostringstream os;
    write_graph(os, g);
    std::istringstream is(os.str());
    return read_graph(is);
}

// Validates the subset of JSON Schema the committed schemas use: type,
// required, properties, items, enum, and "#/definitions/..." refs.
bool type_matches(const std::string& t, const nlohmann::json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    return false;
}

bool validate_node(const nlohmann::json& root, const nlohmann::json& schema,
                   const nlohmann::json& value) {
    if (schema.contains("$ref")) {
        std::string ref = schema["$ref"];
        const std::string prefix = "#/definitions/";
        REQUIRE(ref.rfind(prefix, 0) == 0);
        return validate_node(root, root["definitions"][ref.substr(prefix.size())], value);
    }
    if (schema.contains("type") && !type_matches(schema["type"], value)) return false;
    if (schema.contains("enum")) {
        bool any = false;
        for (auto& e : schema["enum"]) any |= e == value;
        if (!any) return false;
    }
    if (schema.contains("required"))
        for (auto& key : schema["required"])
            if (!value.contains(key.get<std::string>())) return false;
    if (schema.contains("properties") && value.is_object())
        for (auto& [key, sub] : schema["properties"].items())
            if (value.contains(key) && !validate_node(root, sub, value[key])) return false;
    if (schema.contains("items") && value.is_array())
        for (auto& item : value)
            if (!validate_node(root, schema["items"], item)) return false;
    return true;
}

bool validate_against(const nlohmann::json& schema, const nlohmann::json& value) {
    return validate_node(schema, schema, value);
}

nlohmann::json load_schema(const std::string& name) {
    std::ifstream in(std::string(EDSKIT_SOURCE_DIR) + "/schemas/" + name);
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("graph files round trip") {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
        Graph g = th::random_graph(3 + seed % 10, 0.3, seed * 61);
        if (seed % 3 == 0) {
            g.set_weight(0, {3, 4});
            g.set_weight(g.n() - 1, {7, 1});
        }
        CHECK(reparse(g) == g);
    }
    // Canonical printing: sorted edges, stable bytes.
    Graph g = build_graph(4, {{3, 0}, {2, 1}, {0, 1}});
    std::ostringstream a, b;
    write_graph(a, g);
    write_graph(b, reparse(g));
    CHECK(a.str() == b.str());
    CHECK(a.str() == "4 3\n0 1\n0 3\n1 2\n");
}

TEST_CASE("graph file errors") {
    auto bad = [](const std::string& text) {
        std::istringstream is(text);
        return read_graph(is);
    };
    CHECK_THROWS_AS(bad(""), Error);
    CHECK_THROWS_AS(bad("junk\n"), Error);
    CHECK_THROWS_AS(bad("2 2\n0 1\n"), Error);       // edge count mismatch
    CHECK_THROWS_AS(bad("2 1\n0 5\n"), Error);       // endpoint out of range
    CHECK_THROWS_AS(bad("2 1\n0 0\n"), Error);       // self loop
    CHECK_THROWS_AS(bad("2 1\n0 1\nw 0 1/0\n"), Error);
    CHECK_THROWS_AS(bad("2 1\n0 1\nw 9 2\n"), Error);

    // Comments and blank lines are fine.
    std::istringstream ok("# header\n2 1\n\n0 1  # an edge\n");
    CHECK(read_graph(ok).m() == 1);
}

TEST_CASE("x3c files") {
    X3CInstance h;
    h.n = 6;
    h.triples = {{0, 1, 2}, {3, 4, 5}};
    std::ostringstream os;
    write_x3c(os, h);
    CHECK(os.str() == "6 2\n0 1 2\n3 4 5\n");
    std::istringstream is(os.str());
    X3CInstance back = read_x3c(is);
    CHECK(back.n == 6);
    CHECK(back.triples == h.triples);

    std::istringstream dup("3 1\n0 0 1\n");
    CHECK_THROWS_AS(read_x3c(dup), Error);
}

TEST_CASE("vertex set parsing") {
    CHECK(parse_vertex_set("0,3") == VertexSet{0, 3});
    CHECK(parse_vertex_set("") == VertexSet{});
    CHECK(parse_vertex_set("5,1,5") == VertexSet{1, 5});
    CHECK_THROWS_AS(parse_vertex_set("1,x"), Error);
}

TEST_CASE("weights parse as exact rationals") {
    std::istringstream is("2 1\n0 1\nw 0 6/8\nw 1 -2\n");
    Graph g = read_graph(is);
    CHECK(g.weight(0) == Rational{3, 4});
    CHECK(g.weight(1) == Rational{-2, 1});
    // Solvers ignore weights entirely.
    CHECK(dispatch(g).status == SolverOutcome::Status::Found);
}

TEST_CASE("solve output matches the committed schema") {
    nlohmann::json schema = load_schema("solve_output.schema.json");

    auto found = dispatch(th::cycle_graph(6));
    CHECK(validate_against(schema, to_json(found)));

    auto noeds = dispatch(th::cycle_graph(4));
    CHECK(validate_against(schema, to_json(noeds)));

    auto na = solve_p5_free(th::path_graph(6));
    CHECK(validate_against(schema, to_json(na)));

    // And a negative control: the schema does reject wrong shapes.
    nlohmann::json wrong = {{"status", "bogus"}, {"stats", 3}};
    CHECK(!validate_against(schema, wrong));
}

TEST_CASE("recognize output matches the committed schema") {
    nlohmann::json schema = load_schema("recognize_output.schema.json");
    CHECK(validate_against(schema, to_json(classify(th::path_graph(8)))));
    CHECK(validate_against(schema, to_json(classify(th::complete_bipartite(3, 3)))));
}
