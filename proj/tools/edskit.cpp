// Command-line front end: solve / verify / recognize / reduce / gen.
// Exit codes: 0 success (solve: e.d.s. found), 2 input error, 3 no e.d.s.,
// 4 solver not applicable.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eds/eds.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoEds = 3;
constexpr int kExitNotApplicable = 4;

eds::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw eds::Error(eds::ErrorCode::ParseError, "cannot open " + path);
    return eds::read_graph(in);
}

eds::X3CInstance load_x3c(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw eds::Error(eds::ErrorCode::ParseError, "cannot open " + path);
    return eds::read_x3c(in);
}

void print_set(std::ostream& os, const eds::VertexSet& s) {
    for (size_t i = 0; i < s.size(); ++i) os << (i ? " " : "") << s[i];
    os << "\n";
}

int run_solve(const std::string& file, const std::string& cls_name, bool json, bool all,
              uint64_t budget, int threads) {
    (void)threads; // per-root searches run sequentially; kept for interface stability
    eds::Graph g = load_graph(file);
    int lp4_l = 2;
    eds::SolverClass cls = eds::parse_solver_class(cls_name, &lp4_l);
    eds::DispatchOptions opt;
    opt.oracle_budget = budget;

    if (all) {
        if (cls != eds::SolverClass::S222 && cls != eds::SolverClass::Oracle) {
            std::cerr << "--all is only valid for --class s222 or --class oracle\n";
            return kExitInput;
        }
        std::vector<eds::EdsCertificate> certs;
        if (cls == eds::SolverClass::S222) {
            auto e = eds::enumerate_s222_free(g);
            if (!e.applicable) {
                if (json) {
                    nlohmann::json j;
                    j["status"] = "not_applicable";
                    j["reason"] = "graph is not S2_2_2-free";
                    if (e.witness) j["witness"] = e.witness->mapping;
                    std::cout << j.dump(2) << "\n";
                } else {
                    std::cout << "not applicable: graph is not S2_2_2-free\n";
                }
                return kExitNotApplicable;
            }
            certs = e.certificates;
        } else {
            auto br = eds::brute_force_eds(g, eds::BruteMode::All, budget);
            certs = br.found;
            std::sort(certs.begin(), certs.end());
        }
        if (json) {
            nlohmann::json j;
            j["status"] = certs.empty() ? "no_eds" : "found";
            j["all_eds"] = nlohmann::json::array();
            for (auto& c : certs) j["all_eds"].push_back(c.members);
            if (!certs.empty()) j["eds"] = certs.front().members;
            j["stats"] = {{"count", certs.size()}};
            std::cout << j.dump(2) << "\n";
        } else {
            for (auto& c : certs) print_set(std::cout, c.members);
        }
        return certs.empty() ? kExitNoEds : kExitFound;
    }

    eds::SolverOutcome o = eds::dispatch(g, cls, lp4_l, opt);
    if (json) {
        std::cout << eds::to_json(o).dump(2) << "\n";
    } else {
        switch (o.status) {
            case eds::SolverOutcome::Status::Found:
                print_set(std::cout, o.eds->members);
                break;
            case eds::SolverOutcome::Status::NoEds:
                std::cout << "no efficient dominating set";
                if (!o.reason.empty()) std::cout << " (" << o.reason << ")";
                std::cout << "\n";
                break;
            case eds::SolverOutcome::Status::NotApplicable:
                std::cout << "not applicable: " << o.reason << "\n";
                if (o.witness) {
                    std::cout << "witness: ";
                    print_set(std::cout, o.witness->mapping);
                }
                break;
        }
    }
    switch (o.status) {
        case eds::SolverOutcome::Status::Found: return kExitFound;
        case eds::SolverOutcome::Status::NoEds: return kExitNoEds;
        default: return kExitNotApplicable;
    }
}

int run_verify(const std::string& file, const std::string& set_str) {
    eds::Graph g = load_graph(file);
    eds::VertexSet d = eds::parse_vertex_set(set_str);
    for (eds::Vertex v : d)
        if (v < 0 || v >= g.n()) {
            std::cerr << "vertex " << v << " out of range\n";
            return kExitInput;
        }
    auto cnt = eds::domination_counts(g, d);
    bool ok = true;
    for (eds::Vertex v = 0; v < g.n(); ++v)
        if (cnt[v] != 1) {
            ok = false;
            std::cout << v << ": dominated " << cnt[v] << " times\n";
        }
    if (ok) std::cout << "valid efficient dominating set\n";
    return ok ? kExitFound : 1;
}

int run_recognize(const std::string& file, bool json) {
    eds::Graph g = load_graph(file);
    eds::ClassReport r = eds::classify(g);
    if (json) {
        std::cout << eds::to_json(r).dump(2) << "\n";
        return 0;
    }
    auto line = [](const std::string& name, bool value, const std::optional<eds::Witness>& w) {
        std::cout << name << ": " << (value ? "yes" : "no");
        if (w) {
            std::cout << " (witness:";
            for (eds::Vertex v : w->mapping) std::cout << " " << v;
            std::cout << ")";
        }
        std::cout << "\n";
    };
    line("bipartite", r.bipartite, r.odd_cycle);
    line("connected", r.connected, std::nullopt);
    line("maxdeg3", r.maxdeg3, r.high_degree);
    line("p5free", r.p5free.value, r.p5free.witness);
    line("p6free", r.p6free.value, r.p6free.witness);
    line("p7free", r.p7free.value, r.p7free.witness);
    line("p9free", r.p9free.value, r.p9free.witness);
    line("s222free", r.s222free.value, r.s222free.witness);
    line("s223free", r.s223free.value, r.s223free.witness);
    line("s224free", r.s224free.value, r.s224free.witness);
    line("s124free", r.s124free.value, r.s124free.witness);
    line("h4free", r.h4free.value, r.h4free.witness);
    for (auto& [l, f] : r.lp4free)
        line(std::to_string(l) + "p4free", f.value, f.witness);
    line("chordal_bipartite", r.chordal_bipartite, r.long_even_cycle);
    line("k33present", r.k33present, r.k33);
    std::cout << "k23_degree3_exclusions:";
    for (eds::Vertex v : r.k23_degree3_exclusions) std::cout << " " << v;
    std::cout << "\n";
    return 0;
}

int run_reduce(const std::string& file, int girth, const std::string& out_path) {
    eds::X3CInstance h = load_x3c(file);
    auto [g, map] = eds::x3c_to_ed(h);
    if (girth >= 2) {
        auto sub = eds::subdivide_for_girth(g, map, girth);
        g = std::move(sub.first);
        map = std::move(sub.second);
    }
    int diam = eds::diameter(g);
    if (out_path.empty()) {
        eds::write_graph(std::cout, g);
        std::cout << "# diameter " << diam << "\n";
        std::cerr << eds::to_json(map).dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw eds::Error(eds::ErrorCode::ParseError, "cannot write " + out_path);
        eds::write_graph(out, g);
        std::ofstream roles(out_path + ".roles.json");
        roles << eds::to_json(map).dump(2) << "\n";
        std::cout << "diameter " << diam << "\n";
    }
    return 0;
}

int run_gen(const std::string& spec_str, uint64_t seed, const std::string& out_path) {
    eds::GenSpec spec = eds::parse_genspec(spec_str);
    spec.seed = seed;
    eds::Generated res = eds::generate(spec);
    std::ofstream out_file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) throw eds::Error(eds::ErrorCode::ParseError, "cannot write " + out_path);
        os = &out_file;
    }
    if (res.graph) {
        eds::write_graph(*os, *res.graph);
        if (!res.planted.empty()) {
            *os << "# planted";
            for (eds::Vertex v : res.planted) *os << " " << v;
            *os << "\n";
        }
    } else {
        eds::write_x3c(*os, *res.x3c);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"efficient dominating sets in bipartite graphs"};
    app.require_subcommand(1);

    std::string file, cls = "auto", set_str, out_path, spec_str;
    bool json = false, all = false, seedless = false;
    uint64_t budget = 100'000'000, seed = 0;
    int threads = 1, girth = 0;

    auto* solve = app.add_subcommand("solve", "decide/construct an e.d.s.");
    solve->add_option("file", file)->required();
    solve->add_option("--class", cls, "auto|p5|p7|lp4=<l>|s222|s223|s224|p9deg3|oracle");
    solve->add_flag("--json", json);
    solve->add_flag("--all", all, "list all e.d.s. (s222/oracle only)");
    solve->add_option("--budget", budget, "oracle node budget");
    solve->add_option("--threads", threads, "reserved; searches run sequentially");
    solve->add_flag("--seedless-deterministic", seedless, "force single-threaded deterministic mode");

    auto* verify = app.add_subcommand("verify", "check a vertex set");
    verify->add_option("file", file)->required();
    verify->add_option("--set", set_str, "comma-separated vertices")->required();

    auto* recognize = app.add_subcommand("recognize", "class report");
    recognize->add_option("file", file)->required();
    recognize->add_flag("--json", json);

    auto* reduce = app.add_subcommand("reduce", "build reduction instances");
    auto* reduce_x3c = reduce->add_subcommand("x3c", "X3C -> ED transformation graph");
    reduce_x3c->add_option("file", file)->required();
    reduce_x3c->add_option("--girth", girth, "subdivide until (C4..C_{2k})-free");
    reduce_x3c->add_option("--out", out_path);

    auto* gen = app.add_subcommand("gen", "deterministic instance generation");
    gen->add_option("spec", spec_str)->required();
    gen->add_option("--seed", seed);
    gen->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    if (seedless) threads = 1;
    try {
        if (*solve) return run_solve(file, cls, json, all, budget, threads);
        if (*verify) return run_verify(file, set_str);
        if (*recognize) return run_recognize(file, json);
        if (*reduce) return run_reduce(file, girth, out_path);
        if (*gen) return run_gen(spec_str, seed, out_path);
    } catch (const eds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
