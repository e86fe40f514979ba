#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncsym/chromatic.hpp"
#include "ncsym/graph.hpp"
#include "ncsym/io.hpp"
#include "ncsym/verify.hpp"

using namespace ncsym;
using nlohmann::json;

namespace {

struct Options {
    std::string family;
    std::string graph_file;
    int d = 0;
    std::string alpha;
    std::string basis = "m";
    std::string route = "stable";
    bool check_all = false;
    int mod_index = 0;  // 0 selects the last vertex
    std::string format = "text";
    std::string suite;
    std::string input;
    RunConfig cfg;

    bool json_out() const { return cfg.format == OutputFormat::Json; }
};

void add_run_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("NCSYM_FORMAT");
    cmd->add_option("--seed", o.cfg.seed, "seed for sampled checks")->envname("NCSYM_SEED");
    cmd->add_option("--budget", o.cfg.positivity_budget, "relabelings tried by the witness search")
        ->envname("NCSYM_BUDGET");
    cmd->add_option("--guard-degree", o.cfg.degree_guard, "max degree for partition enumeration")
        ->envname("NCSYM_GUARD_DEGREE");
    cmd->add_option("--guard-subsets", o.cfg.subset_guard, "max |E| for edge-subset scans")
        ->envname("NCSYM_GUARD_SUBSETS");
    cmd->add_option("--guard-words", o.cfg.word_guard, "max word count for expansions")
        ->envname("NCSYM_GUARD_WORDS");
    cmd->add_option("--guard-orientations", o.cfg.orientation_guard,
                    "max non-loop edges for orientation scans")
        ->envname("NCSYM_GUARD_ORIENTATIONS");
}

void add_graph_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.family,
                    "path | cycle | complete | complete-minus-edge | empty | chain | diamond")
        ->envname("NCSYM_FAMILY");
    cmd->add_option("--graph", o.graph_file, "graph file, JSON or text")->envname("NCSYM_GRAPH");
    cmd->add_option("--d", o.d, "number of vertices")->envname("NCSYM_D");
    cmd->add_option("--alpha", o.alpha, "clique sizes for the chain family, e.g. 3,2,2")
        ->envname("NCSYM_ALPHA");
}

LabeledMultigraph make_graph(const Options& o) {
    if (!o.graph_file.empty()) return load_graph_file(o.graph_file);
    if (o.family.empty()) throw std::invalid_argument("need --family or --graph");
    const std::string& f = o.family;
    auto need_d = [&] {
        if (o.d < 1) throw std::invalid_argument("family '" + f + "' needs --d");
        return o.d;
    };
    if (f == "path") return path_graph(need_d());
    if (f == "cycle") return cycle_graph(need_d());
    if (f == "complete") return complete_graph(need_d());
    if (f == "complete-minus-edge") return complete_minus_edge(need_d());
    if (f == "empty") return empty_graph(need_d());
    if (f == "diamond") return diamond_graph();
    if (f == "chain") {
        if (o.alpha.empty()) throw std::invalid_argument("family 'chain' needs --alpha");
        return k_alpha_chain(parse_composition(o.alpha));
    }
    throw std::invalid_argument("unknown family '" + f + "'");
}

int cmd_expand(const Options& o) {
    const auto g = make_graph(o);
    const YRoute route = route_from_name(o.route);
    const YResult r = compute_y(g, basis_from_char(o.basis.at(0)), route, o.cfg);
    bool agree = true;
    if (o.check_all) {
        const NCExpr want = to_basis(r.expr, Basis::M);
        for (YRoute alt :
             {YRoute::Stable, YRoute::DelCon, YRoute::Subsets, YRoute::BrokenCircuit})
            agree = agree && to_basis(compute_y(g, r.expr.basis(), alt, o.cfg).expr, Basis::M) == want;
    }
    if (o.json_out()) {
        json j = yresult_to_json(r);
        if (o.check_all) j["routes_agree"] = agree;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_expr(r.expr, TermStyle::Compact) << "\n";
        if (o.check_all) std::cout << (agree ? "routes agree" : "routes disagree") << "\n";
    }
    return agree ? 0 : 1;
}

int cmd_positivity(const Options& o) {
    const auto g = make_graph(o);
    const EClassExpr classes = e_class_expansion(g, o.mod_index, o.cfg);
    const bool direct = classes.is_nonneg();
    PositivitySearch search;
    if (!direct) search = search_positive_labeling(g, -1, o.cfg);
    const bool positive = direct || search.witness.has_value();
    if (o.json_out()) {
        json j = {{"graph", graph_to_json(g)},
                  {"marked", classes.marked()},
                  {"classes", classes_to_json(classes)},
                  {"positive", positive}};
        if (!direct) {
            j["searched"] = search.tried;
            j["exhaustive"] = search.exhaustive;
            if (search.witness)
                j["witness"] = {{"relabeling", search.witness->relabeling.images()},
                                {"marked", search.witness->marked}};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << render_class_table(classes);
        if (direct) {
            std::cout << "positive (marked " << classes.marked() << ")\n";
        } else if (search.witness) {
            std::cout << "positive after relabeling [";
            const auto& img = search.witness->relabeling.images();
            for (std::size_t i = 0; i < img.size(); ++i)
                std::cout << (i ? " " : "") << img[i];
            std::cout << "] with marked " << search.witness->marked << "\n";
        } else {
            std::cout << "not positive: no witness among " << search.tried << " relabelings"
                      << (search.exhaustive ? " (exhaustive)" : " (budget reached)") << "\n";
        }
    }
    return positive ? 0 : 1;
}

int cmd_orientations(const Options& o) {
    const auto g = make_graph(o);
    const auto acyclic = static_cast<long long>(acyclic_orientations(g, o.cfg).size());
    const long long at_first = count_unique_sink(g, 1, o.cfg);
    const long long via_e = unique_sink_count_via_e(g, o.cfg);
    if (o.json_out()) {
        std::cout << json{{"acyclic", acyclic},
                          {"unique_sink_at_v1", at_first},
                          {"via_e", via_e}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "acyclic: " << acyclic << "; unique-sink@v1: " << at_first
                  << "; via-e: " << via_e << "\n";
    }
    return 0;
}

int cmd_chromatic(const Options& o) {
    const UniPoly chi = chromatic_polynomial(make_graph(o), o.cfg);
    if (o.json_out())
        std::cout << poly_to_json(chi).dump(2) << "\n";
    else
        std::cout << render_poly(chi) << "\n";
    return 0;
}

int cmd_reconstruct(const Options& o) {
    std::ifstream in(o.input);
    if (!in.good()) throw std::invalid_argument("cannot read expansion file '" + o.input + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("expansion file '" + o.input + "': " + e.what());
    }
    const NCExpr y = to_basis(ncexpr_from_json(j), Basis::M);
    try {
        const auto g = reconstruct_from_y(y, y.degree(), o.cfg);
        if (o.json_out())
            std::cout << graph_to_json(g).dump(2) << "\n";
        else
            std::cout << graph_text(g);
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "reconstruction failed: " << e.what() << "\n";
        return 1;
    }
}

int cmd_trees(const Options& o) {
    if (o.d < 1) throw std::invalid_argument("trees needs --d");
    const TreeExperiment t = tree_experiment(o.d, o.cfg);
    if (o.json_out()) {
        std::cout << json{{"degree", t.degree},
                          {"trees", t.tree_count},
                          {"x_all_distinct", t.x_all_distinct},
                          {"y_reconstruction_ok", t.y_reconstruction_ok},
                          {"class_collision_pairs", t.class_collision_pairs}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "degree: " << t.degree << "\ntrees: " << t.tree_count
                  << "\ncommutative images distinct: " << (t.x_all_distinct ? "yes" : "no")
                  << "\nreconstruction: " << (t.y_reconstruction_ok ? "ok" : "failed")
                  << "\nclass-expansion collisions: " << t.class_collision_pairs << "\n";
    }
    return t.x_all_distinct && t.y_reconstruction_ok ? 0 : 1;
}

int cmd_verify(const Options& o) {
    const VerifyReport r = run_verify_suite(o.suite, o.cfg);
    int passed = 0;
    for (const auto& c : r.cases) passed += c.pass ? 1 : 0;
    if (o.json_out()) {
        json cases = json::array();
        for (const auto& c : r.cases)
            cases.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        std::cout << json{{"suite", r.suite}, {"cases", std::move(cases)}, {"ok", r.ok()}}.dump(2)
                  << "\n";
    } else {
        for (const auto& c : r.cases) {
            std::cout << (c.pass ? "pass  " : "FAIL  ") << c.name;
            if (!c.pass) std::cout << ": " << c.detail;
            std::cout << "\n";
        }
        std::cout << r.suite << ": " << passed << "/" << r.cases.size() << " passed\n";
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chromatic symmetric functions in noncommuting variables"};
    app.require_subcommand(1);
    Options o;

    auto* expand = app.add_subcommand("expand", "expand Y of a graph in a chosen basis");
    add_graph_options(expand, o);
    add_run_options(expand, o);
    expand->add_option("--basis", o.basis, "m | p | e")
        ->check(CLI::IsMember({"m", "p", "e"}))
        ->envname("NCSYM_BASIS");
    expand->add_option("--route", o.route, "stable | delcon | subsets | broken")
        ->check(CLI::IsMember({"stable", "delcon", "subsets", "broken"}))
        ->envname("NCSYM_ROUTE");
    expand->add_flag("--check-all", o.check_all, "cross-verify all routes");

    auto* positivity =
        app.add_subcommand("positivity", "class expansion table and positivity verdict");
    add_graph_options(positivity, o);
    add_run_options(positivity, o);
    positivity->add_option("--mod-index", o.mod_index, "marked vertex (default: last)")
        ->envname("NCSYM_MOD_INDEX");

    auto* orientations =
        app.add_subcommand("orientations", "acyclic orientation and sink counts");
    add_graph_options(orientations, o);
    add_run_options(orientations, o);

    auto* chromatic = app.add_subcommand("chromatic", "chromatic polynomial");
    add_graph_options(chromatic, o);
    add_run_options(chromatic, o);

    auto* reconstruct =
        app.add_subcommand("reconstruct", "rebuild the graph from an expansion file");
    reconstruct->add_option("input", o.input, "expansion JSON file")->required();
    add_run_options(reconstruct, o);

    auto* trees = app.add_subcommand("trees", "tree distinguishability report");
    trees->add_option("--d", o.d, "number of vertices")->envname("NCSYM_D");
    add_run_options(trees, o);

    auto* verify = app.add_subcommand("verify", "run a named invariant suite");
    verify
        ->add_option("suite", o.suite,
                     "bases | delcon | sinks | positivity | families | reconstruction | all")
        ->required();
    add_run_options(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    o.cfg.format = o.format == "json" ? OutputFormat::Json : OutputFormat::Text;

    try {
        if (app.got_subcommand(expand)) return cmd_expand(o);
        if (app.got_subcommand(positivity)) return cmd_positivity(o);
        if (app.got_subcommand(orientations)) return cmd_orientations(o);
        if (app.got_subcommand(chromatic)) return cmd_chromatic(o);
        if (app.got_subcommand(reconstruct)) return cmd_reconstruct(o);
        if (app.got_subcommand(trees)) return cmd_trees(o);
        if (app.got_subcommand(verify)) return cmd_verify(o);
    } catch (const GuardLimitError& e) {
        std::cerr << "guard exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
