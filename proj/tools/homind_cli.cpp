#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "homind/construct.hpp"
#include "homind/cycles.hpp"
#include "homind/families.hpp"
#include "homind/homcount.hpp"
#include "homind/oddo.hpp"
#include "homind/verify.hpp"

using namespace homind;
using nlohmann::json;

namespace {

// Exit codes: 0 pass, 1 property violation, 2 input error, 3 guard refusal.

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph load_graph(const std::string& path) {
    std::string text = slurp(path);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
    return parse_graph_auto(text);
}

std::vector<int> parse_u(const std::string& s) {
    if (s.empty()) return {};
    std::vector<int> u;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) u.push_back(std::stoi(tok));
    return u;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw InvalidInput("cannot write '" + out_path + "'");
        out << j.dump(2) << "\n";
    }
}

json labeled_to_json(const LabeledGraph& lg, const std::vector<int>& u) {
    json labels = json::array();
    for (const auto& l : lg.labels) labels.push_back({{"head", l.head}, {"tail", l.tail}});
    return {{"graph6", write_graph6(lg.graph)},
            {"n", lg.graph.vertex_count()},
            {"base", write_graph6(lg.base)},
            {"U", u},
            {"labels", labels},
            {"projection", lg.projection.to}};
}

json report_to_json(const DistinguishReport& r) {
    json j{{"H", write_graph6(r.H)},
           {"Hprime", write_graph6(r.Hprime)},
           {"predicate", r.predicate},
           {"n_max", r.n_max},
           {"verdict", r.distinguished ? "distinguished" : "indistinguishable-up-to-bound"}};
    if (r.counterexample)
        j["counterexample"] = {{"F", write_graph6(*r.counterexample)},
                               {"hom_H", r.count_H.get_str()},
                               {"hom_Hprime", r.count_Hprime.get_str()}};
    return j;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{"lifted-graph constructions, homomorphism counts, and parity certificates"};
    app.require_subcommand(1);
    std::string out_path;
    app.add_option("--out", out_path, "write JSON output to this file instead of stdout");

    // construct
    auto* construct = app.add_subcommand("construct", "build lifted graphs");
    construct->require_subcommand(1);
    std::string c_g, c_u = "";
    auto* gu = construct->add_subcommand("gu", "lift of a graph over a vertex set U");
    gu->add_option("--g", c_g, "base graph file (graph6 or edge list)")->required();
    gu->add_option("--u", c_u, "comma-separated vertex set U (default empty)");
    auto* tilde = construct->add_subcommand("tilde", "loop-setting lift over U");
    tilde->add_option("--g", c_g, "base graph file")->required();
    tilde->add_option("--u", c_u, "comma-separated vertex set U (default empty)");
    int s_d = 1, s_i = 0;
    auto* star = construct->add_subcommand("star-simple", "simplified star lift on [d] plus parity-i subsets");
    star->add_option("--d", s_d, "star degree")->required();
    star->add_option("--i", s_i, "parity (0 or 1)")->required();

    // hom / homvec
    std::string h_f, h_g;
    auto* hom = app.add_subcommand("hom", "count homomorphisms F -> G");
    hom->add_option("--f", h_f, "source graph file")->required();
    hom->add_option("--g", h_g, "target graph file")->required();
    int hv_L = 8;
    std::string hv_g;
    auto* homvec = app.add_subcommand("homvec", "cycle homomorphism vector hom(C_3..C_L, G)");
    homvec->add_option("--g", hv_g, "target graph file")->required();
    homvec->add_option("--L", hv_L, "largest cycle length (default 8)");

    // oddo
    auto* oddo = app.add_subcommand("oddo", "certificate search and verification");
    oddo->require_subcommand(1);
    std::string o_f, o_g, o_cert;
    bool o_oddism = false;
    auto* ofind = oddo->add_subcommand("find", "search for a certificate F -> G");
    ofind->add_option("--f", o_f, "source graph file")->required();
    ofind->add_option("--g", o_g, "target graph file")->required();
    ofind->add_flag("--oddism", o_oddism, "search arbitrary maps (loop setting) instead of homomorphisms");
    auto* overify = oddo->add_subcommand("verify", "re-check a certificate file");
    overify->add_option("--cert", o_cert, "certificate JSON file")->required();

    // cycles extract
    std::string cy_f, cy_cert;
    auto* cycles = app.add_subcommand("cycles", "winding-number machinery");
    cycles->require_subcommand(1);
    auto* extract = cycles->add_subcommand("extract", "chordless odd-winding cycle from a certificate onto C_k");
    extract->add_option("--f", cy_f, "source graph file (must match the certificate)");
    extract->add_option("--cert", cy_cert, "certificate JSON file")->required();

    // families probe
    std::string fp_g, fp_pred;
    int fp_nmax = 5;
    auto* families = app.add_subcommand("families", "family indistinguishability probes");
    families->require_subcommand(1);
    auto* probe = families->add_subcommand("probe", "pad the lifts of G and test the family up to a bound");
    probe->add_option("--g", fp_g, "connected graph outside the family")->required();
    probe->add_option("--pred", fp_pred, "family predicate, e.g. maxdeg:3")->required();
    probe->add_option("--nmax", fp_nmax, "enumeration bound (default 5)");

    // verify <theorem>
    std::string v_theorem;
    int v_gmax = 5, v_fmax = 5, v_nmax = 5, v_count = 0;
    unsigned v_seed = kDefaultSeed;
    auto* verify = app.add_subcommand("verify", "run a theorem suite");
    verify->add_option("theorem", v_theorem, "main-dual | zero-iso | winding | minor-transport | bounded-degree")
        ->required();
    verify->add_option("--gmax", v_gmax, "target-side vertex bound (default 5)");
    verify->add_option("--fmax", v_fmax, "source-side vertex bound (default 5)");
    verify->add_option("--nmax", v_nmax, "vertex bound (default 5)");
    verify->add_option("--count", v_count, "number of seeded instances (suite-specific default)");
    verify->add_option("--seed", v_seed, "seed for instance generation (fixed default)");

    // enumerate
    int e_nmax = 5;
    bool e_connected = false;
    std::string e_pred;
    auto* enumerate = app.add_subcommand("enumerate", "isomorphism-class representatives up to a bound");
    enumerate->add_option("--nmax", e_nmax, "vertex bound (default 5)");
    enumerate->add_flag("--connected", e_connected, "connected graphs only");
    enumerate->add_option("--pred", e_pred, "optional family predicate filter");

    // let --out (declared on the top-level app) appear after any subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands([](const CLI::App*) { return true; })) nested->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (gu->parsed() || tilde->parsed()) {
        Graph g = load_graph(c_g);
        auto u = parse_u(c_u);
        LabeledGraph lg = gu->parsed() ? build_GU(g, u) : build_tilde_GU(g, u);
        emit(labeled_to_json(lg, u), out_path);
    } else if (star->parsed()) {
        if (s_d < 1 || (s_i != 0 && s_i != 1)) throw InvalidInput("need d >= 1 and i in {0,1}");
        Graph g = build_star_simplified(s_d, s_i);
        emit({{"graph6", write_graph6(g)}, {"d", s_d}, {"i", s_i}, {"n", g.vertex_count()}}, out_path);
    } else if (hom->parsed()) {
        Graph f = load_graph(h_f), g = load_graph(h_g);
        emit({{"F", write_graph6(f)}, {"G", write_graph6(g)}, {"hom", hom_count(f, g).get_str()}}, out_path);
    } else if (homvec->parsed()) {
        Graph g = load_graph(hv_g);
        json v = json::array();
        for (const auto& c : hom_vector_cycles(g, hv_L)) v.push_back(c.get_str());
        emit({{"G", write_graph6(g)}, {"L", hv_L}, {"hom_cycles_3_to_L", v}}, out_path);
    } else if (ofind->parsed()) {
        Graph f = load_graph(o_f), g = load_graph(o_g);
        auto cert = o_oddism ? find_weak_oddism(f, g) : find_weak_oddo(f, g);
        if (cert) {
            json j = certificate_to_json(f, g, *cert);
            j["found"] = true;
            emit(j, out_path);
        } else {
            emit({{"found", false}}, out_path);
        }
    } else if (overify->parsed()) {
        auto file = certificate_from_json(json::parse(slurp(o_cert)));
        std::string err = check_certificate(file.F, file.G, file.cert);
        emit({{"valid", err.empty()}, {"violation", err}}, out_path);
        if (!err.empty()) return 1;
    } else if (extract->parsed()) {
        auto file = certificate_from_json(json::parse(slurp(cy_cert)));
        if (!cy_f.empty() && !(load_graph(cy_f) == file.F))
            throw InvalidInput("--f does not match the graph embedded in the certificate");
        int k = file.G.vertex_count();
        if (!(file.G == make_cycle(k))) throw InvalidInput("certificate target is not a canonical cycle");
        auto c = extract_chordless_odd_cycle(file.F, file.cert, k);
        emit({{"F", write_graph6(file.F)}, {"k", k}, {"cycle", c.vertices}, {"winding", c.winding}}, out_path);
    } else if (probe->parsed()) {
        Graph g = load_graph(fp_g);
        auto rep = hd_closure_probe(g, make_predicate(fp_pred), fp_nmax);
        json j{{"G", write_graph6(g)},
               {"clique_order", rep.clique_order},
               {"H", write_graph6(rep.H)},
               {"Hprime", write_graph6(rep.Hprime)},
               {"family_report", report_to_json(rep.family_report)},
               {"hom_G_H", rep.homG_H.get_str()},
               {"hom_G_Hprime", rep.homG_Hprime.get_str()},
               {"target_differs", rep.target_differs}};
        bool pass = !rep.family_report.distinguished && rep.target_differs;
        j["pass"] = pass;
        emit(j, out_path);
        if (!pass) return 1;
    } else if (verify->parsed()) {
        VerifyResult r;
        if (v_theorem == "main-dual")
            r = verify_main_dual(v_gmax, v_fmax);
        else if (v_theorem == "zero-iso")
            r = verify_zero_iso(v_nmax);
        else if (v_theorem == "winding")
            r = verify_winding(v_count > 0 ? v_count : 50, v_seed);
        else if (v_theorem == "minor-transport")
            r = verify_minor_transport(v_count > 0 ? v_count : 100, v_seed);
        else if (v_theorem == "bounded-degree")
            r = verify_bounded_degree(v_fmax > 5 ? v_fmax : 7);
        else if (v_theorem == "bipartite")
            r = verify_bipartite_obstruction(v_fmax, v_gmax);
        else
            throw InvalidInput("unknown theorem suite '" + v_theorem + "'");
        emit(r.report, out_path);
        if (!r.pass) return 1;
    } else if (enumerate->parsed()) {
        json graphs = json::array();
        auto filter = e_pred.empty() ? FamilyPredicate{"all", [](const Graph&) { return true; }}
                                     : make_predicate(e_pred);
        enumerate_graphs(e_nmax, e_connected, filter.member,
                         [&](const Graph& g) { graphs.push_back(write_graph6(g)); });
        emit({{"nmax", e_nmax}, {"connected", e_connected}, {"count", graphs.size()}, {"graphs", graphs}}, out_path);
    }
    return 0;
}

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const GuardExceeded& e) {
        std::cerr << "guard refusal: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
}
