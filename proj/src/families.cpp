#include "homind/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "homind/construct.hpp"

namespace homind {

namespace {

bool is_forest(const Graph& g) {
    if (g.has_loops()) return false;
    return g.edge_count() == g.vertex_count() - static_cast<int>(connected_components(g).size());
}

bool is_clique_union(const Graph& g, const std::set<int>& orders, int all_from) {
    for (const auto& comp : connected_components(g)) {
        int n = static_cast<int>(comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) {
            if (g.has_loop(comp[i])) return false;
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.adjacent(comp[i], comp[j])) return false;
        }
        if (!orders.count(n) && !(all_from > 0 && n >= all_from)) return false;
    }
    return true;
}

}  // namespace

FamilyPredicate make_predicate(const std::string& spec) {
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto int_arg = [&](int lo) {
        std::size_t used = 0;
        int v;
        try {
            v = std::stoi(arg, &used);
        } catch (const std::exception&) {
            throw InvalidInput("predicate " + head + " needs an integer argument");
        }
        if (used != arg.size() || v < lo) throw InvalidInput("bad argument for predicate " + head);
        return v;
    };

    FamilyPredicate p;
    p.name = spec;
    if (head == "all" && arg.empty()) {
        p.member = [](const Graph&) { return true; };
        p.union_closed = p.component_closed = p.minor_closed = true;
    } else if (head == "maxdeg") {
        int d = int_arg(0);
        p.member = [d](const Graph& g) { return g.max_degree() <= d; };
        p.union_closed = p.component_closed = true;
    } else if (head == "forests" && arg.empty()) {
        p.member = is_forest;
        p.union_closed = p.component_closed = p.minor_closed = true;
    } else if (head == "treewidth2" && arg.empty()) {
        p.member = [](const Graph& g) { return !has_minor(g, make_complete(4)); };
        p.union_closed = p.component_closed = p.minor_closed = true;
    } else if (head == "circumference") {
        int k = int_arg(0);
        p.member = [k](const Graph& g) { return static_cast<int>(longest_cycle(g).size()) <= k; };
        p.union_closed = p.component_closed = p.minor_closed = true;
    } else if (head == "no-odd-holes" && arg.empty()) {
        p.member = [](const Graph& g) { return !find_odd_hole(g).has_value(); };
        p.union_closed = p.component_closed = true;
    } else if (head == "no-induced-star") {
        int d = int_arg(1);
        p.member = [d](const Graph& g) { return !find_induced_star(g, d).has_value(); };
        p.union_closed = p.component_closed = true;
    } else if (head == "planar" && arg.empty()) {
        p.member = [](const Graph& g) { return is_planar(g); };
        p.union_closed = p.component_closed = p.minor_closed = true;
        p.experimental = true;
    } else if (head == "cliques") {
        if (arg.empty()) throw InvalidInput("cliques needs a list of orders");
        int all_from = 0;
        if (arg.back() == '+') arg.pop_back(), all_from = -1;
        std::set<int> orders;
        std::stringstream ss(arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw InvalidInput("bad clique order '" + tok + "'");
            }
            if (used != tok.size() || v < 1) throw InvalidInput("bad clique order '" + tok + "'");
            orders.insert(v);
        }
        if (orders.empty()) throw InvalidInput("cliques needs a list of orders");
        if (all_from == -1) all_from = *orders.rbegin();
        p.member = [orders, all_from](const Graph& g) { return is_clique_union(g, orders, all_from); };
        p.union_closed = p.component_closed = true;
    } else if (head == "minor-free") {
        Graph forbidden = parse_graph_auto(arg);
        p.member = [forbidden](const Graph& g) { return !has_minor(g, forbidden); };
        p.union_closed = false;  // a forbidden minor may appear only across components
        p.component_closed = p.minor_closed = true;
        // Disconnected forbidden graphs can span several components of a
        // union; connected ones cannot.
        if (is_connected(forbidden)) p.union_closed = true;
    } else if (head == "minors-of") {
        Graph host = parse_graph_auto(arg);
        p.member = [host](const Graph& g) { return has_minor(host, g); };
        p.component_closed = p.minor_closed = true;
    } else {
        throw InvalidInput("unknown family predicate '" + spec + "'");
    }
    return p;
}

std::vector<std::string> builtin_predicate_names() {
    return {"all",          "maxdeg:d",       "forests",           "treewidth2",     "circumference:k",
            "no-odd-holes", "no-induced-star:d", "planar",         "cliques:a,b[+]", "minor-free:<g6>",
            "minors-of:<g6>"};
}

DistinguishReport indistinguishable_up_to(const Graph& H, const Graph& Hprime, const FamilyPredicate& pred, int n_max,
                                          bool full) {
    if (n_max < 1 || n_max > 8) throw GuardExceeded("family enumeration bound must be in 1..8");
    if (H.vertex_count() > 64 || Hprime.vertex_count() > 64) throw GuardExceeded("target too large");
    if (!full && !pred.component_closed)
        throw InvalidInput("predicate " + pred.name + " is not component-closed; rerun with full enumeration");

    DistinguishReport rep;
    rep.H = H;
    rep.Hprime = Hprime;
    rep.predicate = pred.name;
    rep.n_max = n_max;
    try {
        enumerate_graphs(
            n_max, !full, pred.member,
            [&](const Graph& f) {
                HomCount a = hom_count(f, H), b = hom_count(f, Hprime);
                if (a != b) {
                    rep.distinguished = true;
                    rep.counterexample = f;
                    rep.count_H = a;
                    rep.count_Hprime = b;
                    throw rep;  // stop enumeration at the first counterexample
                }
            },
            n_max);
    } catch (const DistinguishReport&) {
    }
    return rep;
}

ProbeReport hd_closure_probe(const Graph& G, const FamilyPredicate& pred, int n_max) {
    if (!is_connected(G)) throw InvalidInput("probe target must be connected");
    if (pred.member(G)) throw InvalidInput("probe target already belongs to the family");

    ProbeReport rep;
    rep.clique_order = chromatic_number(G);
    auto [g0, g1] = build_G01(G);
    Graph pad = make_complete(rep.clique_order);
    rep.H = disjoint_union(g0.graph, pad);
    rep.Hprime = disjoint_union(g1.graph, pad);
    rep.family_report = indistinguishable_up_to(rep.H, rep.Hprime, pred, n_max);
    rep.homG_H = hom_count(G, rep.H);
    rep.homG_Hprime = hom_count(G, rep.Hprime);
    rep.target_differs = rep.homG_H != rep.homG_Hprime;
    return rep;
}

bool cospectral_check(const Graph& H, const Graph& Hprime, int L) {
    return hom_vector_cycles(H, L) == hom_vector_cycles(Hprime, L);
}

bool union_lemma_check(const Graph& H1, const Graph& H1prime, const Graph& H2, const Graph& H2prime,
                       const FamilyPredicate& pred, int n_max) {
    if (!pred.component_closed)
        throw InvalidInput("union check needs a component-closed predicate");
    if (indistinguishable_up_to(H1, H1prime, pred, n_max).distinguished)
        throw InvalidInput("first pair is already distinguished; union check is vacuous");
    if (indistinguishable_up_to(H2, H2prime, pred, n_max).distinguished)
        throw InvalidInput("second pair is already distinguished; union check is vacuous");
    return !indistinguishable_up_to(disjoint_union(H1, H2), disjoint_union(H1prime, H2prime), pred, n_max)
                .distinguished;
}

}  // namespace homind
