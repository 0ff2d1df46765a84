#include "homind/verify.hpp"

#include <random>
#include <set>

#include "homind/construct.hpp"
#include "homind/cycles.hpp"
#include "homind/homcount.hpp"
#include "homind/oddo.hpp"

namespace homind {

namespace {

nlohmann::json fail_entry(std::string what, std::initializer_list<std::pair<std::string, nlohmann::json>> fields) {
    nlohmann::json j{{"what", std::move(what)}};
    for (const auto& [k, v] : fields) j[k] = v;
    return j;
}

void finish(VerifyResult& r, long checked, nlohmann::json failures) {
    r.report["checked"] = checked;
    r.report["failures"] = std::move(failures);
    r.pass = r.report["failures"].empty();
    r.report["pass"] = r.pass;
}

// Random graph mapped onto C_k: fibers chosen so every fiber is inhabited,
// edges only between consecutive fibers.
std::pair<Graph, VertexMap> random_layered(std::mt19937& rng, int n, int k, double p) {
    std::uniform_int_distribution<int> fiber(0, k - 1);
    VertexMap psi{std::vector<int>(n)};
    for (int v = 0; v < k && v < n; ++v) psi.to[v] = v;
    for (int v = k; v < n; ++v) psi.to[v] = fiber(rng);
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int d = (psi(u) - psi(v) + k) % k;
            if ((d == 1 || d == k - 1) && coin(rng)) g.add_edge(u, v);
        }
    return {g, psi};
}

std::string validate_extraction(const Graph& f, const VertexMap& psi, int k, const ChordlessCycle& c) {
    int L = static_cast<int>(c.vertices.size());
    if (c.winding % 2 == 0) return "winding number is even";
    if (L < k) return "cycle shorter than the target cycle";
    if ((L - k) % 2 != 0) return "cycle parity differs from the target cycle";
    std::set<int> distinct(c.vertices.begin(), c.vertices.end());
    if (static_cast<int>(distinct.size()) != L) return "repeated vertex";
    std::set<int> classes;
    for (int i = 0; i < L; ++i) {
        int a = c.vertices[i], b = c.vertices[(i + 1) % L];
        if (!f.adjacent(a, b)) return "non-edge step";
        int lo = std::min(psi(a), psi(b)), hi = std::max(psi(a), psi(b));
        classes.insert(lo == 0 && hi == k - 1 ? k - 1 : lo);
        for (int j = i + 2; j < L; ++j)
            if (!(i == 0 && j == L - 1) && f.adjacent(c.vertices[i], c.vertices[j])) return "chord";
    }
    if (static_cast<int>(classes.size()) != k) return "fiber edge class not covered";
    return "";
}

}  // namespace

VerifyResult verify_main_dual(int gmax, int fmax) {
    VerifyResult r;
    r.report["theorem"] = "main-dual";
    r.report["gmax"] = gmax;
    r.report["fmax"] = fmax;
    nlohmann::json failures = nlohmann::json::array();
    long checked = 0;

    auto sources = enumerate_graphs(fmax, false);
    for (const auto& g : enumerate_graphs(gmax, true)) {
        if (g.vertex_count() < 2) continue;  // the single vertex has no lift over {0}
        auto [g0, g1] = build_G01(g);
        for (const auto& f : sources) {
            ++checked;
            HomCount h0 = hom_count(f, g0.graph), h1 = hom_count(f, g1.graph);
            auto cert = find_weak_oddo(f, g);
            std::string what;
            if (h1 > h0)
                what = "hom(F,G_1) exceeds hom(F,G_0)";
            else if ((h0 > h1) != cert.has_value())
                what = cert ? "certificate found but counts agree" : "counts differ without a certificate";
            else if (cert && !check_certificate(f, g, *cert).empty())
                what = "certificate does not re-verify";
            else {
                HomCount s0 = 0, s1 = 0;
                for (const auto& psi : hom_enumerate(f, g, 5000000)) {
                    s0 += hom_count_fibered(f, g, {}, psi);
                    s1 += hom_count_fibered(f, g, {0}, psi);
                }
                if (s0 != h0) what = "fibered sum mismatch for the even lift";
                if (s1 != h1) what = "fibered sum mismatch for the odd lift";
            }
            if (!what.empty())
                failures.push_back(fail_entry(what, {{"G", write_graph6(g)}, {"F", write_graph6(f)}}));
        }
    }
    finish(r, checked, failures);
    return r;
}

VerifyResult verify_zero_iso(int nmax) {
    VerifyResult r;
    r.report["theorem"] = "zero-iso";
    r.report["nmax"] = nmax;
    nlohmann::json failures = nlohmann::json::array();
    long checked = 0;
    for (const auto& g : enumerate_graphs(nmax, true)) {
        if (g.vertex_count() < 2) continue;
        ++checked;
        auto [g0, g1] = build_G01(g);
        if (hom_count(g, g0.graph) == hom_count(g, g1.graph))
            failures.push_back(fail_entry("the base graph cannot tell its own lifts apart", {{"G", write_graph6(g)}}));
    }
    finish(r, checked, failures);
    return r;
}

VerifyResult verify_winding(int count, unsigned seed) {
    VerifyResult r;
    r.report["theorem"] = "winding";
    r.report["count"] = count;
    r.report["seed"] = seed;
    nlohmann::json failures = nlohmann::json::array();
    std::mt19937 rng(seed);
    long found = 0, tried = 0;
    while (found < count && tried < 200 * count) {
        ++tried;
        int k = 3 + static_cast<int>(rng() % 5);
        int n = k + 2 + static_cast<int>(rng() % std::max(1, 9 - k));  // |V(F)| <= 10
        auto [f, layer] = random_layered(rng, n, k, 0.55);
        if (!is_connected(f)) continue;
        auto cert = find_weak_oddo(f, make_cycle(k));
        if (!cert) continue;
        ++found;
        auto c = extract_chordless_odd_cycle(f, *cert, k);
        if (auto err = validate_extraction(f, cert->psi, k, c); !err.empty())
            failures.push_back(fail_entry(err, {{"F", write_graph6(f)}, {"k", k}}));
    }
    if (found < count)
        failures.push_back(fail_entry("instance generation fell short", {{"found", found}}));
    finish(r, found, failures);
    return r;
}

VerifyResult verify_minor_transport(int count, unsigned seed) {
    VerifyResult r;
    r.report["theorem"] = "minor-transport";
    r.report["count"] = count;
    r.report["seed"] = seed;
    nlohmann::json failures = nlohmann::json::array();
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(0.5);
    long made = 0, tried = 0;
    while (made < count && tried < 50 * count) {
        ++tried;
        int n = 3 + static_cast<int>(rng() % 3);
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) g.add_edge(u, v);
        if (!is_connected(g) || g.edge_count() == 0) continue;

        Graph f;
        VertexMap psi;
        if (coin(rng)) {
            std::vector<int> lens(g.edge_count(), 1);
            lens[rng() % lens.size()] = 3;
            std::tie(f, psi) = odd_subdivision(g, lens);
        } else {
            if (3 * n > 12) continue;  // keep the minor check inside its guard
            std::vector<std::vector<int>> volts;
            for (int e = 0; e < g.edge_count(); ++e) {
                std::vector<int> pi{0, 1, 2};
                std::shuffle(pi.begin(), pi.end(), rng);
                volts.push_back(pi);
            }
            std::tie(f, psi) = odd_cover(g, 3, volts);
        }
        auto [u, v] = g.edges()[rng() % g.edge_count()];
        auto m = minor_oddo(f, psi, g, u, v);
        ++made;
        std::string what;
        if (!is_oddomorphism(m.Fprime, m.psi, m.Gprime))
            what = "transported map is not an oddomorphism";
        else if (f.vertex_count() <= 12 && !has_minor(f, m.Fprime))
            what = "transported source is not a minor of the source";
        if (!what.empty())
            failures.push_back(fail_entry(
                what, {{"G", write_graph6(g)}, {"F", write_graph6(f)}, {"u", u}, {"v", v}}));
    }
    if (made < count) failures.push_back(fail_entry("instance generation fell short", {{"made", made}}));
    finish(r, made, failures);
    return r;
}

VerifyResult verify_bounded_degree(int fmax) {
    VerifyResult r;
    r.report["theorem"] = "bounded-degree";
    r.report["fmax"] = fmax;
    nlohmann::json failures = nlohmann::json::array();
    long checked = 0;

    Graph h = build_star_simplified(3, 0), hp = build_star_simplified(3, 1);
    for (const auto& f : enumerate_graphs(fmax, true)) {
        if (f.max_degree() >= 3) continue;
        ++checked;
        if (hom_count(f, h) != hom_count(f, hp))
            failures.push_back(fail_entry("low-degree graph tells the pair apart", {{"F", write_graph6(f)}}));
    }
    if (hom_count(make_star(3), h) == hom_count(make_star(3), hp))
        failures.push_back(fail_entry("K_{1,3} fails to distinguish the pair", {}));
    if (!is_connected(h)) failures.push_back(fail_entry("even lift of the star is disconnected", {}));
    bool isolated = false;
    for (int v = 0; v < hp.vertex_count(); ++v)
        if (hp.degree(v) == 0 && !hp.has_loop(v)) isolated = true;
    if (!isolated) failures.push_back(fail_entry("odd lift of the star lacks an isolated vertex", {}));

    Graph p4 = make_path(4), k3k1 = disjoint_union(make_complete(3), make_complete(1));
    if (hom_count(make_star(2), p4) != 10 || hom_count(make_star(2), k3k1) != 12)
        failures.push_back(fail_entry("degree-two pair counts are off", {}));
    for (const auto& f : enumerate_graphs(std::min(fmax, 5), true)) {
        if (f.max_degree() >= 2) continue;
        ++checked;
        if (hom_count(f, p4) != hom_count(f, k3k1))
            failures.push_back(fail_entry("degree-one graph tells the explicit pair apart", {{"F", write_graph6(f)}}));
    }
    finish(r, checked, failures);
    return r;
}

VerifyResult verify_bipartite_obstruction(int fmax, int gmax) {
    VerifyResult r;
    r.report["theorem"] = "bipartite-obstruction";
    r.report["fmax"] = fmax;
    r.report["gmax"] = gmax;
    nlohmann::json failures = nlohmann::json::array();
    long checked = 0;

    std::vector<Graph> targets;
    for (const auto& g : enumerate_graphs(gmax, true))
        if (g.vertex_count() >= 2 && !bipartition(g)) targets.push_back(g);
    for (const auto& f : enumerate_graphs(fmax, false)) {
        if (!bipartition(f)) continue;
        for (const auto& g : targets) {
            ++checked;
            if (find_weak_oddo(f, g))
                failures.push_back(fail_entry("bipartite graph earned a certificate",
                                              {{"F", write_graph6(f)}, {"G", write_graph6(g)}}));
        }
    }
    finish(r, checked, failures);
    return r;
}

}  // namespace homind
