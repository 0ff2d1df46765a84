#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "homind/graph.hpp"
#include "test_util.hpp"

using namespace homind;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

// Independent enumeration oracle: every adjacency matrix, dedup by a
// brute-force minimum key over all n! labelings.
std::set<std::string> all_classes_bruteforce(int n, bool connected_only) {
    std::set<std::string> keys;
    int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        if (connected_only && !is_connected(g)) continue;
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            std::string s;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) s += g.adjacent(perm[u], perm[v]) ? '1' : '0';
            if (best.empty() || s < best) best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        keys.insert(best);
    }
    return keys;
}

}  // namespace

TEST_CASE("graph6 parsing") {
    Graph k2 = parse_graph6("A_");
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.adjacent(0, 1));

    Graph k3 = parse_graph6("Bw");
    CHECK(is_isomorphic(k3, make_complete(3)));

    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);      // truncated
    CHECK_THROWS_AS(parse_graph6("A_\x01"), ParseError); // trailing garbage
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);    // long form

    // Error messages name a byte offset.
    try {
        parse_graph6("A");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte") != std::string::npos);
    }
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        Graph g = test::random_graph(rng, 1 + i % 12, 0.4);
        Graph back = parse_graph6(write_graph6(g));
        CHECK(back == g);
    }
    CHECK(write_graph6(parse_graph6("Bw")) == "Bw");
    Graph looped(2);
    looped.add_loop(0);
    CHECK_THROWS_AS(write_graph6(looped), InvalidInput);
}

TEST_CASE("edge list format") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_loop(3);
    Graph back = parse_edge_list(write_edge_list(g));
    CHECK(back == g);
    CHECK(write_edge_list(g) == "4 3\n0 1\n1 2\nloop 3\n");
    CHECK_THROWS_AS(parse_edge_list("3"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), ParseError);
    CHECK(parse_graph_auto("Bw").vertex_count() == 3);
    CHECK(parse_graph_auto("2 1\n0 1\n") == parse_graph6("A_"));
}

TEST_CASE("generators") {
    Graph c3 = make_cycle(3);
    CHECK(c3.edge_count() == 3);
    CHECK(c3.adjacent(0, 1));
    CHECK(c3.adjacent(1, 2));
    CHECK(c3.adjacent(0, 2));
    CHECK_THROWS_AS(make_cycle(2), InvalidInput);

    Graph s3 = make_star(3);
    CHECK(s3.degree(0) == 3);
    CHECK(s3.degree(1) == 1);
    CHECK(!s3.adjacent(1, 2));

    CHECK(make_complete(1).edge_count() == 0);
    CHECK(make_complete(1).vertex_count() == 1);
    CHECK(make_path(4).edge_count() == 3);
    CHECK(make_empty(5).edge_count() == 0);
}

TEST_CASE("edge indexing and incidence") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    g.add_loop(1);
    // Lexicographic (u,v) with u <= v: (0,1) (0,2) (1,1) (2,3)
    CHECK(g.edge_index(0, 1) == 0);
    CHECK(g.edge_index(2, 0) == 1);
    CHECK(g.edge_index(1, 1) == 2);
    CHECK(g.edge_index(3, 2) == 3);
    CHECK(g.edge_index(1, 3) == -1);
    CHECK(g.incident_edges(0) == std::vector<int>{0, 1});
    CHECK(g.incident_edges(1) == std::vector<int>{0});  // loops excluded
    CHECK(g.degree(1) == 1);
    CHECK(g.has_loop(1));
    CHECK(g.neighbor_bit(1, 1));
    CHECK(!g.adjacent(1, 1));
}

TEST_CASE("homomorphism check") {
    Graph c6 = make_cycle(6), k2 = make_complete(2);
    VertexMap two_color{{0, 1, 0, 1, 0, 1}};
    CHECK(is_homomorphism(c6, two_color, k2));
    VertexMap bad{{0, 1, 0, 1, 0, 0}};
    CHECK(!is_homomorphism(c6, bad, k2));
    CHECK(two_color.fibers(2)[0] == std::vector<int>{0, 2, 4});

    Graph loop1(1);
    loop1.add_loop(0);
    VertexMap collapse{{0, 0, 0}};
    CHECK(is_homomorphism(make_cycle(3), collapse, loop1));
    CHECK(!is_homomorphism(make_cycle(3), collapse, make_complete(1)));
}

TEST_CASE("isomorphism basics") {
    std::mt19937 rng(11);
    Graph c6 = make_cycle(6);
    CHECK(is_isomorphic(c6, test::random_relabel(rng, c6)));
    CHECK(!is_isomorphic(c6, disjoint_union(make_cycle(3), make_cycle(3))));

    // Witness validity against its own target.
    Graph h = test::random_relabel(rng, c6);
    auto w2 = find_isomorphism(c6, h);
    REQUIRE(w2.has_value());
    CHECK(is_homomorphism(c6, *w2, h));
    std::set<int> img(w2->to.begin(), w2->to.end());
    CHECK(img.size() == 6);
}

TEST_CASE("isomorphism is an equivalence on random graphs") {
    std::mt19937 rng(23);
    for (int i = 0; i < 100; ++i) {
        Graph g = test::random_graph(rng, 2 + i % 8, 0.5, i % 3 == 0);
        CHECK(is_isomorphic(g, g));
        Graph h = test::random_relabel(rng, g);
        CHECK(is_isomorphic(g, h));
        CHECK(is_isomorphic(h, g));
        CHECK(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("canonical key separates non-isomorphic graphs") {
    std::mt19937 rng(31);
    for (int i = 0; i < 100; ++i) {
        Graph g = test::random_graph(rng, 6, 0.5);
        Graph h = test::random_graph(rng, 6, 0.5);
        CHECK((canonical_key(g) == canonical_key(h)) == is_isomorphic(g, h));
    }
}

TEST_CASE("minor containment") {
    CHECK(has_minor(make_complete(4), make_complete(3)));
    CHECK(has_minor(make_cycle(5), make_complete(3)));
    Graph tree5 = make_path(5);
    CHECK(!has_minor(tree5, make_cycle(3)));
    CHECK(has_minor(make_star(4), make_star(2)));
    CHECK(has_minor(make_cycle(4), make_complete(3)));
    CHECK(!has_minor(make_cycle(5), make_complete(4)));
    CHECK_THROWS_AS(has_minor(make_complete(13), make_complete(3)), GuardExceeded);
}

TEST_CASE("minor containment is reflexive and transitive on samples") {
    std::mt19937 rng(41);
    for (int i = 0; i < 25; ++i) {
        Graph g = test::random_graph(rng, 5 + i % 3, 0.45);
        CHECK(has_minor(g, g));
    }
    // K5 <= Petersen and K3 <= K5 implies K3 <= Petersen.
    CHECK(has_minor(petersen(), make_complete(5)));
    CHECK(has_minor(make_complete(5), make_complete(3)));
    CHECK(has_minor(petersen(), make_complete(3)));
}

TEST_CASE("structure queries") {
    auto r7 = structure_queries(make_cycle(7));
    CHECK(r7.circumference == 7);
    CHECK(r7.odd_hole);
    CHECK(r7.max_degree == 2);
    CHECK(!r7.bipartite);
    CHECK(r7.planar);

    auto rs = structure_queries(make_star(3));
    CHECK(rs.bipartite);
    CHECK(rs.max_degree == 3);
    CHECK(rs.circumference == 0);
    CHECK(!rs.odd_hole);
    CHECK(find_induced_star(make_star(3), 3).has_value());
    CHECK(!find_induced_star(make_complete(4), 2).has_value());

    // K4 has a triangle but no odd hole (length >= 5 induced).
    CHECK(!find_odd_hole(make_complete(4)).has_value());
    // C5 plus a chord: the chord kills the 5-hole.
    Graph c5c = make_cycle(5);
    c5c.add_edge(0, 2);
    CHECK(!find_odd_hole(c5c).has_value());
    auto hole = find_odd_hole(make_cycle(7));
    REQUIRE(hole.has_value());
    CHECK(hole->size() == 7);
}

TEST_CASE("longest cycle witness") {
    Graph g = make_cycle(5);
    g.add_edge(0, 2);
    auto cyc = longest_cycle(g);
    CHECK(cyc.size() == 5);
    for (std::size_t i = 0; i < cyc.size(); ++i) CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    CHECK(longest_cycle(make_path(6)).empty());
}

TEST_CASE("planarity") {
    CHECK(is_planar(make_complete(4)));
    CHECK(!is_planar(make_complete(5)));
    Graph k33(6);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) k33.add_edge(i, j);
    CHECK(!is_planar(k33));
    CHECK(!is_planar(petersen()));
    CHECK(is_planar(make_cycle(8)));
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_cycle(6)) == 2);
    CHECK(chromatic_number(make_empty(3)) == 1);
    CHECK(chromatic_number(petersen()) == 3);
}

TEST_CASE("connectivity and bipartition") {
    CHECK(connected_components(disjoint_union(make_cycle(3), make_path(2))).size() == 2);
    CHECK(is_connected(make_cycle(4)));
    Graph c6 = make_cycle(6);
    auto bp = bipartition(c6);
    REQUIRE(bp.has_value());
    for (const auto& [u, v] : c6.edges()) CHECK((*bp)[u] != (*bp)[v]);
    CHECK(!bipartition(make_cycle(5)).has_value());
}

TEST_CASE("enumeration matches brute-force class counts") {
    CHECK(enumerate_graphs(0, false).empty());
    auto con3 = enumerate_graphs(3, true);
    CHECK(con3.size() == 4);  // K1, K2, P3, K3
    bool saw_p3 = false, saw_k3 = false;
    for (const auto& g : con3) {
        if (is_isomorphic(g, make_path(3))) saw_p3 = true;
        if (is_isomorphic(g, make_complete(3))) saw_k3 = true;
    }
    CHECK(saw_p3);
    CHECK(saw_k3);

    auto con4 = enumerate_graphs(4, true);
    int exactly4 = 0;
    for (const auto& g : con4)
        if (g.vertex_count() == 4) ++exactly4;
    CHECK(exactly4 == 6);

    for (int n = 1; n <= 6; ++n) {
        for (bool conn : {false, true}) {
            std::size_t expect = 0;
            for (int m = 1; m <= n; ++m) expect += all_classes_bruteforce(m, conn).size();
            CHECK(enumerate_graphs(n, conn).size() == expect);
        }
    }

    // Deterministic order, and no duplicates.
    auto a = enumerate_graphs(5, false);
    auto b = enumerate_graphs(5, false);
    REQUIRE(a.size() == b.size());
    std::set<std::string> keys;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        keys.insert(canonical_key(a[i]) + "@" + std::to_string(a[i].vertex_count()));
    }
    CHECK(keys.size() == a.size());

    CHECK_THROWS_AS(enumerate_graphs(9, false), GuardExceeded);
}

TEST_CASE("enumeration with predicate filters output only") {
    auto trees = enumerate_graphs(5, true, 8);
    int tree_count = 0;
    std::vector<Graph> filtered;
    enumerate_graphs(5, true, [](const Graph& g) { return g.edge_count() == g.vertex_count() - 1; },
                     [&](const Graph& g) { filtered.push_back(g); }, 8);
    for (const auto& g : trees)
        if (g.edge_count() == g.vertex_count() - 1) ++tree_count;
    CHECK(static_cast<int>(filtered.size()) == tree_count);
    CHECK(tree_count == 8);  // trees on 1..5 vertices: 1+1+1+2+3
}

TEST_CASE("loop graph enumeration") {
    auto l1 = enumerate_loop_graphs(1);
    CHECK(l1.size() == 2);  // K1 and looped K1
    auto l2 = enumerate_loop_graphs(2);
    // n<=2 classes: 2 on one vertex, 6 on two (edge on/off x loops 0/1/2).
    CHECK(l2.size() == 8);
    std::set<std::string> keys;
    for (const auto& g : l2) keys.insert(std::to_string(g.vertex_count()) + canonical_key(g));
    CHECK(keys.size() == l2.size());
}
