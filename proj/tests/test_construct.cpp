#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "homind/construct.hpp"
#include "test_util.hpp"

using namespace homind;

TEST_CASE("cycle lifts") {
    for (int k = 3; k <= 8; ++k) {
        Graph ck = make_cycle(k);
        auto [g0, g1] = build_G01(ck);
        CHECK(is_isomorphic(g0.graph, disjoint_union(ck, ck)));
        CHECK(is_isomorphic(g1.graph, make_cycle(2 * k)));
    }
}

TEST_CASE("K4 lift hits the two strongly regular landmarks") {
    auto [g0, g1] = build_G01(make_complete(4));
    CHECK(g0.graph.vertex_count() == 16);
    CHECK(g1.graph.vertex_count() == 16);
    CHECK(is_isomorphic(g0.graph, test::rook_4x4()));
    CHECK(is_isomorphic(g1.graph, test::shrikhande()));
    CHECK(!is_isomorphic(g0.graph, g1.graph));
}

TEST_CASE("small lifts") {
    auto [g0, g1] = build_G01(make_complete(2));
    CHECK(g0.graph.vertex_count() == 2);
    CHECK(g0.graph.edge_count() == 1);
    CHECK(g1.graph.vertex_count() == 2);
    CHECK(g1.graph.edge_count() == 0);
}

TEST_CASE("vertex count formula and projection") {
    std::mt19937 rng(5);
    int done = 0;
    while (done < 30) {
        Graph g = test::random_graph(rng, 3 + done % 4, 0.6);
        if (!is_connected(g)) continue;
        ++done;
        std::vector<int> u;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rng() % 2) u.push_back(v);
        auto lg = build_GU(g, u);
        long expect = 0;
        for (int v = 0; v < g.vertex_count(); ++v) expect += std::max(1l, 1l << std::max(0, g.degree(v) - 1));
        CHECK(lg.graph.vertex_count() == expect);
        CHECK(is_homomorphism(lg.graph, lg.projection, g));
        for (int i = 0; i < lg.graph.vertex_count(); ++i) {
            CHECK(lg.labels[i].head == lg.projection(i));
            int par = std::count(u.begin(), u.end(), lg.labels[i].head) % 2;
            CHECK(static_cast<int>(lg.labels[i].tail.size()) % 2 == par);
        }
    }
}

TEST_CASE("parity of U decides the isomorphism class") {
    std::mt19937 rng(9);
    int done = 0;
    while (done < 30) {
        Graph g = test::random_graph(rng, 3 + done % 4, 0.55);
        if (!is_connected(g)) continue;
        ++done;
        int n = g.vertex_count();
        auto random_u = [&](int parity) {
            while (true) {
                std::vector<int> u;
                for (int v = 0; v < n; ++v)
                    if (rng() % 2) u.push_back(v);
                if (static_cast<int>(u.size()) % 2 == parity) return u;
            }
        };
        auto even1 = build_GU(g, random_u(0)), even2 = build_GU(g, random_u(0));
        auto odd1 = build_GU(g, random_u(1));
        CHECK(is_isomorphic(even1.graph, even2.graph));
        CHECK(!is_isomorphic(even1.graph, odd1.graph));
    }
}

TEST_CASE("shift isomorphism") {
    Graph c3 = make_cycle(3);
    auto phi = shift_isomorphism(c3, {0}, 0, 1);
    auto from = build_GU(c3, {0});
    auto to = build_GU(c3, {1});
    REQUIRE(phi.size() == from.graph.vertex_count());
    CHECK(is_homomorphism(from.graph, phi, to.graph));
    std::set<int> img(phi.to.begin(), phi.to.end());
    CHECK(static_cast<int>(img.size()) == phi.size());
    // Edge-preserving bijection with equal edge counts is an isomorphism.
    CHECK(from.graph.edge_count() == to.graph.edge_count());

    // Chained along a path: lift over {0} maps isomorphically to lift over {2}.
    Graph p3 = make_path(3);
    auto s1 = shift_isomorphism(p3, {0}, 0, 1);
    auto s2 = shift_isomorphism(p3, {1}, 1, 2);
    auto a = build_GU(p3, {0});
    auto c = build_GU(p3, {2});
    VertexMap chain{std::vector<int>(s1.size())};
    for (int i = 0; i < s1.size(); ++i) chain.to[i] = s2(s1(i));
    CHECK(is_homomorphism(a.graph, chain, c.graph));
    CHECK(a.graph.edge_count() == c.graph.edge_count());

    // Shifting the empty set lands on a two-element U of even parity.
    Graph k2 = make_complete(2);
    auto s = shift_isomorphism(k2, {}, 0, 1);
    CHECK(s.size() == build_GU(k2, {}).graph.vertex_count());

    CHECK_THROWS_AS(shift_isomorphism(c3, {}, 0, 0), InvalidInput);
    Graph p4 = make_path(4);
    CHECK_THROWS_AS(shift_isomorphism(p4, {}, 0, 3), InvalidInput);
}

TEST_CASE("simplified star lifts") {
    Graph g30 = build_star_simplified(3, 0);
    CHECK(is_connected(g30));
    for (int v = 0; v < g30.vertex_count(); ++v) CHECK(g30.degree(v) > 0);

    Graph g31 = build_star_simplified(3, 1);
    bool isolated = false;
    for (int v = 0; v < g31.vertex_count(); ++v) isolated |= g31.degree(v) == 0;
    CHECK(isolated);

    CHECK(is_isomorphic(build_star_simplified(2, 1), disjoint_union(make_complete(2), make_complete(2))));

    for (int d = 1; d <= 4; ++d) {
        auto [g0, g1] = build_G01(make_star(d));
        CHECK(is_isomorphic(build_star_simplified(d, 0), g0.graph));
        CHECK(is_isomorphic(build_star_simplified(d, 1), g1.graph));
    }
}

TEST_CASE("loop variant") {
    auto t = build_tilde_GU(make_complete(2), {});
    CHECK(t.graph.vertex_count() == 2);
    CHECK(t.graph.has_loop(0));
    CHECK(t.graph.has_loop(1));
    CHECK(t.graph.adjacent(0, 1));

    // Same-head vertices form cliques, every vertex looped.
    auto tg = build_tilde_GU(make_star(3), {});
    for (int i = 0; i < tg.graph.vertex_count(); ++i) {
        CHECK(tg.graph.has_loop(i));
        for (int j = i + 1; j < tg.graph.vertex_count(); ++j)
            if (tg.labels[i].head == tg.labels[j].head) CHECK(tg.graph.adjacent(i, j));
    }
    // The plain lift shares the vertex set and is a subgraph on base edges.
    auto pg = build_GU(make_star(3), {});
    REQUIRE(pg.labels.size() == tg.labels.size());
    for (const auto& [u, v] : pg.graph.edges()) CHECK(tg.graph.adjacent(u, v));
}

TEST_CASE("input validation") {
    Graph looped(2);
    looped.add_loop(0);
    CHECK_THROWS_AS(build_GU(looped, {}), InvalidInput);
    CHECK_THROWS_AS(build_tilde_GU(looped, {}), InvalidInput);

    Graph iso = disjoint_union(make_complete(2), make_complete(1));
    CHECK_THROWS_AS(build_GU(iso, {2}), InvalidInput);  // U touches the isolated vertex
    CHECK_NOTHROW(build_GU(iso, {0, 1}));
    CHECK_THROWS_AS(build_G01(iso), InvalidInput);

    CHECK_THROWS_AS(build_GU(make_cycle(3), {7}), InvalidInput);
    Graph big(20);
    for (int i = 0; i < 20; ++i)
        for (int j = i + 1; j < 20; ++j) big.add_edge(i, j);
    CHECK_THROWS_AS(build_GU(big, {}), GuardExceeded);
}
