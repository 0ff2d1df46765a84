#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "homind/homcount.hpp"
#include "test_util.hpp"

using namespace homind;

TEST_CASE("basic counts") {
    CHECK(hom_count(make_complete(2), make_complete(3)) == 6);
    CHECK(hom_count(make_star(2), make_path(4)) == 10);
    CHECK(hom_count(make_star(2), disjoint_union(make_complete(3), make_complete(1))) == 12);
    CHECK(hom_count(make_complete(3), make_complete(2)) == 0);
    CHECK(hom_count(make_empty(0), make_complete(3)) == 1);
    CHECK(hom_count(make_complete(2), make_empty(0)) == 0);
    CHECK(hom_count(make_cycle(5), make_cycle(3)) == test::hom_count_bruteforce(make_cycle(5), make_cycle(3)));
}

TEST_CASE("counts match the exhaustive oracle on random pairs") {
    std::mt19937 rng(13);
    for (int i = 0; i < 120; ++i) {
        Graph f = test::random_graph(rng, 1 + i % 5, 0.5, i % 4 == 0);
        Graph g = test::random_graph(rng, 1 + (i * 3) % 5, 0.5, i % 3 == 0);
        CHECK(hom_count(f, g) == test::hom_count_bruteforce(f, g));
    }
}

TEST_CASE("guards") {
    CHECK_THROWS_AS(hom_count(make_path(11), make_complete(3)), GuardExceeded);
    CHECK_THROWS_AS(hom_count(make_complete(2), make_empty(65), 10, 100), GuardExceeded);
}

TEST_CASE("multiplicativity over source components") {
    std::mt19937 rng(29);
    for (int i = 0; i < 100; ++i) {
        Graph f1 = test::random_graph(rng, 1 + i % 4, 0.5);
        Graph f2 = test::random_graph(rng, 1 + (i * 5) % 4, 0.5);
        Graph g = test::random_graph(rng, 1 + (i * 7) % 6, 0.5, true);
        CHECK(hom_count(disjoint_union(f1, f2), g) == hom_count(f1, g) * hom_count(f2, g));
    }
}

TEST_CASE("additivity over target components for connected sources") {
    std::mt19937 rng(37);
    int done = 0;
    while (done < 50) {
        Graph f = test::random_graph(rng, 1 + done % 4, 0.6);
        if (!is_connected(f)) continue;
        ++done;
        Graph g1 = test::random_graph(rng, 1 + done % 5, 0.5);
        Graph g2 = test::random_graph(rng, 1 + (done * 3) % 5, 0.5);
        CHECK(hom_count(f, disjoint_union(g1, g2)) == hom_count(f, g1) + hom_count(f, g2));
    }
}

TEST_CASE("degree-square identity") {
    std::mt19937 rng(43);
    for (int i = 0; i < 50; ++i) {
        Graph g = test::random_graph(rng, 2 + i % 7, 0.5);
        mpz_class sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) sum += static_cast<long>(g.degree(v)) * g.degree(v);
        CHECK(hom_count(make_star(2), g) == sum);
    }
}

TEST_CASE("enumeration") {
    CHECK(hom_enumerate(make_complete(1), make_complete(3), 100).size() == 3);
    CHECK(hom_enumerate(make_complete(3), make_complete(2), 100).empty());
    auto maps = hom_enumerate(make_cycle(4), make_complete(3), 1000);
    CHECK(mpz_class(static_cast<long>(maps.size())) == hom_count(make_cycle(4), make_complete(3)));
    std::set<std::vector<int>> seen;
    for (const auto& m : maps) {
        CHECK(is_homomorphism(make_cycle(4), m, make_complete(3)));
        seen.insert(m.to);
    }
    CHECK(seen.size() == maps.size());
    CHECK_THROWS_AS(hom_enumerate(make_cycle(4), make_complete(3), 3), GuardExceeded);
}

TEST_CASE("fibered system construction") {
    Graph c3 = make_cycle(3);
    VertexMap id{{0, 1, 2}};
    auto s0 = build_fibered_system(c3, c3, {}, id);
    CHECK(s0.variables.size() == 6);  // each vertex has two incident edges
    CHECK(s0.A.rows() == 3);
    CHECK(s0.B.rows() == 3);
    auto sol = solve(s0.stacked());
    REQUIRE(sol.has_value());
    CHECK(sol->popcount() == 0);  // homogeneous: x = 0 works

    auto s1 = build_fibered_system(c3, c3, {0}, id);
    CHECK(!solve(s1.stacked()).has_value());

    // Single vertex mapped into U: one row, sum of deg(v) variables equal 1.
    Graph k1 = make_complete(1);
    VertexMap to0{{0}};
    auto sv = build_fibered_system(k1, c3, {0}, to0);
    CHECK(sv.variables.size() == 2);
    CHECK(solve(sv.stacked()).has_value());

    VertexMap bad{{0, 0, 2}};
    CHECK_THROWS_AS(build_fibered_system(c3, c3, {}, bad), InvalidInput);
}

TEST_CASE("fibered counts") {
    Graph c3 = make_cycle(3);
    VertexMap id{{0, 1, 2}};
    CHECK(hom_count_fibered(c3, c3, {}, id) == 2);
    CHECK(hom_count_fibered(c3, c3, {0}, id) == 0);
}

TEST_CASE("fibered counts partition the lifted homomorphisms") {
    auto graphs4 = enumerate_graphs(4, true);
    std::vector<std::vector<int>> us{{}, {0}};
    for (const auto& g : graphs4) {
        if (g.vertex_count() < 2) continue;
        for (const auto& u : us) {
            auto lift = build_GU(g, u);
            for (const auto& f : enumerate_graphs(4, false)) {
                mpz_class direct = hom_count(f, lift.graph);
                mpz_class via_fibers = 0;
                for (const auto& psi : hom_enumerate(f, g, 1000000)) via_fibers += hom_count_fibered(f, g, u, psi);
                CHECK(direct == via_fibers);
            }
        }
    }
}

TEST_CASE("fibered counts are monotone in the parity of U") {
    auto graphs4 = enumerate_graphs(4, true);
    for (const auto& g : graphs4) {
        if (g.vertex_count() < 2) continue;
        auto [g0, g1] = build_G01(g);
        for (const auto& f : enumerate_graphs(4, false)) CHECK(hom_count(f, g1.graph) <= hom_count(f, g0.graph));
    }
}

TEST_CASE("cycle homomorphism vectors") {
    auto v = hom_vector_cycles(make_complete(3), 5);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 6);  // closed triangle walks
    CHECK(v[0] == hom_count(make_cycle(3), make_complete(3)));
    CHECK(v[1] == hom_count(make_cycle(4), make_complete(3)));
    CHECK(v[2] == hom_count(make_cycle(5), make_complete(3)));

    auto z = hom_vector_cycles(make_empty(4), 6);
    for (const auto& x : z) CHECK(x == 0);

    auto rook = hom_vector_cycles(test::rook_4x4(), 8);
    auto shri = hom_vector_cycles(test::shrikhande(), 8);
    CHECK(rook == shri);
    CHECK(hom_count(make_complete(4), test::rook_4x4()) != hom_count(make_complete(4), test::shrikhande()));

    // Loops count as closed walks staying put.
    Graph l1(1);
    l1.add_loop(0);
    auto lv = hom_vector_cycles(l1, 4);
    CHECK(lv[0] == 1);
    CHECK(lv[1] == 1);

    CHECK_THROWS_AS(hom_vector_cycles(make_complete(3), 17), GuardExceeded);
}
