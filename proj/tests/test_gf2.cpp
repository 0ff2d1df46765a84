#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "homind/gf2.hpp"

using namespace homind;

namespace {

Gf2Matrix random_matrix(std::mt19937& rng, int rows, int cols, double p = 0.5) {
    Gf2Matrix m(rows, cols);
    std::bernoulli_distribution coin(p);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng)) m.set(r, c, true);
    return m;
}

Gf2Vector random_vector(std::mt19937& rng, int n) {
    Gf2Vector v(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        if (coin(rng)) v.set(i, true);
    return v;
}

// Exhaustive assignment oracle for small systems.
long count_solutions_bruteforce(const Gf2System& s) {
    long count = 0;
    int n = s.M.cols();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Gf2Vector x(n);
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) x.set(i, true);
        if (s.M.multiply(x) == s.b) ++count;
    }
    return count;
}

// Row-span oracle for rank: log2 of span size.
int rank_bruteforce(const Gf2Matrix& m) {
    std::set<std::vector<std::uint64_t>> span;
    int rows = m.rows();
    for (std::uint32_t mask = 0; mask < (1u << rows); ++mask) {
        Gf2Vector acc(m.cols());
        for (int r = 0; r < rows; ++r)
            if (mask >> r & 1)
                for (int c = 0; c < m.cols(); ++c)
                    if (m.get(r, c)) acc.flip(c);
        span.insert(acc.bits);
    }
    int lg = 0;
    while ((1u << lg) < span.size()) ++lg;
    return lg;
}

}  // namespace

TEST_CASE("rank basics") {
    Gf2Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, true);
    CHECK(rank(id) == 3);
    CHECK(rank(Gf2Matrix(3, 3)) == 0);

    std::mt19937 rng(3);
    for (int i = 0; i < 30; ++i) {
        Gf2Matrix m = random_matrix(rng, 8, 12);
        CHECK(rank(m) == rank_bruteforce(m));
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("solve basics") {
    Gf2Matrix id(3, 3);
    for (int i = 0; i < 3; ++i) id.set(i, i, true);
    Gf2Vector b(3);
    b.set(0, true);
    b.set(2, true);
    auto x = solve({id, b});
    REQUIRE(x.has_value());
    CHECK(x->get(0));
    CHECK(!x->get(1));
    CHECK(x->get(2));

    Gf2Matrix row(1, 2);
    row.set(0, 0, true);
    row.set(0, 1, true);
    Gf2Vector one(1);
    one.set(0, true);
    auto x2 = solve({row, one});
    REQUIRE(x2.has_value());
    CHECK((x2->get(0) ^ x2->get(1)) == true);

    Gf2Matrix zero(1, 1);
    CHECK(!solve({zero, one}).has_value());
}

TEST_CASE("solution counting") {
    Gf2Matrix m(2, 3);
    m.set(0, 0, true);
    m.set(1, 1, true);
    CHECK(solution_count_log2({m, Gf2Vector(2)}) == 1);

    Gf2Matrix zero(1, 1);
    Gf2Vector one(1);
    one.set(0, true);
    CHECK(!solution_count_log2({zero, one}).has_value());

    std::mt19937 rng(17);
    for (int i = 0; i < 100; ++i) {
        Gf2System s{random_matrix(rng, 3 + i % 8, 2 + i % 11, 0.4), random_vector(rng, 3 + i % 8)};
        long brute = count_solutions_bruteforce(s);
        auto lg = solution_count_log2(s);
        if (brute == 0)
            CHECK(!lg.has_value());
        else
            CHECK((1L << *lg) == brute);
    }
}

TEST_CASE("fredholm certificates") {
    Gf2Matrix zero(1, 1);
    Gf2Vector one(1);
    one.set(0, true);
    auto y = fredholm_certificate({zero, one});
    REQUIRE(y.has_value());
    CHECK(y->get(0));

    Gf2Matrix m(2, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 0, true);
    m.set(1, 1, true);
    Gf2Vector b(2);
    b.set(1, true);  // x1+x2=0, x1+x2=1
    auto y2 = fredholm_certificate({m, b});
    REQUIRE(y2.has_value());
    CHECK(y2->get(0));
    CHECK(y2->get(1));

    Gf2Matrix id(2, 2);
    id.set(0, 0, true);
    id.set(1, 1, true);
    CHECK(!fredholm_certificate({id, b}).has_value());
}

TEST_CASE("solve xor certificate, both re-verify") {
    std::mt19937 rng(99);
    for (int i = 0; i < 1000; ++i) {
        int rows = 1 + i % 10, cols = 1 + (i * 7) % 16;
        Gf2System s{random_matrix(rng, rows, cols, 0.35), random_vector(rng, rows)};
        auto x = solve(s);
        auto y = fredholm_certificate(s);
        CHECK(x.has_value() != y.has_value());
        if (x) CHECK(s.M.multiply(*x) == s.b);
        if (y) {
            CHECK(s.M.transpose().multiply(*y) == Gf2Vector(cols));
            int dot = 0;
            for (int r = 0; r < rows; ++r) dot ^= (s.b.get(r) && y->get(r)) ? 1 : 0;
            CHECK(dot == 1);
        }
    }
}
