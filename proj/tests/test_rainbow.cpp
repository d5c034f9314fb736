#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "rainbow/construction.hpp"
#include "rainbow/triangles.hpp"

using namespace rainbow;

namespace {

GraphTriple path_triple() {
    GraphBuilder b(3);
    b.add_edge(0, 1).add_edge(1, 2);
    SimpleGraph path = b.build();
    return {path, path, path};
}

}  // namespace

TEST_CASE("find_rainbow_triangle returns the lexicographically first witness") {
    GraphBuilder b1(3), b2(3), b3(3);
    b1.add_edge(0, 1);
    b2.add_edge(1, 2);
    b3.add_edge(0, 2);
    GraphTriple t(b1.build(), b2.build(), b3.build());
    auto w = find_rainbow_triangle(t);
    REQUIRE(w.has_value());
    CHECK(*w == RainbowWitness{0, 1, 2});

    CHECK_FALSE(find_rainbow_triangle(path_triple()).has_value());
    CHECK_FALSE(find_rainbow_triangle(build_construction({20, 3})).has_value());
}

TEST_CASE("count_rainbow_triangles examples") {
    GraphTriple k3(oracle::complete(3), oracle::complete(3), oracle::complete(3));
    CHECK(count_rainbow_triangles(k3) == 6);
    CHECK(count_rainbow_triangles(blow_up(k3, 2)) == 48);

    GraphTriple emptyMiddle(oracle::complete(4), empty_graph(4), oracle::complete(4));
    CHECK(count_rainbow_triangles(emptyMiddle) == 0);
}

TEST_CASE("count agrees with the cubic oracle on random triples") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        auto t = oracle::random_triple(n, 0.3 + 0.05 * (rng() % 9), rng);
        auto fast = count_rainbow_triangles(t);
        CHECK(fast == oracle::count_rainbow_cubic(t));
        CHECK(find_rainbow_triangle(t).has_value() == (fast != 0));
    }
}

TEST_CASE("cyclic color shift preserves the count") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 8);
        auto t = oracle::random_triple(n, 0.5, rng);
        GraphTriple shifted(t.graph(1), t.graph(2), t.graph(0));
        CHECK(count_rainbow_triangles(t) == count_rainbow_triangles(shifted));
    }
}

TEST_CASE("blow_up multiplies the count by k^3") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        int k = 2 + static_cast<int>(rng() % 3);
        auto t = oracle::random_triple(n, 0.5, rng);
        auto big = blow_up(t, k);
        CHECK(count_rainbow_triangles(big) ==
              static_cast<std::uint64_t>(k) * k * k * count_rainbow_triangles(t));
    }
}

TEST_CASE("min_edge_count") {
    CHECK(min_edge_count(build_construction({20, 3})) == 94);
    CHECK(min_edge_count(empty_triple(5)) == 0);
    GraphTriple k4(oracle::complete(4), oracle::complete(4), oracle::complete(4));
    CHECK(min_edge_count(k4) == 6);
}

TEST_CASE("digons are the exactly-two-color pairs") {
    GraphBuilder b1(4), b2(4), b3(4);
    b1.add_edge(0, 1);
    b2.add_edge(0, 1);  // digon {0,1}, colors {1,2}
    b1.add_edge(2, 3);  // single color: not a digon
    b1.add_edge(1, 2);
    b2.add_edge(1, 2);
    b3.add_edge(1, 2);  // all three colors: not a digon
    GraphTriple t(b1.build(), b2.build(), b3.build());
    auto digons = list_digons(t);
    REQUIRE(digons.size() == 1);
    CHECK(digons[0] == Digon{0, 1, 0b011});
}
