#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rainbow/lemmas.hpp"

using namespace rainbow;

TEST_CASE("counting lemma examples") {
    CHECK(check_lemma_count(oracle::cycle(4)));   // 2 >= 4 - 2
    CHECK(check_lemma_count(oracle::complete(3)));  // 3 >= 3 - 1
    CHECK(check_lemma_count(empty_graph(5)));
}

TEST_CASE("counting lemma exhaustively up to n = 6") {
    for (int n = 0; n <= 6; ++n)
        for_each_graph(n, [&](const SimpleGraph& g) { REQUIRE(check_lemma_count(g)); });
}

TEST_CASE("counting lemma on random graphs across densities") {
    std::mt19937_64 rng(31);
    for (int decile = 1; decile <= 9; ++decile)
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 1 + static_cast<int>(rng() % 12);
            auto g = oracle::random_graph(n, decile / 10.0, rng);
            REQUIRE(check_lemma_count(g));
        }
}

TEST_CASE("the counting lemma's pair map is injective") {
    // f(e) = e symmetric-difference e_{s(e)} for e outside the matching, where
    // s(e) is the first matching edge meeting e; f must land in P injectively.
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        auto g = oracle::random_graph(n, 0.4, rng);
        auto matching = greedy_maximal_matching(g);
        std::set<std::pair<int, int>> inMatching(matching.begin(), matching.end());
        std::set<std::pair<int, int>> images;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (!g.has_edge(u, v) || inMatching.count({u, v})) continue;
                // first matching edge sharing an endpoint
                const std::pair<int, int>* hit = nullptr;
                for (const auto& m : matching)
                    if (m.first == u || m.first == v || m.second == u || m.second == v) {
                        hit = &m;
                        break;
                    }
                REQUIRE(hit != nullptr);  // maximality
                std::set<int> diff;  // symmetric difference of {u,v} and the matching edge
                for (int x : {u, v})
                    if (x != hit->first && x != hit->second) diff.insert(x);
                for (int x : {hit->first, hit->second})
                    if (x != u && x != v) diff.insert(x);
                REQUIRE(diff.size() == 2);
                auto it = diff.begin();
                int x = *it++;
                int y = *it;
                auto image = std::minmax(x, y);
                CHECK(images.insert(image).second);  // injectivity
                // image lies in P: the shared endpoint is a common neighbor
                bool common = false;
                for (int z = 0; z < n; ++z)
                    if (g.has_edge(x, z) && g.has_edge(y, z)) common = true;
                CHECK(common);
            }
    }
}

TEST_CASE("Mantel check examples") {
    CHECK(check_mantel(oracle::cycle(5)));
    CHECK(check_mantel(oracle::complete_bipartite(3, 3)));  // tight: 9 = 36/4
    CHECK(check_mantel(oracle::complete(3)));               // vacuous
}

TEST_CASE("Mantel check exhaustively and by sampling") {
    for (int n = 0; n <= 6; ++n)
        for_each_graph(n, [&](const SimpleGraph& g) { REQUIRE(check_mantel(g)); });
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 3000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 16);
        REQUIRE(check_mantel(oracle::random_graph(n, 0.3, rng)));
    }
    // tightness at identical complete bipartite graphs for even n
    for (int half = 1; half <= 5; ++half) {
        auto g = oracle::complete_bipartite(half, half);
        CHECK_FALSE(has_triangle(g));
        CHECK(4 * g.edge_count() == static_cast<long long>(g.n()) * g.n());
    }
}

TEST_CASE("bipartition inequality examples") {
    CHECK(check_bipman(oracle::complete(4), VertexSet(4, {0, 1}), VertexSet(4, {2, 3})) ==
          BipmanResult::Holds);  // tight: 4 <= 1 + 1 + 2
    CHECK(check_bipman(empty_graph(6), VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})) ==
          BipmanResult::Holds);

    GraphBuilder star(4);
    star.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3);
    CHECK(check_bipman(star.build(), VertexSet(4, {0}), VertexSet(4, {1, 2, 3})) ==
          BipmanResult::NotApplicable);  // center sees three independent leaves

    CHECK_THROWS_AS(check_bipman(empty_graph(4), VertexSet(4, {0, 1}), VertexSet(4, {1, 2, 3})),
                    std::invalid_argument);
}

TEST_CASE("bipartition inequality exhaustively up to n = 5") {
    for (int n = 0; n <= 5; ++n)
        for_each_graph(n, [&](const SimpleGraph& g) {
            for_each_bipartition(n, [&](const VertexSet& z0, const VertexSet& z1) {
                REQUIRE(check_bipman(g, z0, z1) != BipmanResult::Violated);
            });
        });
}

TEST_CASE("bipartition inequality on sampled disjoint-clique instances") {
    // Disjoint unions of cliques satisfy the hypothesis for every bipartition;
    // arbitrary random graphs almost never do.
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 39);
        GraphBuilder b(n);
        VertexSet z0(n), z1(n);
        int v = 0;
        while (v < n) {
            int size = 1 + static_cast<int>(rng() % 6);
            size = std::min(size, n - v);
            for (int i = v; i < v + size; ++i)
                for (int j = i + 1; j < v + size; ++j) b.add_edge(i, j);
            v += size;
        }
        for (int u = 0; u < n; ++u) (rng() & 1 ? z0 : z1).insert(u);
        auto result = check_bipman(b.build(), z0, z1);
        CHECK(result == BipmanResult::Holds);
    }
}

TEST_CASE("digon scene with matching internal colors") {
    auto report = enumerate_digon_case1();
    CHECK(report.violations == 0);
    CHECK(report.caseA == 256);
    CHECK(report.caseB == 48);
    CHECK(report.caseC == 4);
}

TEST_CASE("digon scene with mixed internal colors") {
    auto report = enumerate_digon_case2();
    CHECK(report.violations == 0);
    CHECK(report.caseA == 200);
    CHECK(report.caseB == 4);
}

TEST_CASE("subset-removal arithmetic") {
    CHECK(check_no3pm_arithmetic(10, 2));
    CHECK(check_no3pm_arithmetic(10, 10));  // slack tau^2 n^2/2 + 3n/2 > 0
    CHECK(check_no3pm_arithmetic(7, 0));    // degenerate: equality
    for (long long n = 1; n <= 200; ++n)
        for (long long l = 1; l <= n; ++l) REQUIRE(check_no3pm_arithmetic(n, l));
}

TEST_CASE("lemma suite driver reports all passes") {
    LemmaSuiteConfig cfg;
    cfg.countExhaustiveMax = 5;
    cfg.mantelExhaustiveMax = 5;
    cfg.bipmanExhaustiveMax = 4;
    cfg.no3pmMaxN = 100;
    for (const auto& result : run_lemma_suite(cfg)) {
        CAPTURE(result.name);
        CHECK(result.passed());
    }
}
