#pragma once

// Machine checks for the counting lemma, the short Mantel proof, the
// bipartition inequality, the digon case analysis and the subset-removal
// arithmetic chain.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/bitgraph.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

// |P| >= |E(G)| - |M| for a maximal matching M (checked with the greedy one;
// the inequality holds for any maximal matching).
inline bool check_lemma_count(const SimpleGraph& g) {
    long long p = common_neighbor_pairs(g);
    long long m = static_cast<long long>(greedy_maximal_matching(g).size());
    return p >= g.edge_count() - m;
}

inline bool has_triangle(const SimpleGraph& g) {
    for (int u = 0; u < g.n(); ++u) {
        auto ru = g.row(u);
        for (int v = u + 1; v < g.n(); ++v) {
            if (!g.has_edge(u, v)) continue;
            auto rv = g.row(v);
            for (std::size_t i = 0; i < ru.size(); ++i)
                if (ru[i] & rv[i]) return true;
        }
    }
    return false;
}

// Triangle-free graphs have at most n^2/4 edges; vacuously true otherwise.
inline bool check_mantel(const SimpleGraph& g) {
    if (has_triangle(g)) return true;
    return 4 * g.edge_count() <= static_cast<long long>(g.n()) * g.n();
}

enum class BipmanResult { NotApplicable, Holds, Violated };

// e(Z0,Z1) <= e(Z0) + e(Z1) + (|Z0|+|Z1|)/2, under the hypothesis that every
// vertex's cross-neighborhood is a clique.
inline BipmanResult check_bipman(const SimpleGraph& g, const VertexSet& z0, const VertexSet& z1) {
    if (z0.universe() != g.n() || z1.universe() != g.n() || z0.intersects(z1) ||
        z0.count() + z1.count() != g.n())
        throw std::invalid_argument("check_bipman requires a partition of V(G)");

    auto cross_neighborhood_is_clique = [&](int z, const VertexSet& other) {
        std::vector<int> nbrs;
        for (int w = 0; w < g.n(); ++w)
            if (other.contains(w) && g.has_edge(z, w)) nbrs.push_back(w);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.has_edge(nbrs[i], nbrs[j])) return false;
        return true;
    };
    for (int v = 0; v < g.n(); ++v) {
        const VertexSet& own = z0.contains(v) ? z0 : z1;
        const VertexSet& other = z0.contains(v) ? z1 : z0;
        (void)own;
        if (!cross_neighborhood_is_clique(v, other)) return BipmanResult::NotApplicable;
    }
    long long lhs = 2 * e_between(g, z0, z1);
    long long rhs = 2 * (e_within(g, z0) + e_within(g, z1)) + g.n();
    return lhs <= rhs ? BipmanResult::Holds : BipmanResult::Violated;
}

// Report of one exhaustive digon-scene enumeration (4096 cross configurations).
struct DigonSceneReport {
    long long caseA = 0;
    long long caseB = 0;
    long long violations = 0;
    long long survivors() const { return caseA + caseB + caseC + violations; }
    long long caseC = 0;  // used by the first scene only
};

namespace detail {

struct DigonScene {
    unsigned maskX;       // internal colors of X = {0,1}
    unsigned maskXp;      // internal colors of X' = {2,3}
    bool forbidDisjointK;  // filter (c): no two vertex-disjoint color-k cross edges
};

template <typename Classifier>
DigonSceneReport enumerate_digon_scene(const DigonScene& scene, Classifier classify) {
    DigonSceneReport report;
    // cross pairs (0,2),(0,3),(1,2),(1,3); disjoint pairs: {0}&{3}, {1}&{2}
    constexpr int kBitK = 2;  // color 3
    for (unsigned code = 0; code < 8 * 8 * 8 * 8; ++code) {
        std::array<unsigned, 4> cross{code & 7, code >> 3 & 7, code >> 6 & 7, code >> 9 & 7};
        bool skip = false;
        for (unsigned m : cross)
            if (m == 7) skip = true;  // filter (b): no pair in all three colors
        if (skip) continue;
        if (scene.forbidDisjointK) {
            if (((cross[0] >> kBitK) & (cross[3] >> kBitK) & 1) ||
                ((cross[1] >> kBitK) & (cross[2] >> kBitK) & 1))
                continue;
        }
        // filter (a): no rainbow triangle among the four vertices
        MaskSeq masks(6, 0);
        masks[pair_index(4, 0, 1)] = static_cast<std::uint8_t>(scene.maskX);
        masks[pair_index(4, 2, 3)] = static_cast<std::uint8_t>(scene.maskXp);
        masks[pair_index(4, 0, 2)] = static_cast<std::uint8_t>(cross[0]);
        masks[pair_index(4, 0, 3)] = static_cast<std::uint8_t>(cross[1]);
        masks[pair_index(4, 1, 2)] = static_cast<std::uint8_t>(cross[2]);
        masks[pair_index(4, 1, 3)] = static_cast<std::uint8_t>(cross[3]);
        if (count_rainbow_triangles(triple_from_masks(4, masks)) != 0) continue;

        std::array<int, 3> e{0, 0, 0};  // cross counts per color (i, j, k) = (1, 2, 3)
        for (unsigned m : cross)
            for (int c = 0; c < 3; ++c) e[c] += m >> c & 1;
        classify(e, report);
    }
    return report;
}

}  // namespace detail

// Scene: both digons carry colors {i,j}.  Survivors must satisfy
//   (a) e_k(X,X') = 0, or
//   (b) e_k(X,X') = 1 and e_i, e_j <= 2, or
//   (c) e_k(X,X') = 2 and e_i = e_j = 0.
inline DigonSceneReport enumerate_digon_case1() {
    detail::DigonScene scene{/*maskX=*/3, /*maskXp=*/3, /*forbidDisjointK=*/true};
    return detail::enumerate_digon_scene(scene, [](const std::array<int, 3>& e, DigonSceneReport& r) {
        if (e[2] == 0) ++r.caseA;
        else if (e[2] == 1 && e[0] <= 2 && e[1] <= 2) ++r.caseB;
        else if (e[2] == 2 && e[0] == 0 && e[1] == 0) ++r.caseC;
        else ++r.violations;
    });
}

// Scene: X carries colors {i,j}, X' carries {i,k}.  Survivors must satisfy
//   (a) e(X,X') <= 4, or
//   (b) e(X,X') = 5 with color signature (3,1,1) on (i,j,k).
inline DigonSceneReport enumerate_digon_case2() {
    detail::DigonScene scene{/*maskX=*/3, /*maskXp=*/5, /*forbidDisjointK=*/false};
    return detail::enumerate_digon_scene(scene, [](const std::array<int, 3>& e, DigonSceneReport& r) {
        int total = e[0] + e[1] + e[2];
        if (total <= 4) ++r.caseA;
        else if (total == 5 && e[0] == 3 && e[1] == 1 && e[2] == 1) ++r.caseB;
        else ++r.violations;
    });
}

// Subset-removal arithmetic: for 2 <= l <= n,
//   (1+tau^2)/2 n^2 + 3/2 n - l n + l^2/2  >=  (1+tau^2)/2 (n-l)^2 + 3/2 (n-l).
inline bool check_no3pm_arithmetic(long long n, long long l) {
    const long double t2 = static_cast<long double>(constants().tauSquared);
    const long double nn = static_cast<long double>(n);
    const long double ll = static_cast<long double>(l);
    long double lhs = (1 + t2) / 2 * nn * nn + 1.5L * nn - ll * nn + ll * ll / 2;
    long double rhs = (1 + t2) / 2 * (nn - ll) * (nn - ll) + 1.5L * (nn - ll);
    if (lhs + 1e-9L < rhs) return false;
    // equivalent closed-form slack
    long double slack = t2 * ll * (nn - ll / 2) + 1.5L * ll;
    return slack >= -1e-9L;
}

// Iterate all 2^C(n,2) graphs on n labeled vertices.
inline void for_each_graph(int n, const std::function<void(const SimpleGraph&)>& fn) {
    auto pairs = pair_list(n);
    const int P = static_cast<int>(pairs.size());
    if (P >= 63) throw std::invalid_argument("for_each_graph: too many pairs");
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << P); ++code) {
        GraphBuilder b(n);
        for (int p = 0; p < P; ++p)
            if (code >> p & 1) b.add_edge(pairs[p].first, pairs[p].second);
        fn(b.build());
    }
}

// Iterate all unordered bipartitions {Z0, Z1} of 0..n-1 (Z0 contains vertex 0).
inline void for_each_bipartition(int n, const std::function<void(const VertexSet&, const VertexSet&)>& fn) {
    if (n == 0) {
        fn(VertexSet(0), VertexSet(0));
        return;
    }
    for (std::uint32_t code = 0; code < (1u << (n - 1)); ++code) {
        VertexSet z0(n), z1(n);
        z0.insert(0);
        for (int v = 1; v < n; ++v) {
            if (code >> (v - 1) & 1) z0.insert(v);
            else z1.insert(v);
        }
        fn(z0, z1);
    }
}

struct LemmaResult {
    std::string name;
    long long checked = 0;
    long long failures = 0;
    bool passed() const { return failures == 0 && checked > 0; }
};

struct LemmaSuiteConfig {
    int countExhaustiveMax = 7;   // check_lemma_count on all graphs up to here
    int mantelExhaustiveMax = 6;  // check_mantel likewise
    int bipmanExhaustiveMax = 5;  // check_bipman over all graphs and partitions
    long long no3pmMaxN = 1000;
};

inline std::vector<LemmaResult> run_lemma_suite(const LemmaSuiteConfig& cfg = {}) {
    std::vector<LemmaResult> results;

    {
        LemmaResult r{.name = "counting lemma (|P| >= |E|-|M|)"};
        for (int n = 0; n <= cfg.countExhaustiveMax; ++n)
            for_each_graph(n, [&](const SimpleGraph& g) {
                ++r.checked;
                if (!check_lemma_count(g)) ++r.failures;
            });
        results.push_back(r);
    }
    {
        LemmaResult r{.name = "Mantel bound (|E| <= n^2/4 when triangle-free)"};
        for (int n = 0; n <= cfg.mantelExhaustiveMax; ++n)
            for_each_graph(n, [&](const SimpleGraph& g) {
                ++r.checked;
                if (!check_mantel(g)) ++r.failures;
            });
        results.push_back(r);
    }
    {
        LemmaResult r{.name = "bipartition inequality (clique cross-neighborhoods)"};
        for (int n = 0; n <= cfg.bipmanExhaustiveMax; ++n)
            for_each_graph(n, [&](const SimpleGraph& g) {
                for_each_bipartition(n, [&](const VertexSet& z0, const VertexSet& z1) {
                    ++r.checked;
                    if (check_bipman(g, z0, z1) == BipmanResult::Violated) ++r.failures;
                });
            });
        results.push_back(r);
    }
    {
        LemmaResult r{.name = "digon scene, matching internal colors"};
        auto rep = enumerate_digon_case1();
        r.checked = rep.survivors();
        r.failures = rep.violations;
        results.push_back(r);
    }
    {
        LemmaResult r{.name = "digon scene, mixed internal colors"};
        auto rep = enumerate_digon_case2();
        r.checked = rep.survivors();
        r.failures = rep.violations;
        results.push_back(r);
    }
    {
        LemmaResult r{.name = "subset-removal arithmetic chain"};
        for (long long n = 1; n <= cfg.no3pmMaxN; ++n)
            for (long long l = 1; l <= n; ++l) {
                ++r.checked;
                if (!check_no3pm_arithmetic(n, l)) ++r.failures;
            }
        results.push_back(r);
    }
    return results;
}

}  // namespace rainbow
