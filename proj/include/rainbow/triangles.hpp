#pragma once

// Rainbow-triangle detection and counting on graph triples.
//
// A rainbow triangle is an ordered triple (v1,v2,v3) of distinct vertices with
// v1v2 in E(G1), v2v3 in E(G2), v3v1 in E(G3).  Counts use the ordered
// convention throughout: it makes the k^3 blow-up law and the cyclic-shift law
// exact identities.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/bitgraph.hpp"

namespace rainbow {

struct RainbowWitness {
    int v1, v2, v3;
    bool operator==(const RainbowWitness&) const = default;
};

// Pair of vertices that is an edge in exactly two of the three colors.
struct Digon {
    int x, xp;          // x < xp
    unsigned colorMask;  // bits 0..2 for colors 1..3; popcount == 2
    bool operator==(const Digon&) const = default;
};

// Lexicographically first witness, or nullopt if the triple is rainbow-free.
inline std::optional<RainbowWitness> find_rainbow_triangle(const GraphTriple& t) {
    const SimpleGraph& g1 = t.graph(0);
    const SimpleGraph& g2 = t.graph(1);
    const SimpleGraph& g3 = t.graph(2);
    for (int v1 = 0; v1 < t.n(); ++v1) {
        auto r3 = g3.row(v1);
        for (int v2 = 0; v2 < t.n(); ++v2) {
            if (!g1.has_edge(v1, v2)) continue;
            auto r2 = g2.row(v2);
            for (std::size_t i = 0; i < r2.size(); ++i) {
                Word inter = r2[i] & r3[i];
                if (inter) {
                    int v3 = static_cast<int>(i) * kWordBits + std::countr_zero(inter);
                    return RainbowWitness{v1, v2, v3};
                }
            }
        }
    }
    return std::nullopt;
}

// Number of ordered rainbow triples.  Rows have no loop bits, so the
// intersection N2(v2) & N3(v1) can never contain v1 or v2.
inline std::uint64_t count_rainbow_triangles(const GraphTriple& t) {
    const SimpleGraph& g1 = t.graph(0);
    const SimpleGraph& g2 = t.graph(1);
    const SimpleGraph& g3 = t.graph(2);
    std::uint64_t total = 0;
    for (int v1 = 0; v1 < t.n(); ++v1) {
        auto r1 = g1.row(v1);
        auto r3 = g3.row(v1);
        for (std::size_t i = 0; i < r1.size(); ++i) {
            Word nbrs = r1[i];
            while (nbrs) {
                int v2 = static_cast<int>(i) * kWordBits + std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                auto r2 = g2.row(v2);
                for (std::size_t j = 0; j < r2.size(); ++j) total += std::popcount(r2[j] & r3[j]);
            }
        }
    }
    return total;
}

inline long long min_edge_count(const GraphTriple& t) {
    auto e = t.edge_counts();
    return std::min({e[0], e[1], e[2]});
}

inline std::vector<Digon> list_digons(const GraphTriple& t) {
    std::vector<Digon> digons;
    for (int u = 0; u < t.n(); ++u)
        for (int v = u + 1; v < t.n(); ++v) {
            unsigned mask = 0;
            for (int c = 0; c < 3; ++c)
                if (t.graph(c).has_edge(u, v)) mask |= 1u << c;
            if (std::popcount(mask) == 2) digons.push_back({u, v, mask});
        }
    return digons;
}

}  // namespace rainbow
