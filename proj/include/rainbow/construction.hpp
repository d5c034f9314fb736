#pragma once

// The extremal rainbow-free construction: partition V into {A,B,C} with
// |B| = |C| = blockSize.  G1 = clique(A) + clique(B), G2 = clique(A) + clique(C),
// G3 = everything except pairs inside A.  At blockSize ~ tau*n the minimum
// color density approaches (1+tau^2)/2, matching the theorem's threshold.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "rainbow/bitgraph.hpp"
#include "rainbow/triangles.hpp"

namespace rainbow {

struct Constants {
    double tau;
    double tauSquared;
    double threshold;  // (1 + tau^2) / 4
};

inline const Constants& constants() {
    static const Constants k = [] {
        Constants c;
        c.tau = (4.0 - std::sqrt(7.0)) / 9.0;
        c.tauSquared = c.tau * c.tau;
        c.threshold = (1.0 + c.tauSquared) / 4.0;
        return c;
    }();
    return k;
}

struct ConstructionParams {
    int n;
    int blockSize;  // |B| = |C|; |A| = n - 2*blockSize

    void validate() const {
        if (n <= 0 || blockSize <= 0 || 2 * blockSize >= n)
            throw std::invalid_argument("construction requires 0 < blockSize < n/2");
        if (n > kMaxVertices) throw std::invalid_argument("n exceeds vertex budget");
    }
};

inline GraphTriple build_construction(const ConstructionParams& p) {
    p.validate();
    const int aSize = p.n - 2 * p.blockSize;
    VertexSet A(p.n), B(p.n), C(p.n);
    for (int v = 0; v < aSize; ++v) A.insert(v);
    for (int v = aSize; v < aSize + p.blockSize; ++v) B.insert(v);
    for (int v = aSize + p.blockSize; v < p.n; ++v) C.insert(v);

    GraphBuilder b1(p.n), b2(p.n), b3(p.n);
    b1.add_clique(A).add_clique(B);
    b2.add_clique(A).add_clique(C);
    for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v)
            if (!(A.contains(u) && A.contains(v))) b3.add_edge(u, v);
    return GraphTriple(b1.build(), b2.build(), b3.build());
}

// Closed-form edge counts at real block fraction t:
//   |E(G1)| = |E(G2)| = (2-8t+10t^2)/4 n^2 - (1-t)/2 n
//   |E(G3)| = (8t-8t^2)/4 n^2 - t n
// Exact whenever t*n is integral.
inline std::pair<double, double> predicted_counts(int n, double t) {
    if (!(t > 0.0 && t < 0.5)) throw std::invalid_argument("block fraction must lie in (0, 1/2)");
    const double nn = static_cast<double>(n) * n;
    double e12 = (2.0 - 8.0 * t + 10.0 * t * t) / 4.0 * nn - (1.0 - t) / 2.0 * n;
    double e3 = (8.0 * t - 8.0 * t * t) / 4.0 * nn - t * n;
    return {e12, e3};
}

// True iff every color of the built triple exceeds n^2/4 edges.
inline bool beats_quarter(const ConstructionParams& p) {
    GraphTriple t = build_construction(p);
    return 4 * min_edge_count(t) > static_cast<long long>(p.n) * p.n;
}

// Round-half-up block size nearest to tau*n.
inline int near_tau_block(int n) {
    return static_cast<int>(std::floor(constants().tau * n + 0.5));
}

}  // namespace rainbow
