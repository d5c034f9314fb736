#pragma once

// Search for the rainbow-extremal function
//   R(n) = max { min_i |E(G_i)| : triples on n vertices with no rainbow triangle }.
//
// The state space is one color mask in {0..7} per vertex pair, in lexicographic
// pair order (0,1),(0,2),...,(n-2,n-1).  Triple-color masks are allowed: the
// search must not assume structure the theorem does not grant it.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rainbow/bitgraph.hpp"
#include "rainbow/triangles.hpp"
#include "rainbow/construction.hpp"

namespace rainbow {

using MaskSeq = std::vector<std::uint8_t>;

inline std::vector<std::pair<int, int>> pair_list(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline int pair_index(int n, int u, int v) {
    // index of (u,v), u < v, in pair_list(n)
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

inline GraphTriple triple_from_masks(int n, const MaskSeq& masks) {
    GraphBuilder b1(n), b2(n), b3(n);
    auto pairs = pair_list(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [u, v] = pairs[p];
        if (masks[p] & 1) b1.add_edge(u, v);
        if (masks[p] & 2) b2.add_edge(u, v);
        if (masks[p] & 4) b3.add_edge(u, v);
    }
    return GraphTriple(b1.build(), b2.build(), b3.build());
}

inline MaskSeq masks_from_triple(const GraphTriple& t) {
    auto pairs = pair_list(t.n());
    MaskSeq masks(pairs.size(), 0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [u, v] = pairs[p];
        for (int c = 0; c < 3; ++c)
            if (t.graph(c).has_edge(u, v)) masks[p] |= std::uint8_t(1) << c;
    }
    return masks;
}

namespace detail {

// Does the triangle with edge masks (mxy, myz, mzx) admit a rainbow orientation?
// Checks all six vertex orderings of {x,y,z}.
inline bool triangle_has_rainbow(unsigned mxy, unsigned myz, unsigned mzx) {
    // ordering (v1,v2,v3): need color1 on v1v2, color2 on v2v3, color3 on v3v1
    auto rb = [](unsigned e12, unsigned e23, unsigned e31) {
        return (e12 & 1) && (e23 & 2) && (e31 & 4);
    };
    return rb(mxy, myz, mzx) || rb(myz, mzx, mxy) || rb(mzx, mxy, myz) ||
           rb(myz, mxy, mzx) || rb(mxy, mzx, myz) || rb(mzx, myz, mxy);
}

struct TriangleEntry {
    int pa, pb;  // the other two pair indices, both smaller than the completing index
};

// completions[p] = triangles whose lexicographically last pair index is p.
inline std::vector<std::vector<TriangleEntry>> triangle_completions(int n) {
    std::vector<std::vector<TriangleEntry>> completions(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z) {
                int pxy = pair_index(n, x, y);
                int pxz = pair_index(n, x, z);
                int pyz = pair_index(n, y, z);
                int last = std::max({pxy, pxz, pyz});
                TriangleEntry e;
                if (last == pyz) e = {pxy, pxz};
                else if (last == pxz) e = {pxy, pyz};
                else e = {pxz, pyz};
                completions[last].push_back(e);
            }
    return completions;
}

// Rainbow orientation of a triangle is invariant under listing order of its
// two prior edges, provided we test all six orderings with consistent pair
// endpoints; with masks on unordered pairs the symmetric test above applies.
inline bool completes_rainbow(const std::vector<TriangleEntry>& entries, const MaskSeq& masks,
                              unsigned newMask) {
    for (const auto& e : entries)
        if (triangle_has_rainbow(masks[e.pa], masks[e.pb], newMask)) return true;
    return false;
}

inline long long min_color_count(const std::array<long long, 3>& c) {
    return std::min({c[0], c[1], c[2]});
}

// Identical complete bipartite triple: floor(n^2/4) edges per color, rainbow-free.
inline MaskSeq bipartite_masks(int n) {
    auto pairs = pair_list(n);
    MaskSeq masks(pairs.size(), 0);
    int half = n / 2;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [u, v] = pairs[p];
        if ((u < half) != (v < half)) masks[p] = 7;
    }
    return masks;
}

}  // namespace detail

struct SearchOutcome {
    int n;
    long long value;
    bool exact;
    MaskSeq masks;
    GraphTriple witness;
    std::uint64_t nodesVisited;
    double wallTime;  // seconds
};

namespace detail {

inline SearchOutcome make_outcome(int n, long long value, bool exact, MaskSeq masks,
                                  std::uint64_t nodes, double seconds) {
    GraphTriple witness = triple_from_masks(n, masks);
    // independent re-check before reporting
    if (count_rainbow_triangles(witness) != 0)
        throw std::logic_error("search produced a witness with a rainbow triangle");
    if (min_edge_count(witness) != value)
        throw std::logic_error("search value does not match its witness");
    return SearchOutcome{n, value, exact, std::move(masks), std::move(witness), nodes, seconds};
}

}  // namespace detail

// Raw enumeration of all 8^C(n,2) mask assignments.  Desk scale only.
inline SearchOutcome exhaustive_R(int n) {
    if (n < 2 || n > 4)
        throw std::invalid_argument(
            "exhaustive_R handles 2 <= n <= 4 only; use branch_and_bound_R for larger n");
    auto start = std::chrono::steady_clock::now();
    auto pairs = pair_list(n);
    auto completions = detail::triangle_completions(n);
    const int P = static_cast<int>(pairs.size());

    MaskSeq masks(P, 0);
    long long best = -1;
    MaskSeq bestMasks;
    std::uint64_t nodes = 0;

    // odometer with index P-1 least significant: ascending lexicographic order
    bool done = false;
    while (!done) {
        ++nodes;
        bool rb = false;
        for (int p = 0; p < P && !rb; ++p)
            rb = detail::completes_rainbow(completions[p], masks, masks[p]);
        if (!rb) {
            std::array<long long, 3> cnt{0, 0, 0};
            for (int p = 0; p < P; ++p)
                for (int c = 0; c < 3; ++c) cnt[c] += masks[p] >> c & 1;
            long long value = detail::min_color_count(cnt);
            if (value > best) {
                best = value;
                bestMasks = masks;
            }
        }
        int i = P - 1;
        while (i >= 0 && masks[i] == 7) masks[i--] = 0;
        if (i < 0) done = true;
        else ++masks[i];
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return detail::make_outcome(n, best, /*exact=*/true, std::move(bestMasks), nodes, secs);
}

struct BnbOptions {
    std::uint64_t budget = 1'000'000'000;
    int threads = 1;
};

// Depth-first branch and bound over pair masks in lexicographic order.
//
// Pruning: (1) min color count + undecided pairs < incumbent;
//          (2) a rainbow triangle already forced among decided pairs;
//          (3) partial canonicity: every mask <= mask of pair (0,1)
//              (any assignment can be relabeled to move its largest pair
//               mask onto (0,1), so the optimum value is preserved).
// Equal-value branches are never pruned, which makes the reported value and
// lexicographically-least witness independent of thread scheduling.
inline SearchOutcome branch_and_bound_R(int n, const BnbOptions& opts = {}) {
    if (n < 2) throw std::invalid_argument("branch_and_bound_R requires n >= 2");
    auto start = std::chrono::steady_clock::now();
    auto pairs = pair_list(n);
    auto completions = detail::triangle_completions(n);
    const int P = static_cast<int>(pairs.size());

    // warm start: identical complete bipartite triple, floor(n^2/4) per color
    MaskSeq warm = detail::bipartite_masks(n);
    const long long warmValue = static_cast<long long>(n / 2) * ((n + 1) / 2);

    std::atomic<long long> best{warmValue};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> exhausted{false};

    struct TaskResult {
        long long value = -1;
        MaskSeq masks;
    };

    struct Task {
        std::uint8_t m0, m1;  // m1 unused when P == 1
    };
    std::vector<Task> tasks;
    if (P == 1) {
        for (int m0 = 0; m0 < 8; ++m0) tasks.push_back({static_cast<std::uint8_t>(m0), 0});
    } else {
        for (int m0 = 0; m0 < 8; ++m0)
            for (int m1 = 0; m1 <= m0; ++m1)
                tasks.push_back({static_cast<std::uint8_t>(m0), static_cast<std::uint8_t>(m1)});
    }
    std::vector<TaskResult> results(tasks.size());

    auto run_task = [&](const Task& task, TaskResult& out) {
        MaskSeq masks(P, 0);
        std::array<long long, 3> cnt{0, 0, 0};
        std::uint64_t localNodes = 0;

        std::function<void(int)> dfs = [&](int depth) {
            if (exhausted.load(std::memory_order_relaxed)) return;
            if (depth == P) {
                long long value = detail::min_color_count(cnt);
                long long cur = best.load(std::memory_order_relaxed);
                while (value > cur && !best.compare_exchange_weak(cur, value)) {
                }
                if (value > out.value) {  // first hit in DFS order is lex-least
                    out.value = value;
                    out.masks = masks;
                }
                return;
            }
            long long ub = detail::min_color_count(cnt) + (P - depth);
            if (ub < best.load(std::memory_order_relaxed)) return;
            const std::uint8_t maxMask = (depth == 0) ? 7 : masks[0];
            for (std::uint8_t m = 0; m <= maxMask; ++m) {
                if (++localNodes >= 256) {
                    if (nodes.fetch_add(localNodes) + localNodes > opts.budget)
                        exhausted.store(true, std::memory_order_relaxed);
                    localNodes = 0;
                }
                if (detail::completes_rainbow(completions[depth], masks, m)) continue;
                masks[depth] = m;
                for (int c = 0; c < 3; ++c) cnt[c] += m >> c & 1;
                dfs(depth + 1);
                for (int c = 0; c < 3; ++c) cnt[c] -= m >> c & 1;
                masks[depth] = 0;
            }
        };

        // enter at fixed prefix (m0[, m1])
        const int prefix = (P == 1) ? 1 : 2;
        std::uint8_t prefixMasks[2] = {task.m0, task.m1};
        bool viable = true;
        for (int d = 0; d < prefix && viable; ++d) {
            if (detail::completes_rainbow(completions[d], masks, prefixMasks[d])) viable = false;
            masks[d] = prefixMasks[d];
            for (int c = 0; c < 3; ++c) cnt[c] += prefixMasks[d] >> c & 1;
        }
        if (viable) dfs(prefix);
        if (nodes.fetch_add(localNodes) + localNodes > opts.budget)
            exhausted.store(true, std::memory_order_relaxed);
    };

    const int workers = std::max(1, opts.threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            run_task(tasks[i], results[i]);
        }
    };
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // deterministic merge: best value, then lexicographically least masks
    long long bestValue = warmValue;
    MaskSeq bestMasks = warm;
    for (const auto& r : results) {
        if (r.value > bestValue || (r.value == bestValue && !r.masks.empty() && r.masks < bestMasks)) {
            bestValue = r.value;
            bestMasks = r.masks;
        }
    }
    bool exact = !exhausted.load();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return detail::make_outcome(n, bestValue, exact, std::move(bestMasks), nodes.load(), secs);
}

enum class LocalInit { Bipartite, Construction };

// Seeded hill climbing over single pair-color flips, keeping the triple
// rainbow-free and never letting the minimum color count drop.
inline SearchOutcome local_search_R(int n, std::uint64_t seed, std::uint64_t iterations,
                                    LocalInit init = LocalInit::Bipartite, int block = 0) {
    if (n < 2) throw std::invalid_argument("local_search_R requires n >= 2");
    auto start = std::chrono::steady_clock::now();
    auto pairs = pair_list(n);
    const int P = static_cast<int>(pairs.size());

    MaskSeq masks;
    if (init == LocalInit::Bipartite) {
        masks = detail::bipartite_masks(n);
    } else {
        int b = block > 0 ? block : near_tau_block(n);
        masks = masks_from_triple(build_construction({n, b}));
    }

    std::array<long long, 3> cnt{0, 0, 0};
    for (int p = 0; p < P; ++p)
        for (int c = 0; c < 3; ++c) cnt[c] += masks[p] >> c & 1;

    // rainbow test restricted to triangles through pair (u,v)
    auto flip_makes_rainbow = [&](int p, unsigned newMask) {
        auto [u, v] = pairs[p];
        for (int w = 0; w < n; ++w) {
            if (w == u || w == v) continue;
            unsigned muw = masks[pair_index(n, std::min(u, w), std::max(u, w))];
            unsigned mvw = masks[pair_index(n, std::min(v, w), std::max(v, w))];
            if (detail::triangle_has_rainbow(newMask, mvw, muw)) return true;
        }
        return false;
    };

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pickPair(0, P - 1);
    std::uniform_int_distribution<int> pickColor(0, 2);
    long long curMin = detail::min_color_count(cnt);
    for (std::uint64_t it = 0; it < iterations; ++it) {
        int p = pickPair(rng);
        int c = pickColor(rng);
        unsigned newMask = masks[p] ^ (1u << c);
        bool adding = (newMask >> c) & 1;
        if (adding && flip_makes_rainbow(p, newMask)) continue;
        long long delta = adding ? 1 : -1;
        cnt[c] += delta;
        if (detail::min_color_count(cnt) >= curMin) {
            masks[p] = static_cast<std::uint8_t>(newMask);
            curMin = detail::min_color_count(cnt);
        } else {
            cnt[c] -= delta;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return detail::make_outcome(n, curMin, /*exact=*/false, std::move(masks), iterations, secs);
}

}  // namespace rainbow
