#pragma once

// Bit-row graph representation: adjacency of vertex v is a fixed-width row of
// 64-bit words, so subset edge counts and triangle tests reduce to AND+popcount.

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbow {

using Word = std::uint64_t;
inline constexpr int kWordBits = 64;

// Hard cap on the vertex count (word budget W = kMaxVertices/64).
inline constexpr int kMaxVertices = 4096;

inline int word_count(int n) { return (n + kWordBits - 1) / kWordBits; }

namespace detail {

inline void check_vertex_count(int n) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

inline int popcount_rows(std::span<const Word> words) {
    int total = 0;
    for (Word w : words) total += std::popcount(w);
    return total;
}

}  // namespace detail

// Subset of the vertices 0..n-1 of some graph, as a bit vector.
class VertexSet {
public:
    explicit VertexSet(int n) : n_(n), bits_(word_count(n), 0) {
        detail::check_vertex_count(n);
    }

    VertexSet(int n, std::initializer_list<int> vs) : VertexSet(n) {
        for (int v : vs) insert(v);
    }

    static VertexSet full(int n) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    int universe() const { return n_; }

    void insert(int v) {
        check(v);
        bits_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(int v) {
        check(v);
        bits_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }
    bool contains(int v) const {
        return v >= 0 && v < n_ && (bits_[v / kWordBits] >> (v % kWordBits) & 1);
    }

    int count() const { return detail::popcount_rows(bits_); }

    VertexSet complement() const {
        VertexSet s(n_);
        for (std::size_t i = 0; i < bits_.size(); ++i) s.bits_[i] = ~bits_[i];
        s.trim();
        return s;
    }

    bool intersects(const VertexSet& other) const {
        for (std::size_t i = 0; i < bits_.size() && i < other.bits_.size(); ++i)
            if (bits_[i] & other.bits_[i]) return true;
        return false;
    }

    std::span<const Word> words() const { return bits_; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(n_));
    }
    void trim() {
        int excess = static_cast<int>(bits_.size()) * kWordBits - n_;
        if (excess > 0 && !bits_.empty()) bits_.back() &= ~Word{0} >> excess;
    }

    int n_;
    std::vector<Word> bits_;
};

class GraphBuilder;

// Immutable undirected loopless graph on vertices 0..n-1.  Built once via
// GraphBuilder, then safely shareable across threads.
class SimpleGraph {
public:
    int n() const { return n_; }
    int words_per_row() const { return words_; }
    long long edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
        return row(u)[v / kWordBits] >> (v % kWordBits) & 1;
    }

    std::span<const Word> row(int v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    int degree(int v) const { return detail::popcount_rows(row(v)); }

private:
    friend class GraphBuilder;
    SimpleGraph(int n, std::vector<Word> adj, long long edges)
        : n_(n), words_(word_count(n)), adj_(std::move(adj)), edge_count_(edges) {}

    int n_;
    int words_;
    std::vector<Word> adj_;
    long long edge_count_;
};

// Single-owner mutable construction stage for SimpleGraph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : n_(n), words_(word_count(n)), adj_(static_cast<std::size_t>(n) * words_, 0) {
        detail::check_vertex_count(n);
    }

    int n() const { return n_; }

    // Idempotent; rejects loops and out-of-range endpoints.
    GraphBuilder& add_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::out_of_range("edge endpoint outside 0.." + std::to_string(n_ - 1));
        if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") rejected");
        set_bit(u, v);
        set_bit(v, u);
        return *this;
    }

    GraphBuilder& remove_edge(int u, int v) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v)
            throw std::invalid_argument("bad edge");
        clear_bit(u, v);
        clear_bit(v, u);
        return *this;
    }

    bool has_edge(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
        return adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits) & 1;
    }

    GraphBuilder& add_clique(const VertexSet& xs) {
        std::vector<int> vs;
        for (int v = 0; v < n_; ++v)
            if (xs.contains(v)) vs.push_back(v);
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) add_edge(vs[i], vs[j]);
        return *this;
    }

    SimpleGraph build() const {
        long long bits = 0;
        for (Word w : adj_) bits += std::popcount(w);
        return SimpleGraph(n_, adj_, bits / 2);
    }

private:
    void set_bit(int u, int v) {
        adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void clear_bit(int u, int v) {
        adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    int n_;
    int words_;
    std::vector<Word> adj_;
};

inline SimpleGraph empty_graph(int n) { return GraphBuilder(n).build(); }

// Convenience form of the edge-insertion operation: value-in, value-out.
inline SimpleGraph add_edge(const SimpleGraph& g, int u, int v) {
    GraphBuilder b(g.n());
    for (int x = 0; x < g.n(); ++x)
        for (int y = x + 1; y < g.n(); ++y)
            if (g.has_edge(x, y)) b.add_edge(x, y);
    b.add_edge(u, v);
    return b.build();
}

// |E(G[X])|: edges with both endpoints in X.
inline long long e_within(const SimpleGraph& g, const VertexSet& xs) {
    if (xs.universe() != g.n()) throw std::invalid_argument("vertex set universe mismatch");
    long long twice = 0;
    auto xw = xs.words();
    for (int v = 0; v < g.n(); ++v) {
        if (!xs.contains(v)) continue;
        auto rv = g.row(v);
        for (std::size_t i = 0; i < xw.size(); ++i) twice += std::popcount(rv[i] & xw[i]);
    }
    return twice / 2;
}

// |{xy in E(G) : x in X, y in Y}| for disjoint X, Y.
inline long long e_between(const SimpleGraph& g, const VertexSet& xs, const VertexSet& ys) {
    if (xs.universe() != g.n() || ys.universe() != g.n())
        throw std::invalid_argument("vertex set universe mismatch");
    if (xs.intersects(ys)) throw std::invalid_argument("e_between requires disjoint sets");
    long long total = 0;
    auto yw = ys.words();
    for (int v = 0; v < g.n(); ++v) {
        if (!xs.contains(v)) continue;
        auto rv = g.row(v);
        for (std::size_t i = 0; i < yw.size(); ++i) total += std::popcount(rv[i] & yw[i]);
    }
    return total;
}

// Greedy maximal matching, scanning pairs in lexicographic order.
inline std::vector<std::pair<int, int>> greedy_maximal_matching(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> matching;
    std::vector<char> used(g.n(), 0);
    for (int u = 0; u < g.n(); ++u) {
        if (used[u]) continue;
        for (int v = u + 1; v < g.n(); ++v) {
            if (!used[v] && g.has_edge(u, v)) {
                matching.emplace_back(u, v);
                used[u] = used[v] = 1;
                break;
            }
        }
    }
    return matching;
}

// |P|: unordered pairs {x,y} of distinct vertices with a common neighbour.
inline long long common_neighbor_pairs(const SimpleGraph& g) {
    long long count = 0;
    for (int x = 0; x < g.n(); ++x) {
        auto rx = g.row(x);
        for (int y = x + 1; y < g.n(); ++y) {
            auto ry = g.row(y);
            for (std::size_t i = 0; i < rx.size(); ++i) {
                if (rx[i] & ry[i]) {
                    ++count;
                    break;
                }
            }
        }
    }
    return count;
}

// Three simple graphs on a common vertex set; the universe of the rainbow problem.
class GraphTriple {
public:
    GraphTriple(SimpleGraph g1, SimpleGraph g2, SimpleGraph g3)
        : graphs_{std::move(g1), std::move(g2), std::move(g3)} {
        if (graphs_[0].n() != graphs_[1].n() || graphs_[0].n() != graphs_[2].n())
            throw std::invalid_argument("graph triple members must share the vertex set");
    }

    int n() const { return graphs_[0].n(); }
    const SimpleGraph& graph(int color) const { return graphs_.at(color); }  // color in 0..2

    std::array<long long, 3> edge_counts() const {
        return {graphs_[0].edge_count(), graphs_[1].edge_count(), graphs_[2].edge_count()};
    }

private:
    std::array<SimpleGraph, 3> graphs_;
};

inline GraphTriple empty_triple(int n) {
    return GraphTriple(empty_graph(n), empty_graph(n), empty_graph(n));
}

// Replace every vertex by k clones; every edge by the complete bipartite
// pattern between clone sets.  Edge counts scale exactly by k^2.
inline GraphTriple blow_up(const GraphTriple& t, int k) {
    if (k < 1) throw std::invalid_argument("blow_up requires k >= 1");
    long long nn = static_cast<long long>(t.n()) * k;
    if (nn > kMaxVertices)
        throw std::invalid_argument("blow_up exceeds vertex budget of " + std::to_string(kMaxVertices));
    int m = static_cast<int>(nn);
    std::array<GraphBuilder, 3> builders{GraphBuilder(m), GraphBuilder(m), GraphBuilder(m)};
    for (int c = 0; c < 3; ++c) {
        const SimpleGraph& g = t.graph(c);
        for (int u = 0; u < t.n(); ++u)
            for (int v = u + 1; v < t.n(); ++v) {
                if (!g.has_edge(u, v)) continue;
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) builders[c].add_edge(u * k + i, v * k + j);
            }
    }
    return GraphTriple(builders[0].build(), builders[1].build(), builders[2].build());
}

}  // namespace rainbow
