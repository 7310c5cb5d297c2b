#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sesqui {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Fixed-width bit set over vertex indices, used for adjacency rows and
/// candidate sets in the combinatorial searches.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    std::size_t universe() const noexcept { return universe_; }
    bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t count() const noexcept;
    bool empty() const noexcept;
    std::size_t intersection_count(const VertexSet& other) const noexcept;

    VertexSet& operator&=(const VertexSet& other) noexcept;
    VertexSet& operator|=(const VertexSet& other) noexcept;
    VertexSet& subtract(const VertexSet& other) noexcept;
    /// Complement within the universe.
    VertexSet flipped() const;

    std::vector<Vertex> elements() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word != 0) {
                const int bit = __builtin_ctzll(word);
                f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
                word &= word - 1;
            }
        }
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Finite simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    /// The graph on zero vertices.
    Graph() = default;

    /// Throws InputError naming the offending pair for an out-of-range
    /// endpoint or a self-loop. Duplicate edges collapse.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }
    static Graph empty(std::size_t n);

    std::size_t order() const noexcept { return rows_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
    std::size_t degree(Vertex v) const noexcept { return neighbors_[v].size(); }
    /// Sorted ascending.
    std::span<const Vertex> neighbors(Vertex v) const noexcept { return neighbors_[v]; }
    const VertexSet& row(Vertex v) const noexcept { return rows_[v]; }
    std::size_t common_neighbors(Vertex u, Vertex v) const noexcept {
        return rows_[u].intersection_count(rows_[v]);
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    std::vector<std::size_t> degrees() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
    explicit Graph(std::vector<VertexSet> rows);

    std::vector<VertexSet> rows_;
    std::vector<std::vector<Vertex>> neighbors_;
    std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);

/// Subgraph induced on `subset`, vertices renumbered in ascending original
/// order. Duplicates in `subset` are ignored.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// Vertex-disjoint union; vertices of `b` follow those of `a`.
Graph disjoint_union(const Graph& a, const Graph& b);

bool is_connected(const Graph& g);

/// True iff the listed vertices are pairwise adjacent.
bool is_clique(const Graph& g, std::span<const Vertex> vertices);

/// The complement is a disjoint union of cliques.
bool is_complete_multipartite(const Graph& g);

}  // namespace sesqui
