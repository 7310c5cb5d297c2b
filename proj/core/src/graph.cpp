#include "sesqui/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "sesqui/error.hpp"

namespace sesqui {

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

std::size_t VertexSet::count() const noexcept {
    std::size_t total = 0;
    for (const auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool VertexSet::empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t VertexSet::intersection_count(const VertexSet& other) const noexcept {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
        total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return total;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] |= other.words_[i];
    }
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= ~other.words_[i];
    }
    return *this;
}

VertexSet VertexSet::flipped() const {
    VertexSet out(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        out.words_[i] = ~words_[i];
    }
    if (const auto tail = universe_ % 64; tail != 0 && !out.words_.empty()) {
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
    return out;
}

std::vector<Vertex> VertexSet::elements() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Graph::Graph(std::vector<VertexSet> rows) : rows_(std::move(rows)), neighbors_(rows_.size()) {
    for (std::size_t v = 0; v < rows_.size(); ++v) {
        neighbors_[v] = rows_[v].elements();
        edge_count_ += neighbors_[v].size();
    }
    edge_count_ /= 2;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    std::vector<VertexSet> rows(n, VertexSet(n));
    for (const auto& [u, v] : edges) {
        const std::string pair = "{" + std::to_string(u) + "," + std::to_string(v) + "}";
        if (u >= n || v >= n) {
            throw InputError("edge " + pair + " has an endpoint outside 0.." +
                             std::to_string(n == 0 ? 0 : n - 1));
        }
        if (u == v) {
            throw InputError("edge " + pair + " is a self-loop");
        }
        rows[u].insert(v);
        rows[v].insert(u);
    }
    return Graph(std::move(rows));
}

Graph Graph::empty(std::size_t n) {
    return Graph(std::vector<VertexSet>(n, VertexSet(n)));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (const Vertex v : neighbors_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(order());
    for (Vertex v = 0; v < order(); ++v) {
        out[v] = degree(v);
    }
    return out;
}

Graph complement(const Graph& g) {
    const auto n = g.order();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
    std::vector<Vertex> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && keep.back() >= g.order()) {
        throw InputError("induced_subgraph: vertex " + std::to_string(keep.back()) +
                         " is out of range for a graph on " + std::to_string(g.order()) +
                         " vertices");
    }
    std::vector<Edge> edges;
    for (Vertex i = 0; i < keep.size(); ++i) {
        for (Vertex j = i + 1; j < keep.size(); ++j) {
            if (g.adjacent(keep[i], keep[j])) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edges(keep.size(), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges();
    const auto shift = static_cast<Vertex>(a.order());
    for (const auto& [u, v] : b.edges()) {
        edges.emplace_back(u + shift, v + shift);
    }
    return Graph::from_edges(a.order() + b.order(), edges);
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) {
        return true;
    }
    std::vector<char> seen(g.order(), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const Vertex u = frontier.front();
        frontier.pop();
        for (const Vertex w : g.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                frontier.push(w);
            }
        }
    }
    return reached == g.order();
}

bool is_clique(const Graph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] != vertices[j] && !g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_complete_multipartite(const Graph& g) {
    // Non-adjacency must be transitive: u!~v and v!~w imply u!~w (u != w).
    const Graph co = complement(g);
    for (Vertex v = 0; v < co.order(); ++v) {
        const auto nbrs = co.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (!co.adjacent(nbrs[i], nbrs[j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace sesqui
