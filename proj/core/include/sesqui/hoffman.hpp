#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sesqui/graph.hpp"
#include "sesqui/spectral.hpp"

namespace sesqui {

enum class Label : int { Slim = 0, Fat = 1 };

/// A graph whose vertices are labelled slim or fat, such that
///  (i) fat vertices are pairwise non-adjacent, and
///  (ii) every fat vertex has at least one slim neighbour.
class HoffmanGraph {
public:
    /// Throws HoffmanConditionError naming the violated condition, or
    /// InputError if `labels` does not cover every vertex.
    HoffmanGraph(Graph underlying, std::vector<Label> labels);

    /// Convenience: fat vertices listed by index, all others slim.
    static HoffmanGraph with_fat(Graph underlying, std::span<const Vertex> fat);

    const Graph& underlying() const noexcept { return graph_; }
    std::span<const Label> labels() const noexcept { return labels_; }
    Label label(Vertex v) const noexcept { return labels_[v]; }
    bool is_fat(Vertex v) const noexcept { return labels_[v] == Label::Fat; }

    /// Ascending.
    const std::vector<Vertex>& slim_vertices() const noexcept { return slim_; }
    const std::vector<Vertex>& fat_vertices() const noexcept { return fat_; }

    /// Subgraph induced on the slim vertices, renumbered in ascending order.
    Graph slim_graph() const;
    /// Fat neighbours of a slim vertex (ascending).
    std::vector<Vertex> fat_neighbors(Vertex v) const;
    /// Slim neighbours of any vertex (ascending).
    std::vector<Vertex> slim_neighbors(Vertex v) const;

    friend bool operator==(const HoffmanGraph&, const HoffmanGraph&) = default;

private:
    Graph graph_;
    std::vector<Label> labels_;
    std::vector<Vertex> slim_;
    std::vector<Vertex> fat_;
};

/// S(h) = A_s - C C^T, indexed by slim vertices in ascending order:
/// off-diagonal = slim adjacency minus common fat neighbours, diagonal =
/// -(number of fat neighbours). Throws InputError with no slim vertex.
SymmetricMatrix special_matrix(const HoffmanGraph& h);

/// Smallest eigenvalue of the special matrix.
double lambda_min(const HoffmanGraph& h);

/// Induced Hoffman subgraph on `subset` (ascending renumbering, labels
/// kept). Throws HoffmanConditionError when a fat vertex is left without a
/// slim neighbour; nothing is repaired.
HoffmanGraph induced_hoffman(const HoffmanGraph& h, std::span<const Vertex> subset);

/// Induced Hoffman subgraph on `subset`, additionally dropping fat vertices
/// that lost all slim neighbours.
HoffmanGraph induced_hoffman_pruned(const HoffmanGraph& h, std::span<const Vertex> subset);

/// G(h, p): each fat vertex becomes a K_p joined to that fat vertex's
/// neighbours. Slim vertices come first in ascending order, then the p
/// vertices of each fat vertex in fat order. Throws InputError for p == 0.
Graph expand(const HoffmanGraph& h, std::size_t p);

/// The block of `expand(h, p)` that replaced the i-th fat vertex.
std::vector<Vertex> expansion_block(const HoffmanGraph& h, std::size_t p, std::size_t fat_index);

/// Named Hoffman families with closed-form smallest eigenvalues.
struct HoffmanCatalogEntry {
    std::string name;
    HoffmanGraph hoffman;
    double closed_form_lambda_min = 0.0;
};

namespace catalog {

/// q(H): one fat vertex joined to all of H; closed form -lambda_max(complement H).
HoffmanCatalogEntry q_of(const Graph& h);
/// h^(t): slim vertex 0 joined to fat vertices 1..t; closed form -t.
HoffmanCatalogEntry h_t(std::size_t t);
/// h^(t,1): slim s_t = 0 and s_1 = 1 adjacent; fat 2..t+1 on s_t, fat t+2 on s_1.
HoffmanCatalogEntry h_t1(std::size_t t);
/// c_n: K_{n+1} on 0..n, fat vertex n+1 joined to 0..n-1.
HoffmanCatalogEntry c_n(std::size_t n);

/// Dispatch by name ("q", "h_t", "h_t1", "c_n"); `graph` is used by "q" only.
HoffmanCatalogEntry by_name(std::string_view name, std::size_t parameter,
                            const Graph* graph = nullptr);

}  // namespace catalog

/// Smallest p with lambda_min(expand(h, p)) < -lambda (guarded), if any.
struct ExpansionOrder {
    std::optional<std::size_t> order;
    /// No p can ever succeed because lambda_min(h) >= -lambda - kMarginBand.
    bool permanent = false;
    /// Some scanned value fell within kMarginBand of -lambda.
    bool marginal = false;
    /// lambda_min(expand(h, p)) for p = 1..last scanned.
    std::vector<double> trace;
};

/// Linear scan p = 1..p_max. Throws InputError for p_max == 0 or > 10^4.
ExpansionOrder minimal_expansion_order(const HoffmanGraph& h, double lambda, std::size_t p_max);

/// graph6 of the underlying graph, newline, then "F:" and the fat indices.
std::string hoffman_serialize(const HoffmanGraph& h);
HoffmanGraph hoffman_parse(std::string_view text);
/// Reads successive graph6 / "F:" line pairs.
std::vector<HoffmanGraph> read_hoffman_stream(std::istream& in);

}  // namespace sesqui
