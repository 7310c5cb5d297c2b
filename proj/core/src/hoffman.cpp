#include "sesqui/hoffman.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <sstream>

#include "sesqui/error.hpp"
#include "sesqui/families.hpp"
#include "sesqui/graph6.hpp"

namespace sesqui {

HoffmanGraph::HoffmanGraph(Graph underlying, std::vector<Label> labels)
    : graph_(std::move(underlying)), labels_(std::move(labels)) {
    if (labels_.size() != graph_.order()) {
        throw InputError("HoffmanGraph: " + std::to_string(labels_.size()) + " labels for " +
                         std::to_string(graph_.order()) + " vertices");
    }
    for (Vertex v = 0; v < graph_.order(); ++v) {
        (is_fat(v) ? fat_ : slim_).push_back(v);
    }
    for (const Vertex f : fat_) {
        bool has_slim = false;
        for (const Vertex w : graph_.neighbors(f)) {
            if (is_fat(w)) {
                throw HoffmanConditionError("condition (i) violated: fat vertices " +
                                                std::to_string(f) + " and " + std::to_string(w) +
                                                " are adjacent",
                                            1);
            }
            has_slim = true;
        }
        if (!has_slim) {
            throw HoffmanConditionError(
                "condition (ii) violated: fat vertex " + std::to_string(f) + " has no slim neighbour", 2);
        }
    }
}

HoffmanGraph HoffmanGraph::with_fat(Graph underlying, std::span<const Vertex> fat) {
    std::vector<Label> labels(underlying.order(), Label::Slim);
    for (const Vertex f : fat) {
        if (f >= labels.size()) {
            throw InputError("HoffmanGraph: fat vertex " + std::to_string(f) + " out of range");
        }
        labels[f] = Label::Fat;
    }
    return HoffmanGraph(std::move(underlying), std::move(labels));
}

Graph HoffmanGraph::slim_graph() const { return induced_subgraph(graph_, slim_); }

std::vector<Vertex> HoffmanGraph::fat_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Vertex w : graph_.neighbors(v)) {
        if (is_fat(w)) out.push_back(w);
    }
    return out;
}

std::vector<Vertex> HoffmanGraph::slim_neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (const Vertex w : graph_.neighbors(v)) {
        if (!is_fat(w)) out.push_back(w);
    }
    return out;
}

SymmetricMatrix special_matrix(const HoffmanGraph& h) {
    const auto& slim = h.slim_vertices();
    if (slim.empty()) {
        throw InputError("special_matrix: Hoffman graph has no slim vertex");
    }
    const auto& g = h.underlying();
    VertexSet fat_set(g.order());
    for (const Vertex f : h.fat_vertices()) {
        fat_set.insert(f);
    }
    std::vector<VertexSet> fat_rows;
    fat_rows.reserve(slim.size());
    for (const Vertex s : slim) {
        VertexSet row = g.row(s);
        row &= fat_set;
        fat_rows.push_back(std::move(row));
    }
    SymmetricMatrix m(slim.size());
    for (std::size_t i = 0; i < slim.size(); ++i) {
        m.set(i, i, -static_cast<double>(fat_rows[i].count()));
        for (std::size_t j = i + 1; j < slim.size(); ++j) {
            const double a = g.adjacent(slim[i], slim[j]) ? 1.0 : 0.0;
            m.set(i, j, a - static_cast<double>(fat_rows[i].intersection_count(fat_rows[j])));
        }
    }
    return m;
}

double lambda_min(const HoffmanGraph& h) { return eigenvalues(special_matrix(h)).min(); }

namespace {

std::vector<Vertex> normalised(std::span<const Vertex> subset, std::size_t order) {
    std::vector<Vertex> keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && keep.back() >= order) {
        throw InputError("induced_hoffman: vertex " + std::to_string(keep.back()) + " out of range");
    }
    return keep;
}

HoffmanGraph restrict_to(const HoffmanGraph& h, const std::vector<Vertex>& keep) {
    std::vector<Label> labels;
    labels.reserve(keep.size());
    for (const Vertex v : keep) {
        labels.push_back(h.label(v));
    }
    return HoffmanGraph(induced_subgraph(h.underlying(), keep), std::move(labels));
}

}  // namespace

HoffmanGraph induced_hoffman(const HoffmanGraph& h, std::span<const Vertex> subset) {
    return restrict_to(h, normalised(subset, h.underlying().order()));
}

HoffmanGraph induced_hoffman_pruned(const HoffmanGraph& h, std::span<const Vertex> subset) {
    auto keep = normalised(subset, h.underlying().order());
    std::erase_if(keep, [&](Vertex v) {
        if (!h.is_fat(v)) return false;
        return std::none_of(keep.begin(), keep.end(), [&](Vertex w) {
            return !h.is_fat(w) && h.underlying().adjacent(v, w);
        });
    });
    return restrict_to(h, keep);
}

Graph expand(const HoffmanGraph& h, std::size_t p) {
    if (p == 0) {
        throw InputError("expand: p must be positive");
    }
    const auto& g = h.underlying();
    const auto& slim = h.slim_vertices();
    const auto& fat = h.fat_vertices();
    std::vector<Vertex> slim_index(g.order(), 0);
    for (Vertex i = 0; i < slim.size(); ++i) {
        slim_index[slim[i]] = i;
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        if (!h.is_fat(u) && !h.is_fat(v)) {
            edges.emplace_back(slim_index[u], slim_index[v]);
        }
    }
    for (std::size_t f = 0; f < fat.size(); ++f) {
        const auto block = static_cast<Vertex>(slim.size() + f * p);
        for (Vertex a = 0; a < p; ++a) {
            for (Vertex b = a + 1; b < p; ++b) {
                edges.emplace_back(block + a, block + b);
            }
            for (const Vertex s : g.neighbors(fat[f])) {
                edges.emplace_back(slim_index[s], block + a);
            }
        }
    }
    return Graph::from_edges(slim.size() + p * fat.size(), edges);
}

std::vector<Vertex> expansion_block(const HoffmanGraph& h, std::size_t p, std::size_t fat_index) {
    if (fat_index >= h.fat_vertices().size()) {
        throw InputError("expansion_block: fat index out of range");
    }
    std::vector<Vertex> out(p);
    const auto start = static_cast<Vertex>(h.slim_vertices().size() + fat_index * p);
    for (Vertex i = 0; i < p; ++i) {
        out[i] = start + i;
    }
    return out;
}

namespace catalog {

HoffmanCatalogEntry q_of(const Graph& h) {
    const auto n = h.order();
    if (n == 0) {
        throw InputError("q(H): H must have at least one vertex");
    }
    auto edges = h.edges();
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>(n));
    }
    const Vertex fat[] = {static_cast<Vertex>(n)};
    // S(q(H)) = A_H - J = -(I + A(complement H)).
    return {"q", HoffmanGraph::with_fat(Graph::from_edges(n + 1, edges), fat),
            -1.0 - lambda_max(complement(h))};
}

HoffmanCatalogEntry h_t(std::size_t t) {
    if (t == 0) {
        throw InputError("h_t: t must be positive");
    }
    std::vector<Edge> edges;
    std::vector<Vertex> fat;
    for (Vertex f = 1; f <= t; ++f) {
        edges.emplace_back(0, f);
        fat.push_back(f);
    }
    return {"h_t", HoffmanGraph::with_fat(Graph::from_edges(t + 1, edges), fat),
            -static_cast<double>(t)};
}

HoffmanCatalogEntry h_t1(std::size_t t) {
    if (t == 0) {
        throw InputError("h_t1: t must be positive");
    }
    std::vector<Edge> edges{{0, 1}};
    std::vector<Vertex> fat;
    for (Vertex f = 2; f <= t + 1; ++f) {
        edges.emplace_back(0, f);
        fat.push_back(f);
    }
    const auto lone = static_cast<Vertex>(t + 2);
    edges.emplace_back(1, lone);
    fat.push_back(lone);
    const double td = static_cast<double>(t);
    return {"h_t1", HoffmanGraph::with_fat(Graph::from_edges(t + 3, edges), fat),
            (-td - 1.0 - std::sqrt(td * td - 2.0 * td + 5.0)) / 2.0};
}

HoffmanCatalogEntry c_n(std::size_t n) {
    if (n == 0) {
        throw InputError("c_n: n must be positive");
    }
    auto edges = families::complete(n + 1).edges();
    const auto fat = static_cast<Vertex>(n + 1);
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, fat);
    }
    const Vertex fats[] = {fat};
    return {"c_n", HoffmanGraph::with_fat(Graph::from_edges(n + 2, edges), fats),
            (-1.0 - std::sqrt(1.0 + 4.0 * static_cast<double>(n))) / 2.0};
}

HoffmanCatalogEntry by_name(std::string_view name, std::size_t parameter, const Graph* graph) {
    if (name == "h_t") return h_t(parameter);
    if (name == "h_t1") return h_t1(parameter);
    if (name == "c_n") return c_n(parameter);
    if (name == "q") {
        if (graph == nullptr) {
            throw InputError("catalog q requires a graph H");
        }
        return q_of(*graph);
    }
    throw InputError("unknown Hoffman catalog family '" + std::string(name) + "'");
}

}  // namespace catalog

ExpansionOrder minimal_expansion_order(const HoffmanGraph& h, double lambda, std::size_t p_max) {
    if (p_max == 0 || p_max > 10000) {
        throw InputError("minimal_expansion_order: p_max must be in 1..10000");
    }
    ExpansionOrder out;
    const double threshold = -lambda;
    const double limit = lambda_min(h);
    if (limit >= threshold - kMarginBand) {
        // lambda_min(G(h,p)) >= lambda_min(h) for all p.
        out.permanent = true;
        out.marginal = std::abs(limit - threshold) <= kMarginBand;
        return out;
    }
    for (std::size_t p = 1; p <= p_max; ++p) {
        const double value = lambda_min(expand(h, p));
        out.trace.push_back(value);
        const auto cmp = guarded_less(value, threshold);
        out.marginal = out.marginal || cmp.marginal;
        if (cmp.below) {
            out.order = p;
            break;
        }
    }
    return out;
}

std::string hoffman_serialize(const HoffmanGraph& h) {
    std::string out = graph6_encode(h.underlying());
    out += "\nF:";
    for (const Vertex f : h.fat_vertices()) {
        out += ' ';
        out += std::to_string(f);
    }
    out += '\n';
    return out;
}

namespace {

std::vector<Vertex> parse_fat_line(std::string_view line) {
    if (!line.starts_with("F:")) {
        throw InputError("Hoffman label line must start with \"F:\"");
    }
    line.remove_prefix(2);
    std::vector<Vertex> fat;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        Vertex v = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InputError("bad fat vertex index '" + token + "'");
        }
        fat.push_back(v);
    }
    return fat;
}

}  // namespace

HoffmanGraph hoffman_parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    auto all = read_hoffman_stream(in);
    if (all.size() != 1) {
        throw InputError("expected exactly one Hoffman graph, found " + std::to_string(all.size()));
    }
    return std::move(all.front());
}

std::vector<HoffmanGraph> read_hoffman_stream(std::istream& in) {
    std::vector<HoffmanGraph> out;
    std::string line;
    std::optional<Graph> pending;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!pending) {
            pending = graph6_decode(line);
            continue;
        }
        const auto fat = parse_fat_line(line);
        out.push_back(HoffmanGraph::with_fat(std::move(*pending), fat));
        pending.reset();
    }
    if (pending) {
        throw InputError("Hoffman stream ends without an \"F:\" line");
    }
    return out;
}

}  // namespace sesqui
