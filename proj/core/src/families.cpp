#include "sesqui/families.hpp"

#include <charconv>

#include "sesqui/error.hpp"

namespace sesqui::families {

namespace {

void require_positive(std::size_t value, std::string_view what) {
    if (value == 0) {
        throw InputError(std::string(what) + " must be positive");
    }
}

std::size_t parse_count(std::string_view text, std::string_view key) {
    std::size_t value = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw InputError("parameter " + std::string(key) + "=" + std::string(text) +
                         " is not a nonnegative integer");
    }
    return value;
}

std::size_t param(const Params& params, std::string_view key) {
    const auto it = params.find(key);
    if (it == params.end()) {
        throw InputError("missing parameter " + std::string(key));
    }
    const auto value = parse_count(it->second, key);
    require_positive(value, key);
    return value;
}

std::vector<std::size_t> param_list(const Params& params, std::string_view key) {
    const auto it = params.find(key);
    if (it == params.end()) {
        throw InputError("missing parameter " + std::string(key));
    }
    std::vector<std::size_t> out;
    std::string_view rest = it->second;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const auto item = rest.substr(0, comma);
        out.push_back(parse_count(item, key));
        require_positive(out.back(), key);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (out.empty()) {
        throw InputError("parameter " + std::string(key) + " is empty");
    }
    return out;
}

}  // namespace

Graph complete(std::size_t n) {
    require_positive(n, "complete: n");
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
    require_positive(n, "path: n");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, v + 1);
    }
    return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) {
        throw InputError("cycle: n must be at least 3");
    }
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Graph::from_edges(n, edges);
}

Graph star(std::size_t t) {
    require_positive(t, "star: t");
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= t; ++v) {
        edges.emplace_back(0, v);
    }
    return Graph::from_edges(t + 1, edges);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
    if (parts.empty()) {
        throw InputError("complete_multipartite: at least one part required");
    }
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require_positive(parts[p], "complete_multipartite: part size");
        part_of.insert(part_of.end(), parts[p], p);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u) {
        for (Vertex v = u + 1; v < part_of.size(); ++v) {
            if (part_of[u] != part_of[v]) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(part_of.size(), edges);
}

Graph k_tilde(std::size_t m) {
    require_positive(m, "k_tilde: m");
    const auto apex = static_cast<Vertex>(2 * m);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < apex; ++u) {
        for (Vertex v = u + 1; v < apex; ++v) {
            edges.emplace_back(u, v);
        }
    }
    for (Vertex v = 0; v < m; ++v) {
        edges.emplace_back(v, apex);
    }
    return Graph::from_edges(2 * m + 1, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(10, edges);
}

Graph rook3x3() {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < 9; ++a) {
        for (Vertex b = a + 1; b < 9; ++b) {
            if (a / 3 == b / 3 || a % 3 == b % 3) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph::from_edges(9, edges);
}

Graph triangular5() {
    std::vector<Edge> pairs;
    for (Vertex i = 0; i < 5; ++i) {
        for (Vertex j = i + 1; j < 5; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    std::vector<Edge> edges;
    for (Vertex a = 0; a < pairs.size(); ++a) {
        for (Vertex b = a + 1; b < pairs.size(); ++b) {
            const auto [p, q] = pairs[a];
            const auto [r, s] = pairs[b];
            if (p == r || p == s || q == r || q == s) {
                edges.emplace_back(a, b);
            }
        }
    }
    return Graph::from_edges(pairs.size(), edges);
}

Graph named(std::string_view family, const Params& params) {
    if (family == "complete") return complete(param(params, "n"));
    if (family == "empty") return Graph::empty(param(params, "n"));
    if (family == "path") return path(param(params, "n"));
    if (family == "star") return star(param(params, "t"));
    if (family == "cycle") return cycle(param(params, "n"));
    if (family == "complete_multipartite") {
        const auto parts = param_list(params, "parts");
        return complete_multipartite(parts);
    }
    if (family == "k_tilde") return k_tilde(param(params, "m"));
    if (family == "petersen") return petersen();
    if (family == "rook3x3") return rook3x3();
    if (family == "triangular5") return triangular5();
    throw InputError("unknown graph family '" + std::string(family) + "'");
}

std::vector<std::string> names() {
    return {"complete", "empty", "path", "star", "cycle", "complete_multipartite",
            "k_tilde", "petersen", "rook3x3", "triangular5"};
}

}  // namespace sesqui::families
