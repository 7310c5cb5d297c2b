#include "sesqui/graph6.hpp"

#include <algorithm>
#include <istream>

#include "sesqui/error.hpp"

namespace sesqui {

namespace {

constexpr int kBias = 63;

std::size_t bit_count(std::size_t n) { return n * (n == 0 ? 0 : n - 1) / 2; }

}  // namespace

std::string graph6_encode(const Graph& g) {
    const auto n = g.order();
    if (n > kGraph6MaxOrder) {
        throw InputError("graph6_encode: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kGraph6MaxOrder));
    }
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
    }
    return out;
}

Graph graph6_decode(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) {
            throw Graph6Error("graph6: byte value " + std::to_string(c) + " outside 63..126", i);
        }
    }
    if (text.empty()) {
        throw Graph6Error("graph6: empty input", 0);
    }
    std::size_t n = 0;
    std::size_t pos = 0;
    if (text[0] != '~') {
        n = static_cast<std::size_t>(text[0] - kBias);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~') {
            throw Graph6Error("graph6: 8-byte order header is not supported", 1);
        }
        if (text.size() < 4) {
            throw Graph6Error("graph6: truncated order header", text.size());
        }
        for (std::size_t i = 1; i <= 3; ++i) {
            n = (n << 6) | static_cast<std::size_t>(text[i] - kBias);
        }
        if (n <= 62) {
            throw Graph6Error("graph6: long order header used for n <= 62", 1);
        }
        pos = 4;
    }
    const std::size_t bits = bit_count(n);
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected) {
        throw Graph6Error("graph6: expected " + std::to_string(expected) + " bytes for n=" +
                              std::to_string(n) + ", got " + std::to_string(text.size()),
                          std::min(text.size(), expected));
    }
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - kBias;
            if ((byte >> (5 - k % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (bits % 6 != 0) {
        const int last = text.back() - kBias;
        const int pad = 6 - static_cast<int>(bits % 6);
        if ((last & ((1 << pad) - 1)) != 0) {
            throw Graph6Error("graph6: nonzero padding bits", text.size() - 1);
        }
    }
    return Graph::from_edges(n, edges);
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        std::string_view body = line;
        if (first && body.starts_with(">>graph6<<")) {
            body.remove_prefix(10);
        }
        first = false;
        if (body.empty()) {
            continue;
        }
        out.push_back(graph6_decode(body));
    }
    return out;
}

}  // namespace sesqui
