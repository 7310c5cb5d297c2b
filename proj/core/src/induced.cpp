#include "sesqui/induced.hpp"

#include <algorithm>
#include <map>

#include "sesqui/error.hpp"

namespace sesqui {

namespace {

constexpr std::size_t kUnmapped = static_cast<std::size_t>(-1);

/// Per-vertex neighbour and non-neighbour counts split by colour.
std::map<int, std::pair<std::size_t, std::size_t>> colour_profile(const Graph& g,
                                                                  std::span<const int> colours,
                                                                  Vertex v) {
    std::map<int, std::pair<std::size_t, std::size_t>> out;
    for (Vertex w = 0; w < g.order(); ++w) {
        if (w == v) continue;
        auto& slot = out[colours[w]];
        (g.adjacent(v, w) ? slot.first : slot.second) += 1;
    }
    return out;
}

class InducedSearch {
public:
    InducedSearch(const Graph& host, const Graph& pattern, std::vector<VertexSet> candidates)
        : host_(host), pattern_(pattern), mapped_(pattern.order(), kUnmapped),
          used_(host.order()) {
        levels_.push_back(std::move(candidates));
    }

    std::optional<Embedding> run() {
        if (!search(0)) {
            return std::nullopt;
        }
        Embedding out(mapped_.size());
        for (std::size_t u = 0; u < mapped_.size(); ++u) {
            out[u] = static_cast<Vertex>(mapped_[u]);
        }
        return out;
    }

private:
    bool search(std::size_t depth) {
        if (depth == pattern_.order()) {
            return true;
        }
        const auto& cand = levels_.back();
        std::size_t pick = kUnmapped;
        std::size_t best = kUnmapped;
        for (Vertex u = 0; u < pattern_.order(); ++u) {
            if (mapped_[u] != kUnmapped) continue;
            VertexSet free = cand[u];
            free.subtract(used_);
            const auto options = free.count();
            if (options < best) {
                best = options;
                pick = u;
            }
        }
        if (best == 0) {
            return false;
        }
        VertexSet options = cand[pick];
        options.subtract(used_);
        for (const Vertex h : options.elements()) {
            mapped_[pick] = h;
            used_.insert(h);
            auto next = levels_.back();
            VertexSet non_row = host_.row(h).flipped();
            non_row.erase(h);
            bool dead = false;
            for (Vertex w = 0; w < pattern_.order() && !dead; ++w) {
                if (mapped_[w] != kUnmapped) continue;
                next[w] &= pattern_.adjacent(pick, w) ? host_.row(h) : non_row;
                dead = next[w].empty();
            }
            if (!dead) {
                levels_.push_back(std::move(next));
                if (search(depth + 1)) {
                    return true;
                }
                levels_.pop_back();
            }
            used_.erase(h);
            mapped_[pick] = kUnmapped;
        }
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    std::vector<std::size_t> mapped_;
    VertexSet used_;
    std::vector<std::vector<VertexSet>> levels_;
};

}  // namespace

std::optional<Embedding> find_induced(const Graph& host, std::span<const int> host_colors,
                                      const Graph& pattern, std::span<const int> pattern_colors) {
    if (host_colors.size() != host.order() || pattern_colors.size() != pattern.order()) {
        throw InputError("find_induced: colour list length does not match vertex count");
    }
    if (pattern.order() == 0) {
        return Embedding{};
    }
    if (pattern.order() > host.order()) {
        return std::nullopt;
    }

    std::vector<std::map<int, std::pair<std::size_t, std::size_t>>> host_profiles;
    host_profiles.reserve(host.order());
    for (Vertex h = 0; h < host.order(); ++h) {
        host_profiles.push_back(colour_profile(host, host_colors, h));
    }

    std::vector<VertexSet> candidates(pattern.order(), VertexSet(host.order()));
    for (Vertex u = 0; u < pattern.order(); ++u) {
        const auto need = colour_profile(pattern, pattern_colors, u);
        for (Vertex h = 0; h < host.order(); ++h) {
            if (host_colors[h] != pattern_colors[u]) continue;
            const bool fits = std::all_of(need.begin(), need.end(), [&](const auto& entry) {
                const auto it = host_profiles[h].find(entry.first);
                return it != host_profiles[h].end() && it->second.first >= entry.second.first &&
                       it->second.second >= entry.second.second;
            });
            if (fits) {
                candidates[u].insert(h);
            }
        }
        if (candidates[u].empty()) {
            return std::nullopt;
        }
    }
    return InducedSearch(host, pattern, std::move(candidates)).run();
}

std::optional<Embedding> find_induced(const Graph& host, const Graph& pattern) {
    const std::vector<int> host_colors(host.order(), 0);
    const std::vector<int> pattern_colors(pattern.order(), 0);
    return find_induced(host, host_colors, pattern, pattern_colors);
}

}  // namespace sesqui
