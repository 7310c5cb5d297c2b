#include "sesqui/regularity.hpp"

namespace sesqui {

namespace {

/// Tracks whether a stream of counts is constant.
class ConstantTracker {
public:
    void observe(std::size_t value) noexcept {
        if (!seen_) {
            seen_ = true;
            value_ = value;
        } else if (value != value_) {
            constant_ = false;
        }
    }
    bool seen() const noexcept { return seen_; }
    std::optional<std::size_t> value() const {
        return seen_ && constant_ ? std::optional<std::size_t>(value_) : std::nullopt;
    }

private:
    bool seen_ = false;
    bool constant_ = true;
    std::size_t value_ = 0;
};

}  // namespace

RegularityProfile regularity_profile(const Graph& g) {
    RegularityProfile p;
    const auto n = g.order();
    p.order = n;
    p.connected = is_connected(g);

    ConstantTracker degree;
    for (Vertex v = 0; v < n; ++v) {
        degree.observe(g.degree(v));
    }
    p.is_regular = n == 0 || degree.value().has_value();
    p.k = n == 0 ? std::optional<std::size_t>(0) : degree.value();

    ConstantTracker adjacent_pairs;
    ConstantTracker nonadjacent_pairs;
    ConstantTracker distance_two;
    bool within_two = true;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const auto common = g.common_neighbors(u, v);
            if (g.adjacent(u, v)) {
                adjacent_pairs.observe(common);
            } else {
                nonadjacent_pairs.observe(common);
                if (common > 0) {
                    distance_two.observe(common);
                } else {
                    within_two = false;
                }
            }
        }
    }
    p.srg_a = adjacent_pairs.value();
    p.coedge_c = nonadjacent_pairs.value();
    p.sesqui_c = distance_two.value();
    p.vacuous_c = !distance_two.seen();
    p.diameter_at_most_2 = within_two;
    return p;
}

}  // namespace sesqui
