#pragma once

#include <cstddef>
#include <optional>

#include "sesqui/graph.hpp"

namespace sesqui {

/// Regularity parameters found by an exhaustive scan over vertex pairs.
///
/// `sesqui_c` is the common-neighbour count shared by every pair at
/// distance 2 (pairs in different components are never at distance 2).
/// `srg_a` and `coedge_c` are the common-neighbour counts of adjacent and
/// non-adjacent pairs respectively; each is absent when it varies or when
/// no such pair exists. Co-edge regular means: regular, with `coedge_c`
/// present.
struct RegularityProfile {
    std::size_t order = 0;
    bool is_regular = false;
    std::optional<std::size_t> k;
    std::optional<std::size_t> sesqui_c;
    std::optional<std::size_t> srg_a;
    std::optional<std::size_t> coedge_c;
    bool diameter_at_most_2 = false;
    bool connected = false;
    /// No pair at distance 2 exists, so any c would hold vacuously.
    bool vacuous_c = false;

    bool is_sesqui_regular() const noexcept { return is_regular && sesqui_c.has_value(); }
    bool is_coedge_regular() const noexcept { return is_regular && coedge_c.has_value(); }
    bool is_strongly_regular() const noexcept {
        return is_regular && srg_a.has_value() && coedge_c.has_value();
    }

    friend bool operator==(const RegularityProfile&, const RegularityProfile&) = default;
};

RegularityProfile regularity_profile(const Graph& g);

}  // namespace sesqui
