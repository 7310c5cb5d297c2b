#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sesqui/graph.hpp"

namespace sesqui::families {

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// K_{1,t}; the centre is vertex 0.
Graph star(std::size_t t);
Graph complete_multipartite(std::span<const std::size_t> parts);
/// K_{2m} on vertices 0..2m-1 plus apex 2m adjacent to 0..m-1.
Graph k_tilde(std::size_t m);
/// Outer 5-cycle 0..4, spokes i~i+5, inner pentagram 5+i ~ 5+(i+2)%5.
Graph petersen();
/// K3 x K3; vertex 3r+c.
Graph rook3x3();
/// Line graph of K5 (the complement of the Petersen graph).
Graph triangular5();

/// Parameters for `named`: name -> integer or comma-separated list.
using Params = std::map<std::string, std::string, std::less<>>;

/// Builds a family by name. Recognised names: complete (n), empty (n),
/// path (n), star (t), cycle (n), complete_multipartite (parts=a,b,...),
/// k_tilde (m), petersen, rook3x3, triangular5.
/// Throws InputError for unknown names or nonpositive parameters.
Graph named(std::string_view family, const Params& params = {});

std::vector<std::string> names();

}  // namespace sesqui::families
