#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sesqui/graph.hpp"
#include "sesqui/hoffman.hpp"

namespace sesqui {

using Clique = std::vector<Vertex>;

/// Enumeration aborts with GuardExceeded beyond this many maximal cliques.
inline constexpr std::size_t kMaxCliqueCount = 1'000'000;

/// All maximal cliques, each sorted ascending, list sorted
/// lexicographically. Bron-Kerbosch with Tomita pivoting, outer loop in
/// degeneracy order.
std::vector<Clique> maximal_cliques(const Graph& g);

/// The symmetric relation on cliques: every vertex of c1 has at most m-1
/// non-neighbours in c2 and vice versa (a shared vertex is not its own
/// non-neighbour). Throws InputError if either set is not a clique of g.
bool pair_related(const Clique& c1, const Clique& c2, const Graph& g, std::size_t m);

/// Vertices with at most m-1 non-neighbours in `c` (members of c count 0).
std::vector<Vertex> quasi_clique_of(const Graph& g, const Clique& c, std::size_t m);

/// One equivalence class of large maximal cliques and its quasi-clique.
struct QuasiCliqueClass {
    std::vector<Clique> cliques;
    std::vector<Vertex> quasi_clique;
};

struct QuasiCliqueSystem {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<QuasiCliqueClass> classes;
    /// No induced copy of K~_{2m} was found in the graph.
    bool forbidden_ok = true;
};

/// Thrown when two cliques in one union-find class are unrelated.
/// `triple` holds a, b, c with a~b, b~c related and a, c unrelated.
class TransitivityViolation : public std::runtime_error {
public:
    TransitivityViolation(const std::string& what, std::vector<Clique> triple)
        : std::runtime_error(what), triple_(std::move(triple)) {}
    const std::vector<Clique>& triple() const noexcept { return triple_; }

private:
    std::vector<Clique> triple_;
};

/// Thrown when two representatives of one class give different quasi-cliques.
class RepresentativeDisagreement : public std::runtime_error {
public:
    RepresentativeDisagreement(const std::string& what, Clique first, Clique second,
                               std::vector<Vertex> symmetric_difference)
        : std::runtime_error(what), first_(std::move(first)), second_(std::move(second)),
          difference_(std::move(symmetric_difference)) {}
    const Clique& first() const noexcept { return first_; }
    const Clique& second() const noexcept { return second_; }
    const std::vector<Vertex>& symmetric_difference() const noexcept { return difference_; }

private:
    Clique first_;
    Clique second_;
    std::vector<Vertex> difference_;
};

/// Groups the maximal cliques of size >= n by union-find over
/// `pair_related`, then checks every pair inside each class and recomputes
/// the quasi-clique from every member. Classes are ordered by their first
/// (lexicographically smallest) clique. Throws InputError unless m >= 2 and
/// n >= (m+1)^2.
QuasiCliqueSystem quasi_clique_system(const Graph& g, std::size_t m, std::size_t n);

/// Associated Hoffman graph: slim vertices 0..|V|-1 are g itself, fat
/// vertex |V|+i is joined to the i-th quasi-clique.
struct AssociatedHoffman {
    HoffmanGraph hoffman;
    QuasiCliqueSystem system;
    std::vector<std::string> warnings;
};

AssociatedHoffman associated_hoffman_graph(const Graph& g, std::size_t m, std::size_t n);

/// Human-readable report listing each class, its cliques, and its quasi-clique.
std::string format_system(const QuasiCliqueSystem& system);

}  // namespace sesqui
