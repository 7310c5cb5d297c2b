#include "sesqui/quasiclique.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "sesqui/error.hpp"
#include "sesqui/families.hpp"
#include "sesqui/induced.hpp"

namespace sesqui {

namespace {

/// Vertices in degeneracy order (repeatedly remove a minimum-degree vertex).
std::vector<Vertex> degeneracy_order(const Graph& g) {
    const auto n = g.order();
    std::vector<std::size_t> degree = g.degrees();
    std::vector<char> removed(n, 0);
    std::vector<Vertex> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        std::size_t best_degree = static_cast<std::size_t>(-1);
        for (Vertex v = 0; v < n; ++v) {
            if (!removed[v] && degree[v] < best_degree) {
                best = v;
                best_degree = degree[v];
            }
        }
        removed[best] = 1;
        order.push_back(best);
        for (const Vertex w : g.neighbors(best)) {
            if (!removed[w]) --degree[w];
        }
    }
    return order;
}

class BronKerbosch {
public:
    explicit BronKerbosch(const Graph& g) : g_(g) {}

    std::vector<Clique> run() {
        const auto n = g_.order();
        const auto order = degeneracy_order(g_);
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i) {
            position[order[i]] = i;
        }
        for (const Vertex v : order) {
            VertexSet later(n);
            VertexSet earlier(n);
            for (const Vertex w : g_.neighbors(v)) {
                (position[w] > position[v] ? later : earlier).insert(w);
            }
            current_.push_back(v);
            expand(std::move(later), std::move(earlier));
            current_.pop_back();
        }
        for (auto& c : found_) {
            std::sort(c.begin(), c.end());
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void expand(VertexSet candidates, VertexSet excluded) {
        if (candidates.empty()) {
            if (excluded.empty()) {
                if (found_.size() >= kMaxCliqueCount) {
                    throw GuardExceeded("maximal_cliques: more than " +
                                        std::to_string(kMaxCliqueCount) + " maximal cliques");
                }
                found_.push_back(current_);
            }
            return;
        }
        // Tomita pivot: maximise |candidates ∩ N(u)| over candidates ∪ excluded.
        Vertex pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        auto consider = [&](Vertex u) {
            const auto c = candidates.intersection_count(g_.row(u));
            if (!have_pivot || c > best) {
                pivot = u;
                best = c;
                have_pivot = true;
            }
        };
        candidates.for_each(consider);
        excluded.for_each(consider);

        VertexSet branch = candidates;
        branch.subtract(g_.row(pivot));
        for (const Vertex v : branch.elements()) {
            VertexSet next_candidates = candidates;
            next_candidates &= g_.row(v);
            VertexSet next_excluded = excluded;
            next_excluded &= g_.row(v);
            current_.push_back(v);
            expand(std::move(next_candidates), std::move(next_excluded));
            current_.pop_back();
            candidates.erase(v);
            excluded.insert(v);
        }
    }

    const Graph& g_;
    Clique current_;
    std::vector<Clique> found_;
};

void require_clique(const Graph& g, const Clique& c, const char* which) {
    for (const Vertex v : c) {
        if (v >= g.order()) {
            throw InputError(std::string("pair_related: ") + which + " has out-of-range vertex " +
                             std::to_string(v));
        }
    }
    if (!is_clique(g, c)) {
        throw InputError(std::string("pair_related: ") + which + " is not a clique");
    }
}

std::size_t non_neighbours_in(const Graph& g, Vertex x, const Clique& c) {
    std::size_t count = 0;
    for (const Vertex y : c) {
        if (y != x && !g.adjacent(x, y)) ++count;
    }
    return count;
}

bool related_unchecked(const Clique& c1, const Clique& c2, const Graph& g, std::size_t m) {
    const auto limit = m - 1;
    for (const Vertex x : c1) {
        if (non_neighbours_in(g, x, c2) > limit) return false;
    }
    for (const Vertex y : c2) {
        if (non_neighbours_in(g, y, c1) > limit) return false;
    }
    return true;
}

std::string describe(const Clique& c) {
    std::string out = "{";
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(c[i]);
    }
    return out + "}";
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

/// Shortest relation path from `from` to `to` inside `members`; its first
/// three cliques witness the failure of transitivity.
std::vector<Clique> violation_triple(const std::vector<Clique>& cliques,
                                     const std::vector<std::size_t>& members,
                                     const std::vector<std::vector<char>>& related, std::size_t from,
                                     std::size_t to) {
    const auto k = members.size();
    std::vector<std::size_t> previous(k, k);
    std::vector<char> seen(k, 0);
    std::queue<std::size_t> frontier;
    frontier.push(from);
    seen[from] = 1;
    while (!frontier.empty()) {
        const auto a = frontier.front();
        frontier.pop();
        for (std::size_t b = 0; b < k; ++b) {
            if (!seen[b] && related[a][b]) {
                seen[b] = 1;
                previous[b] = a;
                frontier.push(b);
            }
        }
    }
    std::vector<std::size_t> path{to};
    while (path.back() != from) {
        path.push_back(previous[path.back()]);
    }
    std::reverse(path.begin(), path.end());
    return {cliques[members[path[0]]], cliques[members[path[1]]], cliques[members[path[2]]]};
}

}  // namespace

std::vector<Clique> maximal_cliques(const Graph& g) {
    if (g.order() == 0) {
        return {};
    }
    return BronKerbosch(g).run();
}

bool pair_related(const Clique& c1, const Clique& c2, const Graph& g, std::size_t m) {
    if (m == 0) {
        throw InputError("pair_related: m must be positive");
    }
    require_clique(g, c1, "first set");
    require_clique(g, c2, "second set");
    return related_unchecked(c1, c2, g, m);
}

std::vector<Vertex> quasi_clique_of(const Graph& g, const Clique& c, std::size_t m) {
    std::vector<Vertex> out;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (non_neighbours_in(g, x, c) <= m - 1) {
            out.push_back(x);
        }
    }
    return out;
}

QuasiCliqueSystem quasi_clique_system(const Graph& g, std::size_t m, std::size_t n) {
    if (m < 2) {
        throw InputError("quasi_clique_system: m must be at least 2");
    }
    if (n < (m + 1) * (m + 1)) {
        throw InputError("quasi_clique_system: n=" + std::to_string(n) + " is below (m+1)^2=" +
                         std::to_string((m + 1) * (m + 1)));
    }
    QuasiCliqueSystem system;
    system.m = m;
    system.n = n;

    std::vector<Clique> large;
    for (auto& c : maximal_cliques(g)) {
        if (c.size() >= n) large.push_back(std::move(c));
    }
    const auto k = large.size();
    std::vector<std::vector<char>> related(k, std::vector<char>(k, 0));
    DisjointSets sets(k);
    for (std::size_t a = 0; a < k; ++a) {
        related[a][a] = 1;
        for (std::size_t b = a + 1; b < k; ++b) {
            if (related_unchecked(large[a], large[b], g, m)) {
                related[a][b] = related[b][a] = 1;
                sets.unite(a, b);
            }
        }
    }

    std::vector<std::vector<std::size_t>> groups;
    std::vector<std::size_t> group_of_root(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        const auto root = sets.find(a);
        if (group_of_root[root] == k) {
            group_of_root[root] = groups.size();
            groups.emplace_back();
        }
        groups[group_of_root[root]].push_back(a);
    }

    for (const auto& members : groups) {
        std::vector<std::vector<char>> local(members.size(), std::vector<char>(members.size()));
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = 0; j < members.size(); ++j) {
                local[i][j] = related[members[i]][members[j]];
            }
        }
        for (std::size_t i = 0; i < members.size(); ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (!local[i][j]) {
                    auto triple = violation_triple(large, members, local, i, j);
                    const auto what = "transitivity violation: " + describe(triple[0]) + " ~ " +
                                      describe(triple[1]) + " ~ " + describe(triple[2]) +
                                      " but the outer pair is unrelated";
                    throw TransitivityViolation(what, std::move(triple));
                }
            }
        }

        QuasiCliqueClass cls;
        cls.quasi_clique = quasi_clique_of(g, large[members.front()], m);
        for (const auto idx : members) {
            const auto q = quasi_clique_of(g, large[idx], m);
            if (q != cls.quasi_clique) {
                std::vector<Vertex> diff;
                std::set_symmetric_difference(q.begin(), q.end(), cls.quasi_clique.begin(),
                                              cls.quasi_clique.end(), std::back_inserter(diff));
                const auto what = "representative disagreement: " + describe(large[members.front()]) +
                                  " and " + describe(large[idx]) + " differ on " + describe(diff);
                throw RepresentativeDisagreement(what, large[members.front()], large[idx], std::move(diff));
            }
            cls.cliques.push_back(large[idx]);
        }
        system.classes.push_back(std::move(cls));
    }

    system.forbidden_ok = !contains_induced(g, families::k_tilde(m));
    return system;
}

AssociatedHoffman associated_hoffman_graph(const Graph& g, std::size_t m, std::size_t n) {
    auto system = quasi_clique_system(g, m, n);
    const auto slim = g.order();
    auto edges = g.edges();
    std::vector<Vertex> fat;
    for (std::size_t i = 0; i < system.classes.size(); ++i) {
        const auto f = static_cast<Vertex>(slim + i);
        const auto& q = system.classes[i].quasi_clique;
        if (q.empty()) {
            throw std::logic_error("associated_hoffman_graph: empty quasi-clique");
        }
        for (const Vertex v : q) {
            edges.emplace_back(v, f);
        }
        fat.push_back(f);
    }
    std::vector<std::string> warnings;
    if (!system.forbidden_ok) {
        warnings.push_back("graph contains an induced K~_" + std::to_string(2 * m) +
                           "; quasi-clique theory hypotheses do not hold");
    }
    auto hoffman = HoffmanGraph::with_fat(Graph::from_edges(slim + fat.size(), edges), fat);
    return {std::move(hoffman), std::move(system), std::move(warnings)};
}

std::string format_system(const QuasiCliqueSystem& system) {
    std::ostringstream out;
    out << "m=" << system.m << " n=" << system.n << " classes=" << system.classes.size()
        << " forbidden_ok=" << (system.forbidden_ok ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < system.classes.size(); ++i) {
        const auto& cls = system.classes[i];
        out << "class " << i << ": cliques=" << cls.cliques.size() << '\n';
        for (const auto& c : cls.cliques) {
            out << "  clique " << describe(c) << '\n';
        }
        out << "  quasi_clique " << describe(cls.quasi_clique) << '\n';
    }
    return out.str();
}

}  // namespace sesqui
