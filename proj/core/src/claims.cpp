#include <algorithm>

#include "sesqui/verifier.hpp"

namespace sesqui {

namespace {

std::vector<int> label_colours(const HoffmanGraph& h) {
    std::vector<int> out;
    out.reserve(h.labels().size());
    for (const auto l : h.labels()) {
        out.push_back(static_cast<int>(l));
    }
    return out;
}

}  // namespace

std::optional<Embedding> find_induced_hoffman(const HoffmanGraph& host, const HoffmanGraph& pattern) {
    const auto host_colours = label_colours(host);
    const auto pattern_colours = label_colours(pattern);
    return find_induced(host.underlying(), host_colours, pattern.underlying(), pattern_colours);
}

std::vector<FamilyHit> forbidden_family_check(const HoffmanGraph& g_assoc, int lambda) {
    if (lambda < 2) {
        throw InputError("forbidden_family_check: lambda must be at least 2");
    }
    const auto l = static_cast<std::size_t>(lambda);
    const std::pair<std::string, HoffmanCatalogEntry> family[] = {
        {"h_t(" + std::to_string(l + 1) + ")", catalog::h_t(l + 1)},
        {"h_t1(" + std::to_string(l) + ")", catalog::h_t1(l)},
        {"c_n(" + std::to_string(l * l - l + 1) + ")", catalog::c_n(l * l - l + 1)},
    };
    std::vector<FamilyHit> out;
    for (const auto& [name, entry] : family) {
        FamilyHit hit;
        hit.name = name;
        if (auto witness = find_induced_hoffman(g_assoc, entry.hoffman)) {
            hit.found = true;
            hit.witness = std::move(*witness);
        }
        out.push_back(std::move(hit));
    }
    return out;
}

Claim1Report claim1_diagnostics(const Graph& g, const QuasiCliqueSystem& qcs, int lambda) {
    if (lambda < 1) {
        throw InputError("claim1_diagnostics: lambda must be positive");
    }
    const auto l = static_cast<std::size_t>(lambda);
    const auto n = g.order();
    std::vector<VertexSet> members;
    std::vector<bool> is_clique_class;
    for (const auto& cls : qcs.classes) {
        VertexSet s(n);
        for (const Vertex v : cls.quasi_clique) {
            if (v >= n) throw InputError("claim1_diagnostics: quasi-clique vertex out of range");
            s.insert(v);
        }
        members.push_back(std::move(s));
        is_clique_class.push_back(is_clique(g, cls.quasi_clique));
    }

    Claim1Report report;
    report.lambda = lambda;
    for (Vertex x = 0; x < n; ++x) {
        VertexClaims vc;
        vc.vertex = x;
        VertexSet covered(n);
        for (std::size_t i = 0; i < members.size(); ++i) {
            const auto& q = members[i];
            if (q.contains(x)) {
                ++vc.containing;
                covered |= q;
                const auto inside = q.count() - 1 - q.intersection_count(g.row(x));
                vc.max_non_neighbours_inside = std::max(vc.max_non_neighbours_inside, inside);
            } else if (is_clique_class[i]) {
                vc.max_neighbours_outside =
                    std::max(vc.max_neighbours_outside, q.intersection_count(g.row(x)));
            }
        }
        if (vc.containing == l) {
            for (const Vertex y : g.neighbors(x)) {
                if (!covered.contains(y)) {
                    vc.uncovered_neighbour = true;
                    break;
                }
            }
        }
        report.exceed_count += vc.containing > l ? 1 : 0;
        report.exceed_cover += vc.uncovered_neighbour ? 1 : 0;
        report.exceed_neighbours += vc.max_neighbours_outside > l * l - l ? 1 : 0;
        report.exceed_non_neighbours += vc.max_non_neighbours_inside > l * l ? 1 : 0;
        report.vertices.push_back(vc);
    }
    return report;
}

std::vector<Claim2Result> claim2_check(const QuasiCliqueSystem& qcs, const Graph& g) {
    std::vector<Claim2Result> out;
    for (std::size_t i = 0; i < qcs.classes.size(); ++i) {
        const auto& q = qcs.classes[i].quasi_clique;
        Claim2Result r;
        r.class_index = i;
        r.is_clique = true;
        for (std::size_t a = 0; a < q.size() && r.is_clique; ++a) {
            for (std::size_t b = a + 1; b < q.size(); ++b) {
                if (!g.adjacent(q[a], q[b])) {
                    r.is_clique = false;
                    r.non_adjacent_pair = Edge{q[a], q[b]};
                    break;
                }
            }
        }
        out.push_back(r);
    }
    return out;
}

}  // namespace sesqui
