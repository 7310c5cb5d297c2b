#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sesqui/families.hpp"
#include "sesqui/graph6.hpp"
#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

namespace sesqui {

std::size_t t_prime(int lambda) {
    if (lambda < 1) {
        throw InputError("t_prime: lambda must be at least 1");
    }
    const auto l = static_cast<std::size_t>(lambda);
    return l * l + 1;
}

double smallest_cubic_root(double a2, double a1, double a0) {
    const auto f = [&](double x) { return ((x + a2) * x + a1) * x + a0; };
    const double radius = 1.0 + std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
    double lo = -radius;
    double hi = radius;
    const double disc = 4.0 * a2 * a2 - 12.0 * a1;
    if (disc > 0.0) {
        const double left_critical = (-2.0 * a2 - std::sqrt(disc)) / 6.0;
        const double right_critical = (-2.0 * a2 + std::sqrt(disc)) / 6.0;
        if (f(left_critical) >= 0.0) {
            hi = left_critical;
        } else {
            lo = right_critical;
        }
    }
    // f(lo) < 0 <= f(hi)
    for (int i = 0; i < 200 && hi - lo > 0.0; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double k_tilde_quotient_root(std::size_t m) {
    const double md = static_cast<double>(m);
    const std::array<std::array<double, 3>, 3> b{{{0.0, md, 0.0}, {1.0, md - 1.0, md}, {0.0, md, md - 1.0}}};
    const double trace = b[0][0] + b[1][1] + b[2][2];
    const double minors = b[0][0] * b[1][1] - b[0][1] * b[1][0] + b[0][0] * b[2][2] -
                          b[0][2] * b[2][0] + b[1][1] * b[2][2] - b[1][2] * b[2][1];
    const double det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1]) -
                       b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0]) +
                       b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
    return smallest_cubic_root(-trace, minors, -det);
}

MPrimeResult m_prime(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw InputError("m_prime: lambda must be positive");
    }
    MPrimeResult out;
    for (std::size_t m = 1; m <= kMPrimeGuard; ++m) {
        MPrimeScanStep step{m, lambda_min(families::k_tilde(m)), k_tilde_quotient_root(m)};
        out.scan.push_back(step);
        if (std::abs(step.full_eigensolve - step.quotient_root) > 1e-8) {
            throw std::logic_error("m_prime: eigensolve and quotient root disagree at m=" +
                                   std::to_string(m));
        }
        const auto cmp = guarded_less(step.full_eigensolve, -lambda);
        out.marginal = out.marginal || cmp.marginal;
        if (cmp.below) {
            out.m = m;
            return out;
        }
    }
    throw GuardExceeded("m_prime: no m <= " + std::to_string(kMPrimeGuard) + " found");
}

PDoublePrimeResult p_double_prime(int lambda, std::size_t p_max) {
    if (lambda < 2) {
        throw InputError("p_double_prime: lambda must be at least 2");
    }
    const auto l = static_cast<std::size_t>(lambda);
    const HoffmanCatalogEntry members[] = {catalog::h_t(l + 1), catalog::h_t1(l),
                                           catalog::c_n(l * l - l + 1)};
    const std::string names[] = {"h_t(" + std::to_string(l + 1) + ")",
                                 "h_t1(" + std::to_string(l) + ")",
                                 "c_n(" + std::to_string(l * l - l + 1) + ")"};
    PDoublePrimeResult out;
    std::size_t worst = 0;
    bool all_found = true;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto order = minimal_expansion_order(members[i].hoffman, lambda, p_max);
        out.per_graph[names[i]] = order.order;
        if (order.order) {
            worst = std::max(worst, *order.order);
        } else {
            all_found = false;
        }
    }
    if (all_found) out.p = worst;
    return out;
}

namespace {

/// Upper-triangle bit mask of a graph on at most 8 vertices.
std::uint32_t triangle_code(const Graph& g, const std::array<Vertex, 8>& perm) {
    std::uint32_t code = 0;
    const auto n = g.order();
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            code = (code << 1) | (g.adjacent(perm[i], perm[j]) ? 1U : 0U);
        }
    }
    return code;
}

std::uint32_t canonical_code(const Graph& g) {
    std::array<Vertex, 8> perm{};
    for (Vertex i = 0; i < g.order(); ++i) perm[i] = i;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    do {
        best = std::min(best, triangle_code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.begin() + static_cast<long>(g.order())));
    return best;
}

}  // namespace

IsolatedVertexReport lemma_isolated_vertex_check(int lambda, std::size_t p_max) {
    if (lambda != 2) {
        throw InputError("lemma_isolated_vertex_check: only lambda = 2 is supported");
    }
    const std::size_t order = static_cast<std::size_t>(lambda * lambda + 2);
    const std::size_t free_vertices = order - 1;
    std::vector<Edge> slots;
    for (Vertex i = 0; i < free_vertices; ++i) {
        for (Vertex j = i + 1; j < free_vertices; ++j) {
            slots.emplace_back(i, j);
        }
    }

    IsolatedVertexReport report;
    report.lambda = lambda;
    std::map<std::uint32_t, Graph> classes;
    const std::uint32_t total = 1U << slots.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < slots.size(); ++b) {
            if ((mask >> b) & 1U) edges.push_back(slots[b]);
        }
        // Vertex `order - 1` stays isolated.
        auto g = Graph::from_edges(order, edges);
        classes.try_emplace(canonical_code(g), std::move(g));
        ++report.labelled_graphs;
    }

    const double threshold = -static_cast<double>(lambda);
    report.all_pass = true;
    report.min_margin = std::numeric_limits<double>::infinity();
    for (auto& [code, g] : classes) {
        IsolatedVertexClass cls;
        cls.graph6 = graph6_encode(g);
        const auto entry = catalog::q_of(g);
        cls.lambda_min_q = lambda_min(entry.hoffman);
        cls.margin = threshold - cls.lambda_min_q;
        const auto cmp = guarded_less(cls.lambda_min_q, threshold);
        report.all_pass = report.all_pass && cmp.below;
        report.min_margin = std::min(report.min_margin, cls.margin);
        cls.expansion_order = minimal_expansion_order(entry.hoffman, lambda, p_max).order;
        cls.h = std::move(g);
        report.classes.push_back(std::move(cls));
    }

    const auto reference = disjoint_union(families::complete(order - 1), Graph::empty(1));
    const auto reference_code = canonical_code(reference);
    std::size_t reference_index = 0;
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
        if (canonical_code(report.classes[i].h) == reference_code) reference_index = i;
        if (report.classes[i].lambda_min_q > report.classes[report.maximiser].lambda_min_q) {
            report.maximiser = i;
        }
    }
    report.maximiser_is_k5_k1 = report.maximiser == reference_index;

    std::size_t p_prime = 0;
    bool all_found = true;
    for (const auto& cls : report.classes) {
        if (cls.expansion_order) {
            p_prime = std::max(p_prime, *cls.expansion_order);
        } else {
            all_found = false;
        }
    }
    if (all_found && p_prime > 0) {
        report.p_prime = p_prime;
        for (std::size_t i = 0; i < report.classes.size(); ++i) {
            auto& cls = report.classes[i];
            cls.lambda_min_at_p_prime = lambda_min(expand(catalog::q_of(cls.h).hoffman, p_prime));
            if (cls.lambda_min_at_p_prime >
                report.classes[report.expansion_maximiser].lambda_min_at_p_prime) {
                report.expansion_maximiser = i;
            }
        }
        report.remark_consistent =
            report.classes[reference_index].lambda_min_at_p_prime >=
            report.classes[report.expansion_maximiser].lambda_min_at_p_prime - 1e-9;
    }
    return report;
}

}  // namespace sesqui
