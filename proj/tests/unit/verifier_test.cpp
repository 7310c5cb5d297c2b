#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "sesqui/error.hpp"
#include "sesqui/families.hpp"
#include "sesqui/graph6.hpp"
#include "sesqui/spectral.hpp"
#include "sesqui/verifier.hpp"

using namespace sesqui;

namespace {

BigInt binomial(unsigned n, unsigned k) {
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// K30 on 0..29 plus vertex 30 adjacent to 0..28: two related 30-cliques whose
// quasi-clique is all 31 vertices, yet 29 and 30 are not adjacent.
Graph near_clique() {
    std::vector<Edge> edges = families::complete(30).edges();
    for (Vertex v = 0; v < 29; ++v) edges.emplace_back(v, 30);
    return Graph::from_edges(31, edges);
}

}  // namespace

TEST(TPrime, Values) {
    EXPECT_EQ(t_prime(1), 2u);
    EXPECT_EQ(t_prime(2), 5u);
    EXPECT_EQ(t_prime(3), 10u);
    EXPECT_THROW(t_prime(0), InputError);
}

TEST(TPrime, DefiningProperty) {
    for (int l = 1; l <= 6; ++l) {
        const auto t = t_prime(l);
        EXPECT_LT(lambda_min(families::star(t)), -l);
        EXPECT_GE(lambda_min(families::star(t - 1)), -l - 1e-9);
    }
}

TEST(MPrime, ScanValues) {
    const std::pair<double, std::size_t> cases[] = {{1.0, 1}, {1.5, 2}, {2.0, 4}, {2.5, 7}, {3.0, 12}};
    for (const auto& [lambda, expected] : cases) {
        const auto r = m_prime(lambda);
        EXPECT_EQ(r.m, expected) << lambda;
        ASSERT_EQ(r.scan.size(), expected);
        for (const auto& step : r.scan) EXPECT_NEAR(step.full_eigensolve, step.quotient_root, 1e-8);
        EXPECT_LT(r.scan.back().full_eigensolve, -lambda);
        if (expected > 1) {
            EXPECT_GE(r.scan[expected - 2].full_eigensolve, -lambda);
        }
    }
    EXPECT_NEAR(m_prime(2.0).scan[2].full_eigensolve, -1.894, 1e-3);
    EXPECT_NEAR(m_prime(2.0).scan[3].full_eigensolve, -2.0771, 1e-4);
    EXPECT_THROW(m_prime(0.0), InputError);
}

TEST(MPrime, CubicRootOnKnownPolynomial) {
    // (x + 3)(x - 1)(x - 2) = x^3 - 7x + 6
    EXPECT_NEAR(smallest_cubic_root(0.0, -7.0, 6.0), -3.0, 1e-12);
    EXPECT_NEAR(k_tilde_quotient_root(1), -std::sqrt(2.0), 1e-12);
}

TEST(PDoublePrime, LambdaTwo) {
    const auto r = p_double_prime(2);
    ASSERT_TRUE(r.p.has_value());
    for (const auto& [name, order] : r.per_graph) {
        ASSERT_TRUE(order.has_value()) << name;
        EXPECT_LE(*order, *r.p);
    }
    EXPECT_EQ(r.per_graph.at("h_t(3)"), 3u);
}

TEST(IsolatedVertexLemma, LambdaTwo) {
    const auto r = lemma_isolated_vertex_check(2);
    EXPECT_EQ(r.labelled_graphs, 1024u);
    EXPECT_EQ(r.classes.size(), 34u);
    EXPECT_TRUE(r.all_pass);
    EXPECT_GT(r.min_margin, 0.0);
    EXPECT_TRUE(r.maximiser_is_k5_k1);
    const auto& best = r.classes[r.maximiser];
    EXPECT_NEAR(best.lambda_min_q, -1.0 - std::sqrt(5.0), 1e-9);
    EXPECT_NEAR(r.min_margin, -2.0 - best.lambda_min_q, 1e-12);

    bool saw_empty = false;
    for (const auto& c : r.classes) {
        EXPECT_EQ(c.h.order(), 6u);
        EXPECT_LT(c.lambda_min_q, -2.0);
        ASSERT_TRUE(c.expansion_order.has_value());
        if (c.h.size() == 0) {
            saw_empty = true;
            EXPECT_NEAR(c.lambda_min_q, -6.0, 1e-9);
        }
    }
    EXPECT_TRUE(saw_empty);
    ASSERT_TRUE(r.p_prime.has_value());
    EXPECT_THROW(lemma_isolated_vertex_check(3), InputError);
}

TEST(ForbiddenFamilies, Examples) {
    const auto k50 = associated_hoffman_graph(families::complete(50), 2, 25);
    for (const auto& hit : forbidden_family_check(k50.hoffman, 2)) EXPECT_FALSE(hit.found) << hit.name;

    const auto h3 = catalog::h_t(3).hoffman;
    const auto assoc = associated_hoffman_graph(expand(h3, 30), 2, 25);
    const auto hits = forbidden_family_check(assoc.hoffman, 2);
    ASSERT_EQ(hits.size(), 3u);
    EXPECT_EQ(hits[0].name, "h_t(3)");
    ASSERT_TRUE(hits[0].found);
    EXPECT_EQ(hits[0].witness[0], 0u);  // the centre

    const auto c3 = catalog::c_n(3).hoffman;
    const auto self = forbidden_family_check(c3, 2);
    EXPECT_EQ(self[2].name, "c_n(3)");
    EXPECT_TRUE(self[2].found);
}

TEST(Claim1, Examples) {
    const auto k50 = families::complete(50);
    const auto r = claim1_diagnostics(k50, quasi_clique_system(k50, 2, 25), 2);
    EXPECT_TRUE(r.all_hold());
    for (const auto& v : r.vertices) {
        EXPECT_EQ(v.containing, 1u);
        EXPECT_EQ(v.max_non_neighbours_inside, 0u);
    }

    const auto g = expand(catalog::h_t(2).hoffman, 30);
    const auto r2 = claim1_diagnostics(g, quasi_clique_system(g, 2, 25), 2);
    EXPECT_EQ(r2.vertices[0].containing, 2u);
    EXPECT_TRUE(r2.all_hold());

    const auto two = disjoint_union(families::complete(30), families::complete(30));
    const auto r3 = claim1_diagnostics(two, quasi_clique_system(two, 2, 25), 2);
    for (const auto& v : r3.vertices) {
        EXPECT_EQ(v.containing, 1u);
        EXPECT_EQ(v.max_neighbours_outside, 0u);
    }
}

TEST(Claim2, Examples) {
    const auto k50 = families::complete(50);
    const auto r = claim2_check(quasi_clique_system(k50, 2, 25), k50);
    ASSERT_EQ(r.size(), 1u);
    EXPECT_TRUE(r[0].is_clique);

    const auto g = expand(catalog::h_t(2).hoffman, 30);
    for (const auto& c : claim2_check(quasi_clique_system(g, 2, 25), g)) EXPECT_TRUE(c.is_clique);

    const auto bad = near_clique();
    const auto system = quasi_clique_system(bad, 2, 25);
    ASSERT_EQ(system.classes.size(), 1u);
    EXPECT_EQ(system.classes[0].quasi_clique.size(), 31u);
    const auto check = claim2_check(system, bad);
    EXPECT_FALSE(check[0].is_clique);
    ASSERT_TRUE(check[0].non_adjacent_pair.has_value());
    EXPECT_EQ(*check[0].non_adjacent_pair, (Edge{29, 30}));
}

TEST(Neumaier, Examples) {
    const auto p = neumaier_check(families::petersen(), "petersen");
    EXPECT_EQ(p.lambda, 2);
    EXPECT_EQ(p.outcome, "bound");
    EXPECT_DOUBLE_EQ(p.bound, 8.0);
    EXPECT_DOUBLE_EQ(p.margin, 7.0);

    const std::size_t k222[] = {2, 2, 2};
    EXPECT_EQ(neumaier_check(families::complete_multipartite(k222)).outcome, "complete_multipartite");

    const auto t5 = neumaier_check(families::triangular5());
    EXPECT_EQ(t5.lambda, 2);
    EXPECT_EQ(t5.outcome, "bound");
    EXPECT_DOUBLE_EQ(t5.margin, 4.0);

    EXPECT_THROW(neumaier_check(families::cycle(8)), InputError);
}

TEST(Theorem5, Examples) {
    const auto p = theorem5_check(families::petersen());
    EXPECT_EQ(p.lambda, 2);
    EXPECT_EQ(p.outcome, Outcome::BranchI);
    EXPECT_DOUBLE_EQ(p.margins.at("branch_i"), 3.0);
    EXPECT_TRUE(p.warnings.empty() || p.warnings.front().find("marginal") != std::string::npos);

    const std::size_t k333[] = {3, 3, 3};
    const auto k = theorem5_check(families::complete_multipartite(k333));
    EXPECT_EQ(k.lambda, 3);
    EXPECT_EQ(k.outcome, Outcome::Both);
    EXPECT_DOUBLE_EQ(k.margins.at("branch_i"), 12.0);
    EXPECT_DOUBLE_EQ(k.margins.at("branch_ii"), 0.0);

    const auto c8 = theorem5_check(families::cycle(8));
    EXPECT_EQ(c8.outcome, Outcome::BranchI);
    EXPECT_DOUBLE_EQ(c8.margins.at("branch_ii"), 1.25 - 5.0);

    const auto rook = theorem5_check(families::rook3x3());
    EXPECT_EQ(rook.outcome, Outcome::BranchI);
    EXPECT_EQ(*rook.profile.sesqui_c, 2u);  // lambda (lambda - 1) for a Latin square graph

    const auto c5_override = theorem5_check(families::cycle(5), 3);
    EXPECT_EQ(c5_override.lambda, 3);
}

TEST(Theorem5, Errors) {
    EXPECT_THROW(theorem5_check(families::complete(4)), VacuousSesquiRegularity);
    EXPECT_THROW(theorem5_check(families::star(3)), InputError);
    EXPECT_THROW(theorem5_check(families::cycle(5), 1), InputError);
    EXPECT_THROW(theorem5_check(families::petersen(), 1), InputError);
}

TEST(Theorem5, InferredLambdaSnaps) {
    EXPECT_EQ(inferred_lambda(-2.0 + 5e-8), 2);
    EXPECT_EQ(inferred_lambda(-2.0 - 5e-8), 2);
    EXPECT_EQ(inferred_lambda(-1.618), 2);
    EXPECT_EQ(inferred_lambda(-2.1), 3);
}

TEST(Ramsey, Bounds) {
    EXPECT_EQ(ramsey_upper(3, 3), 6);
    for (std::uint64_t t = 1; t <= 20; ++t) EXPECT_EQ(ramsey_upper(2, t), t);
    EXPECT_EQ(ramsey_upper(9, 5), binomial(12, 8));
    EXPECT_EQ(c_lambda_estimate(2, 9), binomial(992, 4));
    EXPECT_EQ(known_ramsey(3, 3), 6u);
    EXPECT_THROW(ramsey_upper(0, 3), InputError);
    EXPECT_THROW(ramsey_upper(3, 0), InputError);
    EXPECT_EQ(scientific(BigInt(123456789), 3), "1.23e+8");
}

TEST(Corpus, Invariants) {
    const auto entries = corpus_run();
    ASSERT_EQ(entries.size(), 7u + 10u);
    for (const auto& e : entries) {
        if (e.neumaier) {
            EXPECT_NE(e.neumaier->outcome, "violated") << e.subject;
        }
        if (e.profile.is_sesqui_regular()) {
            ASSERT_TRUE(e.theorem5.has_value()) << e.subject;
            EXPECT_NE(e.theorem5->outcome, Outcome::Violated) << e.subject;
        }
    }
    EXPECT_EQ(entries[0].subject, "petersen");
    EXPECT_EQ(entries[0].theorem5->outcome, Outcome::BranchI);
    EXPECT_EQ(entries[4].theorem5->outcome, Outcome::Both);
    EXPECT_EQ(entries[5].theorem5->outcome, Outcome::Both);
    EXPECT_EQ(entries[6].theorem5->outcome, Outcome::BranchI);
    EXPECT_EQ(corpus_run().size(), entries.size());
}
