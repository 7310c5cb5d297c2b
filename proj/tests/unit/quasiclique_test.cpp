#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sesqui/error.hpp"
#include "sesqui/families.hpp"
#include "sesqui/induced.hpp"
#include "sesqui/quasiclique.hpp"

using namespace sesqui;

namespace {

std::vector<Vertex> range(Vertex first, Vertex last) {
    std::vector<Vertex> out(last - first);
    std::iota(out.begin(), out.end(), first);
    return out;
}

bool contains_all(const std::vector<Vertex>& haystack, const std::vector<Vertex>& needles) {
    return std::includes(haystack.begin(), haystack.end(), needles.begin(), needles.end());
}

// Vertices 0..n-1, adjacent iff |i - j| <= width. Consecutive windows of
// width+1 vertices are the maximal cliques.
Graph band(std::size_t n, std::size_t width) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n && j - i <= width; ++j) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST(MaximalCliques, Examples) {
    EXPECT_EQ(maximal_cliques(families::complete(6)), (std::vector<Clique>{range(0, 6)}));
    EXPECT_EQ(maximal_cliques(families::cycle(5)),
              (std::vector<Clique>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}));
    const auto petersen = maximal_cliques(families::petersen());
    EXPECT_EQ(petersen.size(), 15u);
    EXPECT_EQ(petersen, oracle::brute_maximal_cliques(families::petersen()));
    EXPECT_EQ(maximal_cliques(Graph::empty(3)), (std::vector<Clique>{{0}, {1}, {2}}));
    EXPECT_TRUE(maximal_cliques(Graph()).empty());
}

TEST(MaximalCliques, AgreeWithSubsetEnumeration) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 150; ++i) {
        const auto g = oracle::random_graph(rng, 1, 14);
        ASSERT_EQ(maximal_cliques(g), oracle::brute_maximal_cliques(g)) << i;
    }
}

TEST(PairRelated, Examples) {
    const auto k5 = families::complete(5);
    const Clique all = range(0, 5);
    EXPECT_TRUE(pair_related(all, all, k5, 2));

    const auto two = disjoint_union(families::complete(4), families::complete(4));
    EXPECT_FALSE(pair_related(range(0, 4), range(4, 8), two, 2));

    // Two 5-cliques sharing 4 vertices; 0 and 5 are the only non-adjacent pair.
    const auto g = band(6, 4);
    EXPECT_TRUE(pair_related(range(0, 5), range(1, 6), g, 2));
    EXPECT_FALSE(pair_related(range(0, 5), range(1, 6), g, 1));
    EXPECT_THROW(pair_related(range(0, 6), range(1, 6), g, 2), InputError);
}

TEST(PairRelated, ReflexiveAndSymmetric) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 60; ++i) {
        const auto g = oracle::random_graph(rng, 4, 12);
        const auto cliques = maximal_cliques(g);
        for (std::size_t m = 1; m <= 3; ++m) {
            for (const auto& a : cliques) {
                EXPECT_TRUE(pair_related(a, a, g, m));
                for (const auto& b : cliques) EXPECT_EQ(pair_related(a, b, g, m), pair_related(b, a, g, m));
            }
        }
    }
}

TEST(QuasiCliqueSystem, CompleteGraph) {
    const auto s = quasi_clique_system(families::complete(50), 2, 25);
    ASSERT_EQ(s.classes.size(), 1u);
    EXPECT_EQ(s.classes[0].quasi_clique, range(0, 50));
    EXPECT_TRUE(s.forbidden_ok);
}

TEST(QuasiCliqueSystem, TwoComponents) {
    const auto g = disjoint_union(families::complete(30), families::complete(30));
    const auto s = quasi_clique_system(g, 2, 25);
    ASSERT_EQ(s.classes.size(), 2u);
    EXPECT_EQ(s.classes[0].quasi_clique, range(0, 30));
    EXPECT_EQ(s.classes[1].quasi_clique, range(30, 60));
}

TEST(QuasiCliqueSystem, ExpandedHTwo) {
    const auto g = expand(catalog::h_t(2).hoffman, 30);
    const auto s = quasi_clique_system(g, 2, 25);
    ASSERT_EQ(s.classes.size(), 2u);
    auto first = range(0, 31);
    auto second = range(31, 61);
    second.insert(second.begin(), 0);
    EXPECT_EQ(s.classes[0].quasi_clique, first);
    EXPECT_EQ(s.classes[1].quasi_clique, second);
    EXPECT_TRUE(s.forbidden_ok);
}

TEST(QuasiCliqueSystem, Preconditions) {
    const auto g = families::complete(20);
    EXPECT_THROW(quasi_clique_system(g, 1, 25), InputError);
    EXPECT_THROW(quasi_clique_system(g, 2, 8), InputError);
    EXPECT_NO_THROW(quasi_clique_system(g, 2, 9));
    EXPECT_THROW(quasi_clique_system(g, 3, 15), InputError);
}

TEST(QuasiCliqueSystem, ClassInvariants) {
    for (const auto& entry : {catalog::h_t(3), catalog::h_t1(2), catalog::c_n(3)}) {
        const auto g = expand(entry.hoffman, 30);
        const auto s = quasi_clique_system(g, 2, 25);
        std::vector<Clique> seen;
        for (const auto& cls : s.classes) {
            for (const auto& c : cls.cliques) {
                EXPECT_GE(c.size(), 25u);
                EXPECT_TRUE(contains_all(cls.quasi_clique, c));
                for (const auto& d : cls.cliques) EXPECT_TRUE(pair_related(c, d, g, 2));
                EXPECT_EQ(std::count(seen.begin(), seen.end(), c), 0);
                seen.push_back(c);
            }
            for (const Vertex v : cls.quasi_clique) {
                const auto& rep = cls.cliques.front();
                const auto missing = std::count_if(rep.begin(), rep.end(),
                                                   [&](Vertex w) { return w != v && !g.adjacent(v, w); });
                EXPECT_LE(missing, 1);
            }
        }
    }
}

TEST(QuasiCliqueSystem, TransitivityViolationIsReported) {
    // Windows {0..9}, {1..10}, {2..11}: neighbouring windows are related,
    // the outer two are not. The band graph contains an induced K~_4.
    const auto g = band(12, 9);
    EXPECT_TRUE(contains_induced(g, families::k_tilde(2)));
    try {
        quasi_clique_system(g, 2, 9);
        FAIL() << "expected a transitivity violation";
    } catch (const TransitivityViolation& e) {
        const auto& t = e.triple();
        ASSERT_EQ(t.size(), 3u);
        EXPECT_TRUE(pair_related(t[0], t[1], g, 2));
        EXPECT_TRUE(pair_related(t[1], t[2], g, 2));
        EXPECT_FALSE(pair_related(t[0], t[2], g, 2));
    }
}

TEST(AssociatedHoffman, Examples) {
    const auto k50 = associated_hoffman_graph(families::complete(50), 2, 25);
    EXPECT_EQ(k50.hoffman, catalog::q_of(families::complete(50)).hoffman);

    const auto tri_free = associated_hoffman_graph(families::petersen(), 2, 9);
    EXPECT_TRUE(tri_free.hoffman.fat_vertices().empty());
    EXPECT_EQ(tri_free.hoffman.underlying(), families::petersen());

    const auto g = expand(catalog::h_t(2).hoffman, 30);
    const auto a = associated_hoffman_graph(g, 2, 25);
    EXPECT_EQ(a.hoffman.fat_vertices(), (std::vector<Vertex>{61, 62}));
    EXPECT_EQ(a.hoffman.fat_neighbors(0), (std::vector<Vertex>{61, 62}));
}

TEST(AssociatedHoffman, RecoversFatVertices) {
    for (const auto& entry : {catalog::h_t(1), catalog::h_t(2), catalog::h_t(3), catalog::h_t1(2), catalog::c_n(3)}) {
        const auto& h = entry.hoffman;
        const auto g = expand(h, 30);
        const auto a = associated_hoffman_graph(g, 2, 25);
        ASSERT_EQ(a.hoffman.fat_vertices().size(), h.fat_vertices().size()) << entry.name;
        for (std::size_t i = 0; i < h.fat_vertices().size(); ++i) {
            const auto block = expansion_block(h, 30, i);
            const bool covered = std::any_of(a.system.classes.begin(), a.system.classes.end(),
                                             [&](const QuasiCliqueClass& c) { return contains_all(c.quasi_clique, block); });
            EXPECT_TRUE(covered) << entry.name << " block " << i;
        }
    }
}

TEST(FormatSystem, ListsClasses) {
    const auto s = quasi_clique_system(disjoint_union(families::complete(30), families::complete(30)), 2, 25);
    const auto text = format_system(s);
    EXPECT_NE(text.find("class 0"), std::string::npos);
    EXPECT_NE(text.find("class 1"), std::string::npos);
}
