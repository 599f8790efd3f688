#include "compgraph/oracles.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

using namespace compgraph;

namespace {

graph from_matrix(const brute::matrix& m) {
    std::vector<vertex_pair> e;
    for (vertex u = 0; u < m.size(); ++u)
        for (vertex v = u + 1; v < m.size(); ++v)
            if (m[u][v]) e.emplace_back(u, v);
    return graph::from_edges(m.size(), e);
}

graph complete_bipartite(std::size_t p, std::size_t q) {
    std::vector<vertex_pair> e;
    for (vertex u = 0; u < p; ++u)
        for (vertex v = 0; v < q; ++v) e.emplace_back(u, static_cast<vertex>(p + v));
    return graph::from_edges(p + q, e);
}

} // namespace

TEST(MaxClique, SmallExamples) {
    EXPECT_EQ(max_clique_exact(graph(0)).value, 0u);
    EXPECT_EQ(max_clique_exact(graph(5)).value, 1u);
    EXPECT_EQ(max_clique_exact(complete_bipartite(3, 3)).value, 2u);
    EXPECT_EQ(max_independent_exact(complete_bipartite(3, 5)).value, 5u);
    const std::vector<vertex_pair> tri{{0, 1}, {1, 2}, {0, 2}, {2, 3}};
    const auto res = max_clique_exact(graph::from_edges(4, tri));
    EXPECT_EQ(res.value, 3u);
    EXPECT_EQ(res.witness.front(), (vertex_set{0, 1, 2}));
    EXPECT_TRUE(res.exact);
}

TEST(MaxClique, AgreesWithExhaustiveSearch) {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t n = 4 + seed % 13;
        const auto m = brute::random_graph(n, 0.2 + 0.6 * static_cast<double>(seed % 7) / 6.0, seed);
        const auto g = from_matrix(m);
        const auto c = max_clique_exact(g);
        EXPECT_EQ(c.value, brute::max_clique(m)) << "seed " << seed;
        EXPECT_TRUE(is_clique(g, c.witness.front()));
        const auto i = max_independent_exact(g);
        EXPECT_EQ(i.value, brute::max_independent(m));
        EXPECT_TRUE(is_independent(g, i.witness.front()));
    }
}

TEST(MaxClique, BudgetExhaustionIsReported) {
    const auto g = from_matrix(brute::random_graph(40, 0.5, 3));
    const auto res = max_clique_exact(g, 3);
    EXPECT_FALSE(res.exact);
    EXPECT_TRUE(is_clique(g, res.witness.front()));
}

TEST(MaximalCliques, Examples) {
    const std::vector<vertex_pair> tri{{0, 1}, {1, 2}, {0, 2}};
    EXPECT_EQ(enumerate_maximal_cliques(graph::from_edges(3, tri)), (std::vector<vertex_set>{{0, 1, 2}}));
    const std::vector<vertex_pair> matching{{0, 1}, {2, 3}};
    EXPECT_EQ(enumerate_maximal_cliques(graph::from_edges(4, matching)), (std::vector<vertex_set>{{0, 1}, {2, 3}}));
    EXPECT_EQ(enumerate_maximal_cliques(graph(2)), (std::vector<vertex_set>{{0}, {1}}));
    try {
        enumerate_maximal_cliques(graph(41));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::limit_exceeded);
    }
}

TEST(MaximalCliques, AgreeWithExhaustiveListing) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 3 + seed % 12;
        const auto m = brute::random_graph(n, 0.5, seed + 500);
        const auto g = from_matrix(m);
        const auto got = enumerate_maximal_cliques(g);
        const auto want = brute::maximal_cliques(m);
        ASSERT_EQ(got.size(), want.size()) << "seed " << seed;
        for (std::size_t i = 0; i < got.size(); ++i) EXPECT_TRUE(std::equal(got[i].begin(), got[i].end(), want[i].begin(), want[i].end()));
        // Pairwise non-nested and containing a maximum clique.
        for (std::size_t i = 0; i < got.size(); ++i)
            for (std::size_t j = 0; j < got.size(); ++j)
                if (i != j) {
                    EXPECT_FALSE(std::includes(got[i].begin(), got[i].end(), got[j].begin(), got[j].end()));
                }
        const auto best = max_clique_exact(g).witness.front();
        EXPECT_TRUE(std::any_of(got.begin(), got.end(), [&](const vertex_set& c) {
            return std::includes(c.begin(), c.end(), best.begin(), best.end());
        }));
    }
}

TEST(Biclique, Examples) {
    const auto k33 = max_balanced_biclique_exact(complete_bipartite(3, 3));
    EXPECT_EQ(k33.value, 3u);
    EXPECT_TRUE(is_biclique(complete_bipartite(3, 3), k33.witness[0], k33.witness[1]));
    EXPECT_EQ(max_balanced_biclique_exact(graph(6)).value, 0u);
    EXPECT_EQ(max_balanced_biclique_exact(complete_bipartite(2, 5)).value, 2u);
    try {
        max_balanced_biclique_exact(graph(25));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::limit_exceeded);
    }
}

TEST(Biclique, TwoDisjointK4) {
    // Complement of K_{4,4}: a biclique must sit inside one K4, so t = 2.
    const auto g = complete_bipartite(4, 4).complement();
    EXPECT_EQ(max_balanced_biclique_exact(g).value, 2u);
}

TEST(Biclique, AgreesWithExhaustiveAssignment) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const std::size_t n = 2 + seed % 9;
        const auto m = brute::random_graph(n, 0.3 + 0.1 * static_cast<double>(seed % 6), seed + 900);
        const auto g = from_matrix(m);
        const auto res = max_balanced_biclique_exact(g);
        EXPECT_EQ(res.value, brute::max_balanced_biclique(m)) << "seed " << seed;
        ASSERT_EQ(res.witness.size(), 2u);
        EXPECT_EQ(res.witness[0].size(), res.value);
        EXPECT_EQ(res.witness[1].size(), res.value);
        EXPECT_TRUE(is_biclique(g, res.witness[0], res.witness[1]));
    }
}
