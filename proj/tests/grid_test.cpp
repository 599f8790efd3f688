#include "compgraph/audit.hpp"
#include "compgraph/grid.hpp"
#include "compgraph/oracles.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace compgraph;

namespace {

brute::matrix grid_matrix(const grid_construction& gc) {
    const auto n = gc.size();
    auto m = brute::empty_matrix(n);
    for (vertex v = 0; v < n; ++v)
        for (vertex w = 0; w < n; ++w)
            if (v != w && grid_adjacent(gc, v, w)) m[v][w] = true;
    return m;
}

/// Every selector pair (ks, ls) in [a]^b x [a]^b.
template <class F>
void for_each_selector_pair(const grid_construction& gc, F f) {
    const std::size_t b = gc.b(), a = gc.a();
    std::size_t total = 1;
    for (std::size_t i = 0; i < 2 * b; ++i) total *= a;
    std::vector<std::uint32_t> ks(b), ls(b);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (auto& k : ks) k = static_cast<std::uint32_t>(c % a), c /= a;
        for (auto& l : ls) l = static_cast<std::uint32_t>(c % a), c /= a;
        f(ks, ls);
    }
}

} // namespace

TEST(GridParams, FromNFollowsFormula) {
    const auto p = grid_params_from_n(100000, 5);
    // b = round(46.42 * (2.4435/11.5129)^{1/3}) = round(27.7) = 28, a = round(1e5 / 784) = 128
    EXPECT_EQ(p.b, 28u);
    EXPECT_EQ(p.a, 128u);
    EXPECT_EQ(p.seed, 5u);
    EXPECT_THROW(grid_params_from_n(99), error);
}

TEST(Grid, SizesAndLayout) {
    const auto gc = build_grid({3, 2, 7});
    EXPECT_EQ(gc.size(), 12u);
    for (vertex v = 0; v < 12; ++v) {
        const auto p = gc.locate(v);
        EXPECT_EQ(gc.at(p.row, p.col, p.pos), v);
        EXPECT_EQ(gc.f(p.row, p.col, gc.row_chain_index(v)), v);
        EXPECT_EQ(gc.g(p.row, p.col, gc.col_chain_index(v)), v);
    }
    EXPECT_THROW(build_grid({0, 2, 1}), error);
}

TEST(Grid, SeedChangesRowChainsOnly) {
    const auto g1 = build_grid({6, 3, 1}), g2 = build_grid({6, 3, 2});
    bool differs = false;
    for (vertex v = 0; v < g1.size(); ++v) {
        differs = differs || g1.row_chain_index(v) != g2.row_chain_index(v);
        EXPECT_EQ(g1.col_chain_index(v), g2.col_chain_index(v));
    }
    EXPECT_TRUE(differs);
    EXPECT_EQ(grid_union(build_grid({6, 3, 1})), grid_union(g1));
}

TEST(Grid, OneByTwoIsK4) {
    const auto g = grid_union(build_grid({1, 2, 0})).to_graph();
    EXPECT_EQ(g.order(), 4u);
    EXPECT_EQ(g.edge_count(), 6u);
}

TEST(Grid, EdgeCountMatchesClosedForm) {
    // cross-row-column pairs a^2 b^2 (b-1)^2 / 2, plus a matched pairs per same-row or
    // same-column cell pair: 2 * b * C(b,2) * a.
    for (std::uint32_t a = 1; a <= 5; ++a)
        for (std::uint32_t b = 1; b <= 4; ++b) {
            const auto g = grid_union(build_grid({a, b, a * 10ULL + b}));
            const std::size_t want = std::size_t{a} * a * b * b * (b - 1) * (b - 1) / 2 + std::size_t{a} * b * b * (b - 1);
            EXPECT_EQ(g.edge_count(), want) << a << "x" << b;
            EXPECT_EQ(grid_edge_count({a, b, 0}), want);
        }
}

TEST(Grid, ComparatorsAgreeWithMaterializedOrders) {
    const auto gc = build_grid({3, 3, 4});
    const auto o1 = grid_order1(gc), o2 = grid_order2(gc);
    for (vertex v = 0; v < gc.size(); ++v)
        for (vertex w = 0; w < gc.size(); ++w) {
            EXPECT_EQ(o1.less(v, w), less1(gc, v, w));
            EXPECT_EQ(o2.less(v, w), less2(gc, v, w));
        }
}

TEST(Grid, AuditPassesAcrossParameters) {
    for (std::uint32_t a = 1; a <= 4; ++a)
        for (std::uint32_t b = 1; b <= 4; ++b)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const auto gc = build_grid({a, b, seed});
                const auto audit = audit_grid(gc);
                EXPECT_TRUE(audit.ok()) << a << "x" << b << " seed " << seed;
                EXPECT_TRUE(brute::is_strict_partial_order([&] {
                    auto m = brute::empty_matrix(gc.size());
                    for (auto [u, v] : grid_order1(gc).pairs()) m[u][v] = true;
                    return m;
                }()));
            }
}

TEST(Grid, IndependenceNumberEqualsA) {
    for (std::uint32_t a = 1; a <= 4; ++a)
        for (std::uint32_t b = 1; b <= 2; ++b)
            for (std::uint64_t seed = 0; seed < 4; ++seed) {
                const auto gc = build_grid({a, b, seed});
                if (gc.size() > 16) continue;
                EXPECT_EQ(brute::max_independent(grid_matrix(gc)), a);
                const auto g = grid_union(gc).to_graph();
                EXPECT_TRUE(is_independent(g, alpha_witness(gc)));
            }
}

TEST(Grid, RowAndColumnChainsAreCliques) {
    const auto gc = build_grid({4, 3, 9});
    const auto g = grid_union(gc).to_graph();
    for (std::uint32_t i = 0; i < 3; ++i)
        for (std::uint32_t k = 0; k < 4; ++k) {
            EXPECT_TRUE(is_clique(g, row_chain(gc, i, k)));
            EXPECT_TRUE(is_clique(g, col_chain(gc, i, k)));
        }
    EXPECT_THROW(row_chain(gc, 3, 0), error);
    EXPECT_THROW(col_chain(gc, 0, 4), error);
}

TEST(Grid, StructuralCliquesAreCliques) {
    const auto gc = build_grid({2, 3, 5});
    const auto g = grid_union(gc).to_graph();
    for_each_selector_pair(gc, [&](const auto& ks, const auto& ls) { EXPECT_TRUE(is_clique(g, structural_clique(gc, ks, ls))); });
    const std::vector<std::uint32_t> short_sel{0};
    EXPECT_THROW(structural_clique(gc, short_sel, short_sel), error);
}

TEST(Grid, MaximalCliquesAreStructural) {
    // a = 2, b = 2: 2^4 = 16 selector pairs cover every maximal clique.
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto gc = build_grid({2, 2, seed});
        std::set<vertex_set> structural;
        for_each_selector_pair(gc, [&](const auto& ks, const auto& ls) { structural.insert(structural_clique(gc, ks, ls)); });
        const auto brute_max = brute::maximal_cliques(grid_matrix(gc));
        for (const auto& c : brute_max) EXPECT_TRUE(structural.count(vertex_set(c.begin(), c.end()))) << "seed " << seed;
    }
}

TEST(Grid, GreedyWitness) {
    const auto full = build_grid({1, 3, 0});
    EXPECT_EQ(greedy_clique_witness(full).size(), 9u);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto gc = build_grid({5, 4, seed});
        const auto w = greedy_clique_witness(gc);
        EXPECT_TRUE(is_clique(grid_union(gc).to_graph(), w));
        EXPECT_GE(w.size(), gc.b());
    }
}
