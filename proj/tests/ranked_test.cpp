#include "compgraph/audit.hpp"
#include "compgraph/oracles.hpp"
#include "compgraph/ranked.hpp"
#include "compgraph/rng.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace compgraph;

namespace {

using rank_t = std::vector<std::int64_t>;

bool wp(std::size_t s, const rank_t& a, const rank_t& b) { return weakly_precedes<std::int64_t>(s, a, b); }
bool sp(std::size_t s, const rank_t& a, const rank_t& b) { return precedes<std::int64_t>(s, a, b); }
bool dp(std::size_t s, const rank_t& a, const rank_t& b) { return precedes_disjoint<std::int64_t>(s, a, b); }

/// All vectors in [0, b)^r.
std::vector<rank_t> all_ranks(std::size_t r, std::int64_t b) {
    std::vector<rank_t> out{rank_t{}};
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<rank_t> next;
        for (const auto& p : out)
            for (std::int64_t c = 0; c < b; ++c) {
                auto q = p;
                q.push_back(c);
                next.push_back(q);
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

TEST(RankComparators, Examples) {
    const rank_t o{0, 0}, d{1, 1}, e{1, 0}, f{2, 1};
    EXPECT_TRUE(wp(0, o, d));
    EXPECT_TRUE(wp(1, o, d));
    EXPECT_TRUE(wp(0, o, o));
    EXPECT_FALSE(sp(0, o, o));
    EXPECT_TRUE(sp(0, o, e));
    EXPECT_FALSE(sp(1, o, e));
    EXPECT_TRUE(sp(0, o, f));
    EXPECT_FALSE(sp(1, o, f));
    EXPECT_TRUE(dp(0, o, d));
    EXPECT_FALSE(dp(1, o, d));
    EXPECT_EQ(linf_distance<std::int64_t>(o, f), 2);
    const rank_t short_rank{0};
    EXPECT_THROW(wp(0, o, short_rank), error);
    EXPECT_THROW(wp(2, o, d), error);
}

TEST(RankComparators, OverlappingCoversEveryDistinctPair) {
    for (std::size_t r = 1; r <= 3; ++r)
        for (const auto& a : all_ranks(r, 4))
            for (const auto& b : all_ranks(r, 4)) {
                if (a == b) continue;
                std::size_t ways = 0;
                for (std::size_t s = 0; s < r; ++s) ways += sp(s, a, b) + sp(s, b, a);
                EXPECT_GE(ways, 1u);
            }
}

TEST(RankComparators, DisjointVariantIsUnique) {
    for (std::size_t r = 1; r <= 3; ++r)
        for (const auto& a : all_ranks(r, 4))
            for (const auto& b : all_ranks(r, 4)) {
                if (a == b) continue;
                std::size_t ways = 0;
                for (std::size_t s = 0; s < r; ++s) {
                    ways += dp(s, a, b) + dp(s, b, a);
                    if (dp(s, a, b)) {
                        EXPECT_TRUE(sp(s, a, b));
                    }
                }
                EXPECT_EQ(ways, 1u);
            }
}

TEST(RankComparators, WeakOrderIsTransitive) {
    for (std::size_t r = 1; r <= 3; ++r) {
        const auto ranks = all_ranks(r, 3);
        for (std::size_t s = 0; s < r; ++s)
            for (const auto& a : ranks)
                for (const auto& b : ranks)
                    for (const auto& c : ranks)
                        if (sp(s, a, b) && sp(s, b, c)) {
                            EXPECT_TRUE(sp(s, a, c));
                        }
    }
}

TEST(RankedParams, FromNFollowsFormula) {
    // b = round(0.5 ln(1e4) / ln 9) = round(2.096) = 2, a = round(1e4 / 4) = 2500
    const auto p = ranked_params_from_n(10000, 0.5, 2, 3);
    EXPECT_EQ(p.b, 2u);
    EXPECT_EQ(p.a, 2500u);
    EXPECT_EQ(p.r, 2u);
    EXPECT_EQ(p.d, 3u);
    // a * d must be even: a = round(1001 / 1) = 1001 is bumped to 1002.
    EXPECT_EQ(ranked_params_from_n(1001, 0.1, 1).a, 1002u);
    EXPECT_THROW(ranked_params_from_n(50, 0.5, 2), error);
    EXPECT_THROW(ranked_params_from_n(1000, 0.0, 2), error);
    EXPECT_DOUBLE_EQ(degree_bound(2, 2), 36.0);
}

TEST(Ranked, SingleRankHasNoEdges) {
    const auto rc = build_ranked({1, 1, 4, 3, 0, ranked_variant::overlapping});
    EXPECT_EQ(ranked_union(rc).edge_count(), 0u);
}

TEST(Ranked, TwoRanksOnK4GiveCompleteBipartite) {
    const auto rc = build_ranked({1, 2, 4, 3, 0, ranked_variant::overlapping});
    const auto g = ranked_union(rc).to_graph();
    EXPECT_EQ(g.edge_count(), 16u);
    EXPECT_EQ(max_degree(rc), 4u);
    EXPECT_LE(4.0, degree_bound(1, 2));
    for (vertex u = 0; u < 4; ++u)
        for (vertex v = 4; v < 8; ++v) EXPECT_TRUE(g.adjacent(u, v));
    const auto comp = g.complement();
    EXPECT_EQ(brute::max_balanced_biclique(brute::from_edges(8, comp.edges())), 2u);
}

TEST(Ranked, EdgeCountWhenEveryPowerIsComplete) {
    // r = 2, b = 2, a = 4: all six cell pairs are at distance 1 and H^1 = K4 with loops.
    for (auto variant : {ranked_variant::overlapping, ranked_variant::disjoint}) {
        const auto rc = build_ranked({2, 2, 4, 3, 1, variant});
        EXPECT_EQ(ranked_union(rc).edge_count(), 96u);
        const auto audit = audit_ranked(rc);
        EXPECT_TRUE(audit.orders_ok());
        EXPECT_EQ(audit.rank_coverage_failures, 0u);
        if (variant == ranked_variant::disjoint) {
            EXPECT_EQ(audit.multi_label_edges, 0u);
        } else {
            EXPECT_GT(audit.multi_label_edges, 0u);
        }
    }
}

TEST(Ranked, AdjacencyFollowsDefinition) {
    const ranked_params p{2, 3, 10, 3, 4, ranked_variant::overlapping};
    const auto rc = build_ranked(p);
    const auto& h = rc.expander().as_graph();
    const auto d = brute::distances([&] {
        auto m = brute::empty_matrix(h.order());
        for (auto [u, v] : h.edges()) m[u][v] = m[v][u] = true;
        return m;
    }());
    for (std::size_t s = 0; s < p.r; ++s)
        for (vertex u = 0; u < rc.size(); ++u)
            for (vertex v = 0; v < rc.size(); ++v) {
                const auto ru = rc.rank(u), rv = rc.rank(v);
                const bool want = sp(s, ru, rv) &&
                                  d[rc.label(u)][rc.label(v)] <= static_cast<std::size_t>(linf_distance<std::int64_t>(ru, rv));
                EXPECT_EQ(rc.orders()[s].less(u, v), want);
            }
}

TEST(Ranked, AuditsAcrossSweep) {
    for (std::uint32_t r = 1; r <= 3; ++r)
        for (std::uint32_t b = 1; b <= 3; ++b)
            for (auto variant : {ranked_variant::overlapping, ranked_variant::disjoint}) {
                const auto rc = build_ranked({r, b, 6, 3, r * 100ULL + b, variant});
                const auto audit = audit_ranked(rc);
                EXPECT_TRUE(audit.orders_ok()) << r << "," << b;
                EXPECT_EQ(audit.rank_coverage_failures, 0u);
                EXPECT_LE(static_cast<double>(audit.max_degree), audit.degree_bound);
                if (variant == ranked_variant::disjoint) {
                    EXPECT_EQ(audit.multi_label_edges, 0u);
                }
            }
}

TEST(Ranked, RankLayout) {
    const auto rc = build_ranked({3, 2, 4, 3, 0, ranked_variant::overlapping});
    EXPECT_EQ(rc.cell_rank(0), (rank_t{0, 0, 0}));
    EXPECT_EQ(rc.cell_rank(1), (rank_t{0, 0, 1}));
    EXPECT_EQ(rc.cell_rank(4), (rank_t{1, 0, 0}));
    EXPECT_EQ(rc.rank(4 * 5 + 3), (rank_t{1, 0, 1}));
    EXPECT_EQ(rc.label(23), 3u);
    EXPECT_EQ(rc.powers().size(), 2u);
}

TEST(Separation, ExampleOnALine) {
    const std::vector<point> A{{0}, {1}, {2}, {3}}, B{{5}, {-1}, {4}, {6}};
    const std::vector<double> normal{1};
    const auto sep = separate_multisets(A, B, normal);
    // ceil(4/2) = 2; A's second smallest is 1, B's is 4: A goes below with threshold 1.
    EXPECT_TRUE(sep.a_below);
    EXPECT_DOUBLE_EQ(sep.threshold, 1.0);
    EXPECT_EQ(sep.a_indices, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(sep.b_indices, (std::vector<std::size_t>{0, 3}));
}

TEST(Separation, Errors) {
    const std::vector<point> A{{0, 0}}, B{{1, 1}}, C{{1, 1}, {2, 2}};
    const std::vector<double> zero{0, 0}, good{1, 0}, bad{1};
    EXPECT_THROW(separate_multisets(A, C, good), error);
    EXPECT_THROW(separate_multisets(A, B, zero), error);
    EXPECT_THROW(separate_multisets(A, B, bad), error);
}

TEST(Separation, PostconditionsOnRandomInstances) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        counter_rng rng(seed);
        const std::size_t r = 1 + rng.below(4), m = 1 + rng.below(40);
        std::vector<point> A(m, point(r)), B(m, point(r));
        for (auto* set : {&A, &B})
            for (auto& p : *set)
                for (auto& c : p) c = static_cast<double>(rng.below(6));
        std::vector<double> normal(r);
        for (auto& c : normal) c = static_cast<double>(rng.below(5)) - 2.0;
        if (std::all_of(normal.begin(), normal.end(), [](double c) { return c == 0; })) normal[0] = 1;
        const auto sep = separate_multisets(A, B, normal);
        const std::size_t need = (m + 1) / 2;
        ASSERT_EQ(sep.a_indices.size(), need);
        ASSERT_EQ(sep.b_indices.size(), need);
        auto proj = [&](const point& p) {
            double s = 0;
            for (std::size_t i = 0; i < r; ++i) s += p[i] * normal[i];
            return s;
        };
        for (auto i : sep.a_indices)
            for (auto j : sep.b_indices) {
                if (sep.a_below) {
                    EXPECT_LE(proj(A[i]), proj(B[j]));
                } else {
                    EXPECT_GE(proj(A[i]), proj(B[j]));
                }
            }
    }
}

TEST(ComparableSubsets, PostconditionsOnRandomInstances) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        counter_rng rng(seed + 1000);
        const std::size_t r = 1 + rng.below(4), m = 1 + rng.below(64);
        std::vector<ranked_item> X(m), Y(m);
        std::uint64_t id = 0;
        for (auto* set : {&X, &Y})
            for (auto& it : *set) {
                it.id = id++;
                it.rank.resize(r);
                for (auto& c : it.rank) c = static_cast<double>(rng.below(5));
            }
        const auto res = find_comparable_subsets(X, Y, r);
        const double floor_size = static_cast<double>(m) * std::pow(2.0, -static_cast<double>(r * r));
        ASSERT_EQ(res.x_ids.size(), res.y_ids.size());
        EXPECT_GE(static_cast<double>(res.x_ids.size()), floor_size);
        std::vector<point> xs, ys;
        for (auto i : res.x_ids) xs.push_back(X[i].rank);
        for (auto i : res.y_ids) ys.push_back(Y[i - m].rank);
        EXPECT_TRUE(res.x_below ? dominates(res.s, xs, ys) : dominates(res.s, ys, xs)) << "seed " << seed;
    }
}
