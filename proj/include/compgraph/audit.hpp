#pragma once

// Structural audits shared by the verifier, the experiment drivers and the tests.

#include "compgraph/grid.hpp"
#include "compgraph/poset.hpp"
#include "compgraph/ranked.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace compgraph {

struct grid_audit {
    order_audit order1;
    order_audit order2;
    std::size_t overlapping_pairs = 0;  // comparable in both orders
    std::size_t coverage_failures = 0;  // different row and column, but not comparable in exactly one way
    std::size_t same_line_failures = 0; // same row/column, different chain (or same cell), yet comparable

    bool ok() const noexcept {
        return order1.ok() && order2.ok() && overlapping_pairs == 0 && coverage_failures == 0 && same_line_failures == 0;
    }
};

inline grid_audit audit_grid(const grid_construction& gc) {
    grid_audit out;
    out.order1 = is_partial_order(grid_order1(gc));
    out.order2 = is_partial_order(grid_order2(gc));
    const auto n = static_cast<vertex>(gc.size());
    for (vertex v = 0; v < n; ++v)
        for (vertex w = v + 1; w < n; ++w) {
            const bool f1 = less1(gc, v, w), b1 = less1(gc, w, v);
            const bool f2 = less2(gc, v, w), b2 = less2(gc, w, v);
            const int ways = f1 + b1 + f2 + b2;
            if ((f1 || b1) && (f2 || b2)) ++out.overlapping_pairs;
            const auto x = gc.locate(v), y = gc.locate(w);
            if (x.row != y.row && x.col != y.col) {
                if (ways != 1) ++out.coverage_failures;
            } else {
                const bool same_chain = (x.row == y.row && x.col != y.col && gc.row_chain_index(v) == gc.row_chain_index(w)) ||
                                        (x.col == y.col && x.row != y.row && x.pos == y.pos);
                if (!same_chain && ways != 0) ++out.same_line_failures;
                if (same_chain && ways != 1) ++out.same_line_failures;
            }
        }
    return out;
}

struct ranked_audit {
    std::vector<order_audit> orders;
    bool orders_checked = false;
    std::size_t rank_pairs_checked = 0;
    /// overlapping variant: rank pairs alpha != beta with no comparable (s, direction);
    /// disjoint variant: rank pairs without exactly one.
    std::size_t rank_coverage_failures = 0;
    /// Union edges carrying more than one label (must be 0 for the disjoint variant).
    std::size_t multi_label_edges = 0;
    std::size_t max_degree = 0;
    double degree_bound = 0.0;
    bool degree_checked = false; // only meaningful for d = 3

    bool orders_ok() const noexcept {
        for (const auto& o : orders)
            if (!o.ok()) return false;
        return true;
    }
};

/// Counts (s, direction) pairs under which distinct ranks are comparable.
inline std::size_t rank_comparabilities(ranked_variant variant, std::span<const std::int64_t> alpha,
                                        std::span<const std::int64_t> beta) {
    std::size_t ways = 0;
    for (std::size_t s = 0; s < alpha.size(); ++s)
        ways += rank_precedes(variant, s, alpha, beta) + rank_precedes(variant, s, beta, alpha);
    return ways;
}

inline ranked_audit audit_ranked(const ranked_construction& rc, bool check_orders = true) {
    ranked_audit out;
    const auto& p = rc.params();
    if (check_orders) {
        out.orders_checked = true;
        for (const auto& o : rc.orders()) out.orders.push_back(is_partial_order(o));
    }
    const std::size_t cells = p.cell_count();
    for (std::size_t ca = 0; ca < cells; ++ca)
        for (std::size_t cb = ca + 1; cb < cells; ++cb) {
            const auto alpha = rc.cell_rank(ca), beta = rc.cell_rank(cb);
            const auto ways = rank_comparabilities(p.variant, alpha, beta);
            ++out.rank_pairs_checked;
            const bool good = p.variant == ranked_variant::disjoint ? ways == 1 : ways >= 1;
            if (!good) ++out.rank_coverage_failures;
        }
    const auto g = ranked_union(rc);
    for (const auto& e : g.edges())
        if (std::popcount(e.labels) > 1) ++out.multi_label_edges;
    out.max_degree = max_degree(rc);
    out.degree_bound = degree_bound(p.r, p.b);
    out.degree_checked = p.d == 3;
    return out;
}

} // namespace compgraph
