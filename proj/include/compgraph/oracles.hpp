#pragma once

// Exact small-scale oracles: maximum clique / independent set, maximal-clique enumeration,
// and the largest balanced biclique (as a subgraph, one part counted).

#include "compgraph/bitset.hpp"
#include "compgraph/error.hpp"
#include "compgraph/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace compgraph {

struct oracle_result {
    std::size_t value = 0;
    /// Clique / independent set: one set. Biclique: the two parts.
    std::vector<vertex_set> witness;
    std::size_t explored = 0;
    bool exact = true;
};

inline constexpr std::size_t default_node_budget = 50'000'000;
inline constexpr std::size_t default_clique_limit = 40;
inline constexpr std::size_t default_biclique_limit = 24;

namespace detail {

/// Branch and bound with greedy-coloring bounds over bitset candidate sets.
class clique_search {
public:
    clique_search(const graph& g, std::size_t budget) : adj_(g.adjacency_bitsets()), budget_(budget), n_(g.order()) {}

    oracle_result run() {
        bitset candidates(n_);
        candidates.set_all();
        vertex_set current;
        expand(current, candidates);
        oracle_result res;
        res.value = best_.size();
        std::sort(best_.begin(), best_.end());
        res.witness.push_back(best_);
        res.explored = explored_;
        res.exact = !aborted_;
        return res;
    }

private:
    void expand(vertex_set& current, bitset candidates) {
        if (aborted_) return;
        if (++explored_ > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<vertex> order;
        std::vector<std::size_t> bound;
        color_sort(candidates, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + bound[i] <= best_.size()) return;
            const vertex v = order[i];
            current.push_back(v);
            bitset next = candidates & adj_[v];
            if (next.none()) {
                if (current.size() > best_.size()) best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            candidates.reset(v);
            if (aborted_) return;
        }
    }

    void color_sort(const bitset& candidates, std::vector<vertex>& order, std::vector<std::size_t>& bound) const {
        bitset uncolored = candidates;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            bitset available = uncolored;
            while (available.any()) {
                const auto v = available.first();
                available.reset(v);
                available.subtract(adj_[v]);
                uncolored.reset(v);
                order.push_back(static_cast<vertex>(v));
                bound.push_back(color);
            }
        }
    }

    std::vector<bitset> adj_;
    std::size_t budget_;
    std::size_t n_;
    std::size_t explored_ = 0;
    bool aborted_ = false;
    vertex_set best_;
};

} // namespace detail

/// Exact maximum clique. When the node budget runs out the best clique found so far is
/// returned with exact = false.
inline oracle_result max_clique_exact(const graph& g, std::size_t node_budget = default_node_budget) {
    return detail::clique_search(g, node_budget).run();
}

inline oracle_result max_independent_exact(const graph& g, std::size_t node_budget = default_node_budget) {
    return max_clique_exact(g.complement(), node_budget);
}

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting), each sorted, listed in
/// lexicographic order.
inline std::vector<vertex_set> enumerate_maximal_cliques(const graph& g, std::size_t limit = default_clique_limit) {
    if (g.order() > limit)
        throw error(errc::limit_exceeded, "maximal-clique enumeration limited to n <= " + std::to_string(limit));
    const auto adj = g.adjacency_bitsets();
    std::vector<vertex_set> out;
    vertex_set r;

    auto recurse = [&](auto&& self, bitset p, bitset x) -> void {
        if (p.none()) {
            if (x.none()) {
                auto clique = r;
                std::sort(clique.begin(), clique.end());
                out.push_back(std::move(clique));
            }
            return;
        }
        // Pivot maximizing |P ∩ N(u)| over u in P ∪ X.
        std::size_t pivot = 0, best = 0;
        bool have = false;
        auto pick = [&](std::size_t u) {
            const auto c = p.intersection_count(adj[u]);
            if (!have || c > best) {
                pivot = u;
                best = c;
                have = true;
            }
        };
        p.for_each(pick);
        x.for_each(pick);
        bitset branch = p;
        branch.subtract(adj[pivot]);
        branch.for_each([&](std::size_t v) {
            r.push_back(static_cast<vertex>(v));
            self(self, p & adj[v], x & adj[v]);
            r.pop_back();
            p.reset(v);
            x.set(v);
        });
    };
    bitset p(g.order()), x(g.order());
    p.set_all();
    if (g.order() > 0) recurse(recurse, p, x);
    std::sort(out.begin(), out.end());
    return out;
}

/// Largest t with disjoint X, Y, |X| = |Y| = t and every X-Y pair adjacent. Searches X in
/// increasing vertex order while tracking the common neighborhood C(X); t = min(|X|, |C(X)|).
/// Stops with exact = false after node_budget search nodes.
inline oracle_result max_balanced_biclique_exact(const graph& g, std::size_t limit = default_biclique_limit,
                                                 std::size_t node_budget = default_node_budget) {
    const std::size_t n = g.order();
    if (n > limit) throw error(errc::limit_exceeded, "balanced-biclique search limited to n <= " + std::to_string(limit));
    const auto adj = g.adjacency_bitsets();
    oracle_result res;
    vertex_set x, best_x;
    bitset best_c(n);
    std::size_t best = 0;

    auto recurse = [&](auto&& self, std::size_t next, const bitset& common) -> void {
        if (!res.exact) return;
        if (++res.explored > node_budget) {
            res.exact = false;
            return;
        }
        const std::size_t c = common.count();
        const std::size_t t = std::min(x.size(), c);
        if (t > best) {
            best = t;
            best_x = x;
            best_c = common;
        }
        for (std::size_t v = next; v < n; ++v) {
            if (std::min(x.size() + (n - v), c) <= best) return;
            bitset nc = common & adj[v];
            if (nc.count() <= best) continue;
            x.push_back(static_cast<vertex>(v));
            self(self, v + 1, nc);
            x.pop_back();
            if (!res.exact) return;
        }
    };
    bitset all(n);
    all.set_all();
    recurse(recurse, 0, all);

    res.value = best;
    vertex_set left(best_x.begin(), best_x.begin() + static_cast<std::ptrdiff_t>(best));
    vertex_set right;
    best_c.for_each([&](std::size_t v) {
        if (right.size() < best) right.push_back(static_cast<vertex>(v));
    });
    res.witness = {left, right};
    return res;
}

inline bool is_biclique(const graph& g, std::span<const vertex> x, std::span<const vertex> y) {
    for (vertex u : x)
        for (vertex v : y)
            if (u == v || !g.adjacent(u, v)) return false;
    return true;
}

} // namespace compgraph
