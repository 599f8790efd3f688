#pragma once

// Strict partial orders, their comparability graphs, labeled unions of several
// comparability graphs, and the product-of-heights coloring that yields a
// homogeneous set of size n^{1/(r+1)} in any union of r comparability graphs.

#include "compgraph/bitset.hpp"
#include "compgraph/error.hpp"
#include "compgraph/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace compgraph {

/// Strict partial order on [0, n), stored transitively closed as sorted successor lists.
class strict_order {
public:
    strict_order() = default;
    /// Antichain on n elements.
    explicit strict_order(std::size_t n) : succ_(n) {}

    /// Adopts a relation the caller guarantees is closed. Nothing is validated here;
    /// audits go through is_partial_order().
    static strict_order from_closed(std::size_t n, std::span<const vertex_pair> rel) {
        strict_order p(n);
        for (auto [u, v] : rel) {
            if (u >= n || v >= n) throw error(errc::index_out_of_range, "relation pair outside [0, n)");
            p.succ_[u].push_back(v);
        }
        p.normalize();
        return p;
    }

    /// Same as from_closed, from per-vertex successor lists.
    static strict_order from_successors(std::vector<std::vector<vertex>> succ) {
        strict_order p;
        p.succ_ = std::move(succ);
        for (const auto& s : p.succ_)
            for (vertex v : s)
                if (v >= p.succ_.size()) throw error(errc::index_out_of_range, "successor outside [0, n)");
        p.normalize();
        return p;
    }

    std::size_t size() const noexcept { return succ_.size(); }

    std::size_t relation_size() const noexcept {
        std::size_t m = 0;
        for (const auto& s : succ_) m += s.size();
        return m;
    }

    bool less(vertex u, vertex v) const {
        return std::binary_search(succ_[u].begin(), succ_[u].end(), v);
    }
    bool comparable(vertex u, vertex v) const { return less(u, v) || less(v, u); }

    std::span<const vertex> successors(vertex v) const { return succ_[v]; }

    std::vector<vertex_pair> pairs() const {
        std::vector<vertex_pair> out;
        out.reserve(relation_size());
        for (vertex u = 0; u < succ_.size(); ++u)
            for (vertex v : succ_[u]) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const strict_order&, const strict_order&) = default;

private:
    void normalize() {
        for (auto& s : succ_) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
    }

    std::vector<std::vector<vertex>> succ_;
};

/// Violations found by is_partial_order(). Transitivity triples (u, v, w) have u != w;
/// the u == w case already shows up as an antisymmetry violation.
struct order_audit {
    std::vector<vertex> irreflexivity;
    std::vector<vertex_pair> antisymmetry; // reported once, as (min, max)
    std::vector<std::array<vertex, 3>> transitivity;

    bool ok() const noexcept { return irreflexivity.empty() && antisymmetry.empty() && transitivity.empty(); }
    std::size_t violation_count() const noexcept {
        return irreflexivity.size() + antisymmetry.size() + transitivity.size();
    }
};

namespace detail {

inline constexpr std::size_t dense_audit_limit = 4096;

inline std::uint64_t pair_key(vertex u, vertex v) { return (std::uint64_t{u} << 32) | v; }

} // namespace detail

inline order_audit is_partial_order(std::span<const vertex_pair> rel, std::size_t n) {
    order_audit audit;
    std::vector<std::vector<vertex>> succ(n);
    for (auto [u, v] : rel) {
        if (u >= n || v >= n) throw error(errc::index_out_of_range, "relation pair outside [0, n)");
        succ[u].push_back(v);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    auto has = [&](vertex u, vertex v) { return std::binary_search(succ[u].begin(), succ[u].end(), v); };

    for (vertex u = 0; u < n; ++u)
        for (vertex v : succ[u]) {
            if (u == v) audit.irreflexivity.push_back(u);
            else if (u < v && has(v, u)) audit.antisymmetry.emplace_back(u, v);
        }

    if (n <= detail::dense_audit_limit) {
        std::vector<bitset> rows(n, bitset(n));
        for (vertex u = 0; u < n; ++u)
            for (vertex v : succ[u]) rows[u].set(v);
        for (vertex u = 0; u < n; ++u)
            for (vertex v : succ[u]) {
                if (v == u || rows[v].is_subset_of(rows[u])) continue;
                bitset missing = rows[v];
                missing.subtract(rows[u]);
                missing.for_each([&](std::size_t w) {
                    if (w != u) audit.transitivity.push_back({u, v, static_cast<vertex>(w)});
                });
            }
    } else {
        for (vertex u = 0; u < n; ++u)
            for (vertex v : succ[u]) {
                if (v == u) continue;
                for (vertex w : succ[v])
                    if (w != u && !has(u, w)) audit.transitivity.push_back({u, v, w});
            }
    }
    return audit;
}

inline order_audit is_partial_order(const strict_order& p) { return is_partial_order(p.pairs(), p.size()); }

/// Smallest transitive superset of `rel`; throws cycle_detected if that is not a strict order.
inline strict_order transitive_closure(std::span<const vertex_pair> rel, std::size_t n) {
    std::vector<std::vector<vertex>> succ(n);
    std::vector<std::size_t> indeg(n, 0);
    for (auto [u, v] : rel) {
        if (u >= n || v >= n) throw error(errc::index_out_of_range, "relation pair outside [0, n)");
        if (u == v) throw error(errc::cycle_detected, "pair (" + std::to_string(u) + "," + std::to_string(u) + ")");
        succ[u].push_back(v);
    }
    for (auto& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (vertex v : s) ++indeg[v];
    }
    std::vector<vertex> topo;
    topo.reserve(n);
    for (vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) topo.push_back(v);
    for (std::size_t i = 0; i < topo.size(); ++i)
        for (vertex w : succ[topo[i]])
            if (--indeg[w] == 0) topo.push_back(w);
    if (topo.size() != n) throw error(errc::cycle_detected, "relation contains a directed cycle");

    std::vector<bitset> reach(n, bitset(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        for (vertex w : succ[*it]) {
            reach[*it].set(w);
            reach[*it] |= reach[w];
        }
    }
    std::vector<std::vector<vertex>> closed(n);
    for (vertex u = 0; u < n; ++u) reach[u].for_each([&](std::size_t w) { closed[u].push_back(static_cast<vertex>(w)); });
    return strict_order::from_successors(std::move(closed));
}

inline graph comparability_graph(const strict_order& p) {
    std::vector<vertex_pair> edges;
    edges.reserve(p.relation_size());
    for (vertex u = 0; u < p.size(); ++u)
        for (vertex v : p.successors(u)) edges.emplace_back(u, v);
    return graph::from_edges(p.size(), edges);
}

/// Bit s is set iff the pair is comparable in relation s (zero-based).
using label_set = std::uint32_t;

struct labeled_edge {
    vertex u = 0;
    vertex v = 0;
    label_set labels = 0;

    friend auto operator<=>(const labeled_edge&, const labeled_edge&) = default;
};

/// Union of r comparability graphs; every edge remembers which relations produced it.
class labeled_union_graph {
public:
    labeled_union_graph() = default;

    /// Normalizes orientation to u < v, merges duplicate pairs, and sorts edges.
    static labeled_union_graph from_edges(std::size_t n, std::size_t r, std::vector<labeled_edge> edges) {
        if (r > 32) throw error(errc::invalid_argument, "at most 32 relations are supported");
        const label_set allowed = r == 32 ? ~label_set{0} : (label_set{1} << r) - 1;
        for (auto& e : edges) {
            if (e.u >= n || e.v >= n) throw error(errc::index_out_of_range, "edge endpoint outside [0, n)");
            if (e.u == e.v) throw error(errc::invalid_argument, "loop in union graph");
            if (e.labels == 0) throw error(errc::invalid_argument, "edge with empty label set");
            if (e.labels & ~allowed) throw error(errc::index_out_of_range, "label outside [0, r)");
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end());
        std::vector<labeled_edge> merged;
        merged.reserve(edges.size());
        for (const auto& e : edges) {
            if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) merged.back().labels |= e.labels;
            else merged.push_back(e);
        }
        labeled_union_graph g;
        g.n_ = n;
        g.r_ = r;
        g.edges_ = std::move(merged);
        return g;
    }

    std::size_t order() const noexcept { return n_; }
    std::size_t relation_count() const noexcept { return r_; }
    std::span<const labeled_edge> edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Labels of {u, v}; 0 when not an edge.
    label_set labels(vertex u, vertex v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), labeled_edge{u, v, 0},
                                   [](const labeled_edge& a, const labeled_edge& b) {
                                       return std::pair(a.u, a.v) < std::pair(b.u, b.v);
                                   });
        return (it != edges_.end() && it->u == u && it->v == v) ? it->labels : 0;
    }

    graph to_graph() const {
        std::vector<vertex_pair> plain;
        plain.reserve(edges_.size());
        for (const auto& e : edges_) plain.emplace_back(e.u, e.v);
        return graph::from_edges(n_, plain);
    }

    friend bool operator==(const labeled_union_graph&, const labeled_union_graph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t r_ = 0;
    std::vector<labeled_edge> edges_;
};

inline labeled_union_graph union_graphs(std::span<const strict_order> orders) {
    if (orders.empty()) return labeled_union_graph::from_edges(0, 0, {});
    const std::size_t n = orders.front().size();
    std::vector<labeled_edge> edges;
    for (std::size_t s = 0; s < orders.size(); ++s) {
        if (orders[s].size() != n)
            throw error(errc::mismatched_vertex_count, "order " + std::to_string(s) + " has a different vertex count");
        for (vertex u = 0; u < n; ++u)
            for (vertex v : orders[s].successors(u)) edges.push_back({u, v, label_set{1} << s});
    }
    return labeled_union_graph::from_edges(n, orders.size(), std::move(edges));
}

struct coloring {
    std::vector<std::uint32_t> colors;
    std::size_t palette_size = 0;
};

inline bool is_proper(const coloring& c, const graph& g) {
    if (c.colors.size() != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

namespace detail {

/// Longest-chain heights (0-based) via Kahn's order; parent[v] is the predecessor on one longest chain.
struct height_table {
    std::vector<std::uint32_t> height;
    std::vector<std::int64_t> parent;
};

inline height_table heights(const strict_order& p) {
    const std::size_t n = p.size();
    height_table t{std::vector<std::uint32_t>(n, 0), std::vector<std::int64_t>(n, -1)};
    std::vector<std::size_t> indeg(n, 0);
    for (vertex u = 0; u < n; ++u)
        for (vertex v : p.successors(u)) ++indeg[v];
    std::vector<vertex> queue;
    for (vertex v = 0; v < n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const vertex u = queue[i];
        for (vertex w : p.successors(u)) {
            if (t.height[u] + 1 > t.height[w]) {
                t.height[w] = t.height[u] + 1;
                t.parent[w] = u;
            }
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    if (queue.size() != n) throw error(errc::cycle_detected, "order relation contains a cycle");
    return t;
}

} // namespace detail

/// Colors each element by the length of the longest chain ending at it, minus one.
inline coloring mirsky_coloring(const strict_order& p) {
    auto t = detail::heights(p);
    coloring c;
    c.colors = std::move(t.height);
    c.palette_size = c.colors.empty() ? 0 : *std::max_element(c.colors.begin(), c.colors.end()) + 1;
    return c;
}

/// One longest chain, listed bottom to top.
inline vertex_set longest_chain(const strict_order& p) {
    if (p.size() == 0) return {};
    const auto t = detail::heights(p);
    vertex top = static_cast<vertex>(std::max_element(t.height.begin(), t.height.end()) - t.height.begin());
    vertex_set chain;
    for (std::int64_t v = top; v >= 0; v = t.parent[static_cast<std::size_t>(v)]) chain.push_back(static_cast<vertex>(v));
    std::reverse(chain.begin(), chain.end());
    return chain;
}

/// Tuple coloring v -> (c_1(v), ..., c_r(v)); tuples are renumbered in lexicographic order.
inline coloring product_coloring(std::span<const coloring> parts) {
    if (parts.empty()) throw error(errc::empty_input, "product of zero colorings");
    const std::size_t n = parts.front().colors.size();
    for (const auto& c : parts)
        if (c.colors.size() != n) throw error(errc::mismatched_vertex_count, "colorings over different vertex sets");
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    std::vector<std::vector<std::uint32_t>> tuples(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (const auto& c : parts) tuples[v].push_back(c.colors[v]);
        index.emplace(tuples[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [tuple, id] : index) id = next++;
    coloring out;
    out.colors.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.colors[v] = index.at(tuples[v]);
    out.palette_size = index.size();
    return out;
}

enum class homogeneous_kind { clique, independent };

inline const char* to_string(homogeneous_kind k) { return k == homogeneous_kind::clique ? "clique" : "independent"; }

struct homogeneous_set {
    homogeneous_kind kind = homogeneous_kind::clique;
    vertex_set vertices;
};

inline bool is_homogeneous(const graph& g, const homogeneous_set& h) {
    return h.kind == homogeneous_kind::clique ? is_clique(g, h.vertices) : is_independent(g, h.vertices);
}

/// n^{1/(r+1)}, the guaranteed homogeneous-set size in a union of r comparability graphs.
inline double homogeneous_bound(std::size_t n, std::size_t r) {
    return std::pow(static_cast<double>(n), 1.0 / static_cast<double>(r + 1));
}

inline bool meets_homogeneous_bound(std::size_t size, std::size_t n, std::size_t r) {
    return static_cast<double>(size) + 1e-9 >= homogeneous_bound(n, r);
}

/// Larger of: the tallest chain over all orders (a clique of the union), and the largest
/// class of the product of height colorings (an independent set). Ties go to the clique.
inline homogeneous_set extract_homogeneous(std::span<const strict_order> orders) {
    if (orders.empty() || orders.front().size() == 0)
        throw error(errc::empty_input, "need at least one order on at least one vertex");
    const std::size_t n = orders.front().size();
    for (const auto& p : orders)
        if (p.size() != n) throw error(errc::mismatched_vertex_count, "orders over different vertex sets");

    vertex_set chain;
    std::vector<coloring> colorings;
    for (const auto& p : orders) {
        auto c = longest_chain(p);
        if (c.size() > chain.size()) chain = std::move(c);
        colorings.push_back(mirsky_coloring(p));
    }
    const auto product = product_coloring(colorings);
    std::vector<std::size_t> class_size(product.palette_size, 0);
    for (auto c : product.colors) ++class_size[c];
    const auto best = static_cast<std::uint32_t>(std::max_element(class_size.begin(), class_size.end()) - class_size.begin());

    if (chain.size() >= class_size[best]) return {homogeneous_kind::clique, std::move(chain)};
    homogeneous_set h{homogeneous_kind::independent, {}};
    for (vertex v = 0; v < n; ++v)
        if (product.colors[v] == best) h.vertices.push_back(v);
    return h;
}

} // namespace compgraph
