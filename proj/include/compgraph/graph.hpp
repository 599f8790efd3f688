#pragma once

#include "compgraph/bitset.hpp"
#include "compgraph/error.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace compgraph {

using vertex = std::uint32_t;
using vertex_pair = std::pair<vertex, vertex>;
using vertex_set = std::vector<vertex>;

/// Simple undirected graph with sorted adjacency lists.
class graph {
public:
    graph() = default;
    explicit graph(std::size_t n) : adj_(n) {}

    /// Builds from an edge list. Duplicates (in either orientation) are merged; loops are rejected.
    static graph from_edges(std::size_t n, std::span<const vertex_pair> edges) {
        graph g(n);
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw error(errc::index_out_of_range, "edge endpoint outside [0, n)");
            if (u == v) throw error(errc::invalid_argument, "loop at vertex " + std::to_string(u));
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        g.normalize();
        return g;
    }

    /// Adopts adjacency lists; they are sorted and deduplicated, and must be symmetric and loop-free.
    static graph from_adjacency(std::vector<std::vector<vertex>> adj) {
        graph g;
        g.adj_ = std::move(adj);
        g.normalize();
        for (vertex u = 0; u < g.adj_.size(); ++u)
            for (vertex v : g.adj_[u]) {
                if (v >= g.adj_.size() || v == u || !g.adjacent(v, u))
                    throw error(errc::invalid_argument, "adjacency lists are not a simple undirected graph");
            }
        return g;
    }

    std::size_t order() const noexcept { return adj_.size(); }

    std::size_t edge_count() const noexcept {
        std::size_t m = 0;
        for (const auto& a : adj_) m += a.size();
        return m / 2;
    }

    std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }
    std::size_t degree(vertex v) const { return adj_[v].size(); }

    std::size_t max_degree() const noexcept {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

    bool adjacent(vertex u, vertex v) const {
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<vertex_pair> edges() const {
        std::vector<vertex_pair> out;
        out.reserve(edge_count());
        for (vertex u = 0; u < adj_.size(); ++u)
            for (vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    graph complement() const {
        const auto n = order();
        graph c(n);
        for (vertex u = 0; u < n; ++u) {
            auto it = adj_[u].begin();
            for (vertex v = 0; v < n; ++v) {
                while (it != adj_[u].end() && *it < v) ++it;
                if (v != u && (it == adj_[u].end() || *it != v)) c.adj_[u].push_back(v);
            }
        }
        return c;
    }

    /// Adjacency rows as bitsets (no loops).
    std::vector<bitset> adjacency_bitsets() const {
        std::vector<bitset> rows(order(), bitset(order()));
        for (vertex u = 0; u < order(); ++u)
            for (vertex v : adj_[u]) rows[u].set(v);
        return rows;
    }

    friend bool operator==(const graph&, const graph&) = default;

private:
    void normalize() {
        for (auto& a : adj_) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
    }

    std::vector<std::vector<vertex>> adj_;
};

inline bool is_clique(const graph& g, std::span<const vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_independent(const graph& g, std::span<const vertex> s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    return true;
}

} // namespace compgraph
