#pragma once

#include "compgraph/error.hpp"
#include "compgraph/graph.hpp"
#include "compgraph/rng.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace compgraph {

/// Simple d-regular graph.
class regular_graph {
public:
    regular_graph() = default;

    static regular_graph from_graph(graph g) {
        regular_graph h;
        h.degree_ = g.order() ? static_cast<std::uint32_t>(g.degree(0)) : 0;
        for (vertex v = 0; v < g.order(); ++v)
            if (g.degree(v) != h.degree_) throw error(errc::invalid_argument, "graph is not regular");
        h.graph_ = std::move(g);
        return h;
    }

    const graph& as_graph() const noexcept { return graph_; }
    std::size_t order() const noexcept { return graph_.order(); }
    std::uint32_t degree() const noexcept { return degree_; }

private:
    graph graph_;
    std::uint32_t degree_ = 0;
};

struct regular_sample {
    regular_graph graph;
    std::size_t attempts = 0; // pairings drawn, including the accepted one
};

inline constexpr std::size_t default_rejection_limit = 10'000;

/// Uniform simple d-regular graph: pairing model, resampled until the pairing is simple.
/// Attempt t shuffles the stubs with the substream derive_key(seed, {t}).
inline regular_sample random_regular(std::size_t n, std::uint32_t d, std::uint64_t seed,
                                     std::size_t max_attempts = default_rejection_limit) {
    if (d >= n && !(n == 0 && d == 0))
        throw error(errc::infeasible_degree, "need d < n (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    if ((n * d) % 2 != 0)
        throw error(errc::infeasible_degree, "n*d must be even (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");

    std::vector<vertex> stubs(n * d);
    std::vector<std::vector<vertex>> adj(n);
    for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
        for (std::size_t i = 0; i < stubs.size(); ++i) stubs[i] = static_cast<vertex>(i / d);
        counter_rng rng(derive_key(seed, {attempt}));
        shuffle(std::span<vertex>(stubs), rng);
        for (auto& a : adj) a.clear();
        bool simple = true;
        for (std::size_t i = 0; simple && i < stubs.size(); i += 2) {
            const vertex u = stubs[i];
            const vertex v = stubs[i + 1];
            if (u == v || std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) simple = false;
            else {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
        if (simple) return {regular_graph::from_graph(graph::from_adjacency(adj)), attempt + 1};
    }
    throw error(errc::rejection_limit_exceeded,
                "no simple pairing after " + std::to_string(max_attempts) + " attempts");
}

/// N[U] = U plus all neighbors of U, sorted.
inline vertex_set closed_neighborhood(const graph& h, std::span<const vertex> u) {
    std::vector<char> mark(h.order(), 0);
    for (vertex v : u) {
        if (v >= h.order()) throw error(errc::index_out_of_range, "vertex outside graph");
        mark[v] = 1;
        for (vertex w : h.neighbors(v)) mark[w] = 1;
    }
    vertex_set out;
    for (vertex v = 0; v < h.order(); ++v)
        if (mark[v]) out.push_back(v);
    return out;
}

enum class expansion_mode { exact, estimated };

struct expansion_certificate {
    /// min |N[U]|/|U| - 1 over the examined sets U with 1 <= |U| <= floor(n/2);
    /// +inf when no such U exists (n < 2).
    double lambda = std::numeric_limits<double>::infinity();
    expansion_mode mode = expansion_mode::exact;
    vertex_set witness;                 // minimizing U
    std::size_t neighborhood_size = 0;  // |N[witness]|
    std::size_t sets_examined = 0;

    bool certified() const noexcept { return mode == expansion_mode::exact; }
};

inline constexpr std::size_t default_exact_expansion_limit = 20;

/// Exact mode enumerates every U with |U| <= floor(n/2) (n <= exact_limit). Estimated mode
/// samples `budget` sets, cycling sizes 1..floor(n/2), and only upper-bounds lambda.
inline expansion_certificate vertex_expansion(const graph& h, expansion_mode mode, std::size_t budget = 0,
                                              std::uint64_t seed = 0,
                                              std::size_t exact_limit = default_exact_expansion_limit) {
    const std::size_t n = h.order();
    const std::size_t half = n / 2;
    expansion_certificate cert;
    cert.mode = mode;

    // Keep the smallest ratio |N|/|U| as an exact fraction.
    std::size_t best_num = 0, best_den = 0;
    auto consider = [&](std::size_t nb, std::size_t sz) {
        if (best_den == 0 || nb * best_den < best_num * sz) {
            best_num = nb;
            best_den = sz;
            return true;
        }
        return false;
    };

    if (mode == expansion_mode::exact) {
        if (n > exact_limit || n > 24)
            throw error(errc::limit_exceeded, "exact expansion needs n <= " + std::to_string(std::min<std::size_t>(exact_limit, 24)));
        if (half == 0) return cert;
        std::vector<std::uint32_t> closed(n);
        for (vertex v = 0; v < n; ++v) {
            closed[v] = 1U << v;
            for (vertex w : h.neighbors(v)) closed[v] |= 1U << w;
        }
        const std::uint32_t total = 1U << n;
        std::vector<std::uint32_t> nb(total, 0);
        std::uint32_t best_mask = 0;
        for (std::uint32_t mask = 1; mask < total; ++mask) {
            const auto low = static_cast<unsigned>(std::countr_zero(mask));
            nb[mask] = nb[mask & (mask - 1)] | closed[low];
            const auto sz = static_cast<std::size_t>(std::popcount(mask));
            if (sz > half) continue;
            ++cert.sets_examined;
            if (consider(static_cast<std::size_t>(std::popcount(nb[mask])), sz)) best_mask = mask;
        }
        for (vertex v = 0; v < n; ++v)
            if (best_mask >> v & 1U) cert.witness.push_back(v);
    } else {
        if (budget == 0) throw error(errc::budget_zero, "estimated expansion needs a positive budget");
        if (half == 0) return cert;
        counter_rng rng(derive_key(seed, {0x6578'7061'6e64ULL}));
        std::vector<vertex> perm(n);
        for (std::size_t t = 0; t < budget; ++t) {
            const std::size_t sz = t % half + 1;
            std::iota(perm.begin(), perm.end(), vertex{0});
            for (std::size_t i = 0; i < sz; ++i) std::swap(perm[i], perm[i + rng.below(n - i)]);
            vertex_set u(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(sz));
            const auto nsz = closed_neighborhood(h, u).size();
            ++cert.sets_examined;
            if (consider(nsz, sz)) {
                std::sort(u.begin(), u.end());
                cert.witness = std::move(u);
            }
        }
    }
    cert.neighborhood_size = best_num;
    cert.lambda = static_cast<double>(best_num) / static_cast<double>(best_den) - 1.0;
    return cert;
}

/// H^k: u ~ w iff dist_H(u, w) <= k. Every vertex carries a loop.
class power_graph {
public:
    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t exponent() const noexcept { return k_; }
    std::span<const vertex> neighbors(vertex v) const { return adj_[v]; }
    bool adjacent(vertex u, vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }
    std::size_t max_degree() const noexcept {
        std::size_t d = 0;
        for (const auto& a : adj_) d = std::max(d, a.size());
        return d;
    }

    friend bool operator==(const power_graph&, const power_graph&) = default;

private:
    friend power_graph graph_power(const graph& h, std::size_t k);

    std::size_t k_ = 0;
    std::vector<std::vector<vertex>> adj_;
};

inline power_graph graph_power(const graph& h, std::size_t k) {
    const std::size_t n = h.order();
    power_graph p;
    p.k_ = k;
    p.adj_.resize(n);
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    for (vertex s = 0; s < n; ++s) {
        auto& ball = p.adj_[s];
        ball.push_back(s);
        dist[s] = 0;
        for (std::size_t head = 0; head < ball.size(); ++head) {
            const vertex u = ball[head];
            if (dist[u] == k) continue;
            for (vertex w : h.neighbors(u))
                if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                    dist[w] = dist[u] + 1;
                    ball.push_back(w);
                }
        }
        for (vertex v : ball) dist[v] = std::numeric_limits<std::size_t>::max();
        std::sort(ball.begin(), ball.end());
    }
    return p;
}

enum class bound_check { vacuous, bound_holds, violation };

inline const char* to_string(bound_check c) {
    switch (c) {
        case bound_check::vacuous: return "vacuous";
        case bound_check::bound_holds: return "bound_holds";
        case bound_check::violation: return "violation";
    }
    return "unknown";
}

/// If no H^k edge joins X and Y, then |X||Y| <= n^2 (1+lambda)^{-k}.
/// Returns vacuous when some H^k edge (loops included) joins them.
inline bound_check check_expander_bound(const graph& h, const expansion_certificate& cert, std::size_t k,
                                        std::span<const vertex> x, std::span<const vertex> y) {
    if (!cert.certified()) throw error(errc::non_exact_certificate, "expander bound needs an exact certificate");
    const std::size_t n = h.order();
    // Multi-source BFS from X, depth k.
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<vertex> queue;
    for (vertex v : x) {
        if (v >= n) throw error(errc::index_out_of_range, "X vertex outside graph");
        if (dist[v] != 0) {
            dist[v] = 0;
            queue.push_back(v);
        }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const vertex u = queue[head];
        if (dist[u] == k) continue;
        for (vertex w : h.neighbors(u))
            if (dist[w] == std::numeric_limits<std::size_t>::max()) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    for (vertex v : y) {
        if (v >= n) throw error(errc::index_out_of_range, "Y vertex outside graph");
        if (dist[v] <= k) return bound_check::vacuous;
    }
    const double lhs = static_cast<double>(x.size()) * static_cast<double>(y.size());
    const double rhs = static_cast<double>(n) * static_cast<double>(n) * std::pow(1.0 + cert.lambda, -static_cast<double>(k));
    return lhs <= rhs * (1.0 + 1e-12) ? bound_check::bound_holds : bound_check::violation;
}

} // namespace compgraph
