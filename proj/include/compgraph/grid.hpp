#pragma once

// Two edge-disjoint comparability graphs on a b x b grid of cells of size a.
//
// Cell (i, j) holds a vertices. Row i is split into a chains under order 1: chain k
// visits f_{i,j}(k) for j = 0..b-1, where each f_{i,j} is a seeded uniform bijection.
// Column j is split into a chains under order 2 through the identity maps g_{i,j}.
// Pairs in different rows and different columns are comparable in exactly one order:
// order 1 when the column grows with the row, order 2 when it shrinks.
//
// All indices (rows, columns, chain indices, positions) are zero-based.

#include "compgraph/error.hpp"
#include "compgraph/graph.hpp"
#include "compgraph/poset.hpp"
#include "compgraph/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace compgraph {

struct grid_params {
    std::uint32_t a = 1;
    std::uint32_t b = 1;
    std::uint64_t seed = 0;

    std::size_t vertex_count() const noexcept { return std::size_t{a} * b * b; }
    friend bool operator==(const grid_params&, const grid_params&) = default;
};

/// b = round(n^{1/3} (ln ln n / ln n)^{1/3}), a = round(n / b^2), both clamped to >= 1.
/// The realized vertex count a*b^2 generally differs from n.
inline grid_params grid_params_from_n(std::size_t n, std::uint64_t seed = 0) {
    if (n < 100) throw error(errc::too_small, "grid parameters need n >= 100, got " + std::to_string(n));
    const double x = static_cast<double>(n);
    const double ln = std::log(x);
    const double b = std::max(1.0, std::round(std::cbrt(x) * std::cbrt(std::log(ln) / ln)));
    const double a = std::max(1.0, std::round(x / (b * b)));
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), seed};
}

/// n^{1/3} (ln n / ln ln n)^{2/3}, the target homogeneous-set size of the grid construction.
inline double grid_reference_size(double n) {
    const double ln = std::log(n);
    return std::cbrt(n) * std::pow(ln / std::log(ln), 2.0 / 3.0);
}

struct cell_position {
    std::uint32_t row = 0;
    std::uint32_t col = 0;
    std::uint32_t pos = 0; // index inside the cell; equals the column-chain index
};

class grid_construction {
public:
    const grid_params& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return params_.vertex_count(); }
    std::uint32_t a() const noexcept { return params_.a; }
    std::uint32_t b() const noexcept { return params_.b; }

    vertex at(std::uint32_t row, std::uint32_t col, std::uint32_t pos) const noexcept {
        return (row * params_.b + col) * params_.a + pos;
    }

    cell_position locate(vertex v) const noexcept {
        const std::uint32_t cell = v / params_.a;
        return {cell / params_.b, cell % params_.b, v % params_.a};
    }

    /// f_{row,col}(k): the vertex of chain k of row `row` inside cell (row, col).
    vertex f(std::uint32_t row, std::uint32_t col, std::uint32_t k) const noexcept {
        return at(row, col, f_[(row * params_.b + col) * params_.a + k]);
    }
    /// g_{row,col}(l): identity layout.
    vertex g(std::uint32_t row, std::uint32_t col, std::uint32_t l) const noexcept { return at(row, col, l); }

    /// Index k with f(row, col, k) == v.
    std::uint32_t row_chain_index(vertex v) const noexcept { return row_chain_[v]; }
    std::uint32_t col_chain_index(vertex v) const noexcept { return v % params_.a; }

private:
    friend grid_construction build_grid(const grid_params& p);

    grid_params params_;
    std::vector<std::uint32_t> f_;         // f_[cell * a + k] = position of f(k) in the cell
    std::vector<std::uint32_t> row_chain_; // inverse of f per vertex
};

inline grid_construction build_grid(const grid_params& p) {
    if (p.a < 1 || p.b < 1) throw error(errc::invalid_argument, "grid needs a >= 1 and b >= 1");
    if (p.vertex_count() > std::numeric_limits<vertex>::max())
        throw error(errc::invalid_argument, "grid vertex count does not fit a 32-bit index");
    grid_construction gc;
    gc.params_ = p;
    gc.f_.resize(p.vertex_count());
    gc.row_chain_.resize(p.vertex_count());
    for (std::uint32_t i = 0; i < p.b; ++i)
        for (std::uint32_t j = 0; j < p.b; ++j) {
            const std::size_t base = (std::size_t{i} * p.b + j) * p.a;
            std::span<std::uint32_t> cell(gc.f_.data() + base, p.a);
            std::iota(cell.begin(), cell.end(), 0U);
            counter_rng rng(derive_key(p.seed, {i, j}));
            shuffle(cell, rng);
            for (std::uint32_t k = 0; k < p.a; ++k) gc.row_chain_[base + cell[k]] = k;
        }
    return gc;
}

/// v <_1 w iff (i < i' and j < j') or (i = i', j < j' and same row chain).
inline bool less1(const grid_construction& gc, vertex v, vertex w) {
    const auto x = gc.locate(v);
    const auto y = gc.locate(w);
    if (x.row < y.row && x.col < y.col) return true;
    return x.row == y.row && x.col < y.col && gc.row_chain_index(v) == gc.row_chain_index(w);
}

/// v <_2 w iff (i < i' and j > j') or (i < i', j = j' and same column chain).
inline bool less2(const grid_construction& gc, vertex v, vertex w) {
    const auto x = gc.locate(v);
    const auto y = gc.locate(w);
    if (x.row < y.row && x.col > y.col) return true;
    return x.row < y.row && x.col == y.col && x.pos == y.pos;
}

inline bool grid_adjacent(const grid_construction& gc, vertex v, vertex w) {
    return less1(gc, v, w) || less1(gc, w, v) || less2(gc, v, w) || less2(gc, w, v);
}

namespace detail {

template <class Less>
strict_order materialize(const grid_construction& gc, Less less) {
    const auto n = static_cast<vertex>(gc.size());
    std::vector<std::vector<vertex>> succ(n);
    for (vertex v = 0; v < n; ++v)
        for (vertex w = 0; w < n; ++w)
            if (less(gc, v, w)) succ[v].push_back(w);
    return strict_order::from_successors(std::move(succ));
}

} // namespace detail

/// The orders are materialized on demand: at realistic n they hold on the order of n^2/4 pairs.
inline strict_order grid_order1(const grid_construction& gc) { return detail::materialize(gc, less1); }
inline strict_order grid_order2(const grid_construction& gc) { return detail::materialize(gc, less2); }

/// Closed form: every cross pair (different row and column) plus the row and column chains.
inline std::uint64_t grid_edge_count(const grid_params& p) {
    const std::uint64_t a = p.a, b = p.b;
    return a * a * b * b * (b - 1) * (b - 1) / 2 + a * b * b * (b - 1);
}

inline labeled_union_graph grid_union(const grid_construction& gc) {
    const std::array<strict_order, 2> orders{grid_order1(gc), grid_order2(gc)};
    return union_graphs(orders);
}

inline vertex_set row_chain(const grid_construction& gc, std::uint32_t row, std::uint32_t k) {
    if (row >= gc.b() || k >= gc.a()) throw error(errc::index_out_of_range, "row chain index");
    vertex_set out;
    for (std::uint32_t j = 0; j < gc.b(); ++j) out.push_back(gc.f(row, j, k));
    return out;
}

inline vertex_set col_chain(const grid_construction& gc, std::uint32_t col, std::uint32_t l) {
    if (col >= gc.b() || l >= gc.a()) throw error(errc::index_out_of_range, "column chain index");
    vertex_set out;
    for (std::uint32_t i = 0; i < gc.b(); ++i) out.push_back(gc.g(i, col, l));
    return out;
}

/// (union of row chains ks[i]) intersected with (union of column chains ls[j]); always a clique.
inline vertex_set structural_clique(const grid_construction& gc, std::span<const std::uint32_t> ks,
                                    std::span<const std::uint32_t> ls) {
    if (ks.size() != gc.b() || ls.size() != gc.b())
        throw error(errc::index_out_of_range, "selector vectors must have length b");
    for (auto k : ks)
        if (k >= gc.a()) throw error(errc::index_out_of_range, "row selector >= a");
    for (auto l : ls)
        if (l >= gc.a()) throw error(errc::index_out_of_range, "column selector >= a");
    vertex_set out;
    for (std::uint32_t i = 0; i < gc.b(); ++i)
        for (std::uint32_t j = 0; j < gc.b(); ++j) {
            const vertex v = gc.f(i, j, ks[i]);
            if (gc.col_chain_index(v) == ls[j]) out.push_back(v);
        }
    return out;
}

/// Column selectors for the greedy witness: with every row using chain 0, column j picks
/// the chain met most often by those row chains (smallest index on ties).
inline std::vector<std::uint32_t> greedy_column_selectors(const grid_construction& gc) {
    std::vector<std::uint32_t> ls(gc.b(), 0);
    std::vector<std::uint32_t> load(gc.a());
    for (std::uint32_t j = 0; j < gc.b(); ++j) {
        std::fill(load.begin(), load.end(), 0U);
        for (std::uint32_t i = 0; i < gc.b(); ++i) ++load[gc.col_chain_index(gc.f(i, j, 0))];
        ls[j] = static_cast<std::uint32_t>(std::max_element(load.begin(), load.end()) - load.begin());
    }
    return ls;
}

inline vertex_set greedy_clique_witness(const grid_construction& gc) {
    const std::vector<std::uint32_t> ks(gc.b(), 0);
    const auto ls = greedy_column_selectors(gc);
    return structural_clique(gc, ks, ls);
}

/// Cell (0, 0): an independent set of size a.
inline vertex_set alpha_witness(const grid_construction& gc) {
    vertex_set out(gc.a());
    std::iota(out.begin(), out.end(), vertex{0});
    return out;
}

} // namespace compgraph
