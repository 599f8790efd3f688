#pragma once

// r comparability graphs on [b]^r x [a] with small balanced bicliques in the complement.
//
// Every vertex has a rank alpha in {0..b-1}^r (its cell) and a label h(v) in V(H), where H
// is a random d-regular graph on a vertices. For relation s, v <_s w holds when
// rank(v) strictly precedes rank(w) in the s-th rank order and h(v), h(w) are adjacent in
// H^{|rank(w) - rank(v)|_inf}. Loops of H^k make equal labels comparable across cells.

#include "compgraph/error.hpp"
#include "compgraph/expander.hpp"
#include "compgraph/graph.hpp"
#include "compgraph/poset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace compgraph {

namespace detail {

template <class T>
void check_rank_args(std::size_t s, std::span<const T> alpha, std::span<const T> beta) {
    if (alpha.size() != beta.size()) throw error(errc::dimension_mismatch, "rank vectors of different dimension");
    if (s >= alpha.size()) throw error(errc::index_out_of_range, "relation index s >= r");
}

template <class T>
T linf(std::span<const T> alpha, std::span<const T> beta) {
    T m{};
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        const T d = beta[i] > alpha[i] ? beta[i] - alpha[i] : alpha[i] - beta[i];
        m = std::max(m, d);
    }
    return m;
}

} // namespace detail

/// |beta - alpha|_inf
template <class T>
T linf_distance(std::span<const T> alpha, std::span<const T> beta) {
    if (alpha.size() != beta.size()) throw error(errc::dimension_mismatch, "rank vectors of different dimension");
    return detail::linf(alpha, beta);
}

/// alpha <=_s beta iff beta_s - alpha_s = max_i |beta_i - alpha_i|.
template <class T>
bool weakly_precedes(std::size_t s, std::span<const T> alpha, std::span<const T> beta) {
    detail::check_rank_args(s, alpha, beta);
    return beta[s] - alpha[s] == detail::linf(alpha, beta);
}

/// Strict version of weakly_precedes: additionally alpha != beta.
template <class T>
bool precedes(std::size_t s, std::span<const T> alpha, std::span<const T> beta) {
    return weakly_precedes(s, alpha, beta) && !std::equal(alpha.begin(), alpha.end(), beta.begin());
}

/// alpha <'_s beta iff |beta - alpha|_inf = beta_s - alpha_s > 0 and |beta_i - alpha_i| is
/// strictly smaller for every i < s. For alpha != beta exactly one (s, direction) holds.
template <class T>
bool precedes_disjoint(std::size_t s, std::span<const T> alpha, std::span<const T> beta) {
    detail::check_rank_args(s, alpha, beta);
    const T gap = beta[s] - alpha[s];
    if (!(gap > T{}) || gap != detail::linf(alpha, beta)) return false;
    for (std::size_t i = 0; i < s; ++i) {
        const T d = beta[i] > alpha[i] ? beta[i] - alpha[i] : alpha[i] - beta[i];
        if (!(d < gap)) return false;
    }
    return true;
}

enum class ranked_variant { overlapping, disjoint };

inline const char* to_string(ranked_variant v) { return v == ranked_variant::overlapping ? "overlapping" : "disjoint"; }

inline ranked_variant parse_variant(const std::string& s) {
    if (s == "overlapping") return ranked_variant::overlapping;
    if (s == "disjoint") return ranked_variant::disjoint;
    throw error(errc::invalid_argument, "unknown variant '" + s + "'");
}

struct ranked_params {
    std::uint32_t r = 1;
    std::uint32_t b = 1;
    std::uint32_t a = 4;
    std::uint32_t d = 3;
    std::uint64_t seed = 0;
    ranked_variant variant = ranked_variant::overlapping;

    std::size_t cell_count() const noexcept {
        std::size_t c = 1;
        for (std::uint32_t i = 0; i < r; ++i) c *= b;
        return c;
    }
    std::size_t vertex_count() const noexcept { return cell_count() * a; }

    friend bool operator==(const ranked_params&, const ranked_params&) = default;
};

/// b = max(1, round(eps ln n / ln 9)), a = max(2, round(n / b^r)), bumped by one if a*d is odd.
inline ranked_params ranked_params_from_n(std::size_t n, double epsilon, std::uint32_t r, std::uint64_t seed = 0,
                                          std::uint32_t d = 3,
                                          ranked_variant variant = ranked_variant::overlapping) {
    if (n < 100) throw error(errc::too_small, "ranked parameters need n >= 100, got " + std::to_string(n));
    if (!(epsilon > 0.0 && epsilon <= 1.0)) throw error(errc::invalid_argument, "epsilon must lie in (0, 1]");
    if (r < 1) throw error(errc::invalid_argument, "r must be >= 1");
    const double x = static_cast<double>(n);
    const double b = std::max(1.0, std::round(epsilon * std::log(x) / std::log(9.0)));
    auto a = static_cast<std::uint32_t>(std::max(2.0, std::round(x / std::pow(b, r))));
    if ((std::uint64_t{a} * d) % 2 != 0) ++a;
    return {r, static_cast<std::uint32_t>(b), a, d, seed, variant};
}

/// b^r 3^b: the maximum-degree bound for d = 3.
inline double degree_bound(std::uint32_t r, std::uint32_t b) {
    return std::pow(static_cast<double>(b), r) * std::pow(3.0, b);
}

class ranked_construction {
public:
    const ranked_params& params() const noexcept { return params_; }
    std::size_t size() const noexcept { return params_.vertex_count(); }
    const regular_graph& expander() const noexcept { return expander_; }
    std::size_t expander_attempts() const noexcept { return attempts_; }
    /// powers()[k] = H^k for k = 0..b-1.
    std::span<const power_graph> powers() const noexcept { return powers_; }
    std::span<const strict_order> orders() const noexcept { return orders_; }

    std::size_t cell_of(vertex v) const noexcept { return v / params_.a; }
    /// h(v): position inside the cell, identified with a vertex of H.
    vertex label(vertex v) const noexcept { return v % params_.a; }

    /// Zero-based rank coordinates of a cell; the first coordinate is the most significant digit.
    std::vector<std::int64_t> cell_rank(std::size_t cell) const {
        std::vector<std::int64_t> alpha(params_.r);
        for (std::size_t i = params_.r; i-- > 0;) {
            alpha[i] = static_cast<std::int64_t>(cell % params_.b);
            cell /= params_.b;
        }
        return alpha;
    }
    std::vector<std::int64_t> rank(vertex v) const { return cell_rank(cell_of(v)); }

private:
    friend ranked_construction build_ranked(const ranked_params& p);

    ranked_params params_;
    regular_graph expander_;
    std::size_t attempts_ = 0;
    std::vector<power_graph> powers_;
    std::vector<strict_order> orders_;
};

/// Rank comparator used by a construction variant.
inline bool rank_precedes(ranked_variant variant, std::size_t s, std::span<const std::int64_t> alpha,
                          std::span<const std::int64_t> beta) {
    return variant == ranked_variant::overlapping ? precedes(s, alpha, beta) : precedes_disjoint(s, alpha, beta);
}

inline ranked_construction build_ranked(const ranked_params& p) {
    if (p.r < 1 || p.b < 1 || p.a < 1) throw error(errc::invalid_argument, "ranked construction needs r, b, a >= 1");
    if (p.r > 32) throw error(errc::invalid_argument, "at most 32 relations are supported");
    if (p.vertex_count() > std::numeric_limits<vertex>::max())
        throw error(errc::invalid_argument, "vertex count does not fit a 32-bit index");

    ranked_construction rc;
    rc.params_ = p;
    auto sample = random_regular(p.a, p.d, p.seed);
    rc.expander_ = std::move(sample.graph);
    rc.attempts_ = sample.attempts;
    for (std::uint32_t k = 0; k < p.b; ++k) rc.powers_.push_back(graph_power(rc.expander_.as_graph(), k));

    const std::size_t cells = p.cell_count();
    std::vector<std::vector<std::int64_t>> ranks(cells);
    for (std::size_t c = 0; c < cells; ++c) ranks[c] = rc.cell_rank(c);

    const std::size_t n = p.vertex_count();
    for (std::uint32_t s = 0; s < p.r; ++s) {
        std::vector<std::vector<vertex>> succ(n);
        for (std::size_t ca = 0; ca < cells; ++ca)
            for (std::size_t cb = 0; cb < cells; ++cb) {
                if (!rank_precedes(p.variant, s, ranks[ca], ranks[cb])) continue;
                const auto& power = rc.powers_[static_cast<std::size_t>(detail::linf<std::int64_t>(ranks[ca], ranks[cb]))];
                for (vertex x = 0; x < p.a; ++x) {
                    auto& out = succ[ca * p.a + x];
                    for (vertex y : power.neighbors(x)) out.push_back(static_cast<vertex>(cb * p.a + y));
                }
            }
        rc.orders_.push_back(strict_order::from_successors(std::move(succ)));
    }
    return rc;
}

inline labeled_union_graph ranked_union(const ranked_construction& rc) { return union_graphs(rc.orders()); }

/// Exact maximum degree of the union graph.
inline std::size_t max_degree(const ranked_construction& rc) {
    const std::size_t n = rc.size();
    std::vector<std::vector<vertex>> nbrs(n);
    for (const auto& order : rc.orders())
        for (vertex u = 0; u < n; ++u)
            for (vertex v : order.successors(u)) {
                nbrs[u].push_back(v);
                nbrs[v].push_back(u);
            }
    std::size_t best = 0;
    for (auto& list : nbrs) {
        std::sort(list.begin(), list.end());
        best = std::max<std::size_t>(best, static_cast<std::size_t>(std::unique(list.begin(), list.end()) - list.begin()));
    }
    return best;
}

// ---------------------------------------------------------------------------
// Separation of rank multisets

using point = std::vector<double>;

struct separation {
    std::vector<std::size_t> a_indices; // into A
    std::vector<std::size_t> b_indices; // into B
    double threshold = 0.0;
    /// true: <normal, a'> <= t <= <normal, b'>; false: the mirrored inequalities.
    bool a_below = true;
};

namespace detail {

inline double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

} // namespace detail

/// Halves two equal-size multisets so that a translate of the hyperplane orthogonal to `normal`
/// separates them. t is the least value with ceil(m/2) points of A or of B at or below it; the
/// set reaching that count takes the lower side (A on ties). The lower side keeps its ceil(m/2)
/// smallest projections and the upper side its ceil(m/2) largest, ties broken by index.
inline separation separate_multisets(std::span<const point> A, std::span<const point> B, std::span<const double> normal) {
    if (A.size() != B.size() || A.empty()) throw error(errc::size_mismatch, "separation needs |A| = |B| >= 1");
    if (std::all_of(normal.begin(), normal.end(), [](double c) { return c == 0.0; }))
        throw error(errc::zero_normal, "normal vector is zero");
    for (const auto& p : A)
        if (p.size() != normal.size()) throw error(errc::dimension_mismatch, "point dimension differs from normal");
    for (const auto& p : B)
        if (p.size() != normal.size()) throw error(errc::dimension_mismatch, "point dimension differs from normal");

    const std::size_t m = A.size();
    const std::size_t need = (m + 1) / 2;
    auto sorted_by_projection = [&](std::span<const point> pts) {
        std::vector<std::pair<double, std::size_t>> proj(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) proj[i] = {detail::dot(pts[i], normal), i};
        std::sort(proj.begin(), proj.end());
        return proj;
    };
    const auto pa = sorted_by_projection(A);
    const auto pb = sorted_by_projection(B);
    const double ta = pa[need - 1].first;
    const double tb = pb[need - 1].first;

    separation out;
    out.a_below = ta <= tb;
    out.threshold = std::min(ta, tb);
    const auto& lower = out.a_below ? pa : pb;
    const auto& upper = out.a_below ? pb : pa;
    std::vector<std::size_t> low_idx, up_idx;
    for (std::size_t i = 0; i < need; ++i) low_idx.push_back(lower[i].second);
    for (std::size_t i = 0; i < need; ++i) up_idx.push_back(upper[m - 1 - i].second);
    std::sort(low_idx.begin(), low_idx.end());
    std::sort(up_idx.begin(), up_idx.end());
    out.a_indices = out.a_below ? low_idx : up_idx;
    out.b_indices = out.a_below ? up_idx : low_idx;
    return out;
}

struct ranked_item {
    std::uint64_t id = 0;
    point rank;
};

struct comparable_subsets {
    std::vector<std::uint64_t> x_ids;
    std::vector<std::uint64_t> y_ids;
    std::size_t s = 0;
    /// true: rank(x) <=_s rank(y) for all x in X', y in Y'; false: the reverse.
    bool x_below = true;
};

/// Whether every pair satisfies lo <=_s hi.
inline bool dominates(std::size_t s, std::span<const point> lo, std::span<const point> hi) {
    for (const auto& x : lo)
        for (const auto& y : hi)
            if (!weakly_precedes<double>(s, x, y)) return false;
    return true;
}

/// Equal-size subsets X' of X and Y' of Y, |X'| = |Y'| >= m 2^{-r^2}, with X' <=_s Y' or
/// Y' <=_s X'. Separates along e_i - e_j and e_i + e_j for all i < j (along e_1 when r = 1),
/// then reads (s, direction) off one surviving pair. When boundary ties make that pair's
/// reading fail for the whole sets, the remaining (s, direction) choices are tried in order.
inline comparable_subsets find_comparable_subsets(std::span<const ranked_item> X, std::span<const ranked_item> Y,
                                                  std::size_t r) {
    if (X.size() != Y.size() || X.empty()) throw error(errc::size_mismatch, "need |X| = |Y| >= 1");
    if (r < 1) throw error(errc::invalid_argument, "r must be >= 1");
    for (const auto& it : X)
        if (it.rank.size() != r) throw error(errc::dimension_mismatch, "rank dimension differs from r");
    for (const auto& it : Y)
        if (it.rank.size() != r) throw error(errc::dimension_mismatch, "rank dimension differs from r");

    std::vector<std::size_t> xs(X.size()), ys(Y.size());
    std::iota(xs.begin(), xs.end(), std::size_t{0});
    std::iota(ys.begin(), ys.end(), std::size_t{0});

    auto separate = [&](const std::vector<double>& normal) {
        std::vector<point> A, B;
        for (auto i : xs) A.push_back(X[i].rank);
        for (auto i : ys) B.push_back(Y[i].rank);
        const auto sep = separate_multisets(A, B, normal);
        std::vector<std::size_t> nx, ny;
        for (auto i : sep.a_indices) nx.push_back(xs[i]);
        for (auto i : sep.b_indices) ny.push_back(ys[i]);
        xs = std::move(nx);
        ys = std::move(ny);
    };

    if (r == 1) separate({1.0});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j) {
            std::vector<double> diff(r, 0.0), sum(r, 0.0);
            diff[i] = 1.0;
            diff[j] = -1.0;
            sum[i] = 1.0;
            sum[j] = 1.0;
            separate(diff);
            separate(sum);
        }

    std::vector<point> A, B;
    for (auto i : xs) A.push_back(X[i].rank);
    for (auto i : ys) B.push_back(Y[i].rank);

    // Candidate order: the reading from the first surviving pair, then everything else.
    std::vector<std::pair<std::size_t, bool>> candidates;
    for (std::size_t s = 0; s < r; ++s) {
        if (weakly_precedes<double>(s, A.front(), B.front())) candidates.emplace_back(s, true);
        if (weakly_precedes<double>(s, B.front(), A.front())) candidates.emplace_back(s, false);
    }
    for (std::size_t s = 0; s < r; ++s)
        for (bool below : {true, false}) candidates.emplace_back(s, below);

    for (auto [s, below] : candidates) {
        if (below ? dominates(s, A, B) : dominates(s, B, A)) {
            comparable_subsets out;
            for (auto i : xs) out.x_ids.push_back(X[i].id);
            for (auto i : ys) out.y_ids.push_back(Y[i].id);
            out.s = s;
            out.x_below = below;
            return out;
        }
    }
    throw error(errc::invalid_argument, "separated subsets admit no dominating rank order");
}

} // namespace compgraph
