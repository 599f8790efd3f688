#pragma once

// Instance files (JSON), DIMACS / DOT export, and the invariant verifier behind `compgraph verify`.
//
// JSON vertex indices are zero-based; relation labels are written one-based (1..r).
// Serialization is canonical: edges sorted by (u, v) with u < v, labels ascending, keys sorted.

#include "compgraph/audit.hpp"
#include "compgraph/error.hpp"
#include "compgraph/grid.hpp"
#include "compgraph/oracles.hpp"
#include "compgraph/poset.hpp"
#include "compgraph/ranked.hpp"

#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace compgraph {

inline constexpr const char* tool_version = "1.0.0";
inline constexpr int instance_format_version = 1;
inline constexpr std::uint64_t max_instance_edges = 20'000'000;

enum class instance_kind { grid, ranked, generic };

inline const char* to_string(instance_kind k) {
    switch (k) {
        case instance_kind::grid: return "grid";
        case instance_kind::ranked: return "ranked";
        case instance_kind::generic: return "generic";
    }
    return "generic";
}

struct instance_file {
    instance_kind kind = instance_kind::generic;
    labeled_union_graph graph;
    nlohmann::json construction = nlohmann::json::object();
    /// Generic instances may list the directed pairs of each relation.
    std::optional<std::vector<std::vector<vertex_pair>>> orders;
    nlohmann::json meta = nlohmann::json::object();
    /// False when the parsed text was not in canonical form (parsing canonicalizes).
    bool canonical = true;
};

inline instance_file make_instance(const grid_construction& gc, std::optional<std::size_t> requested_n = {}) {
    if (grid_edge_count(gc.params()) > max_instance_edges)
        throw error(errc::limit_exceeded, "grid union has " + std::to_string(grid_edge_count(gc.params())) +
                                              " edges; instance files are limited to " +
                                              std::to_string(max_instance_edges));
    instance_file f;
    f.kind = instance_kind::grid;
    f.graph = grid_union(gc);
    const auto& p = gc.params();
    f.construction = {{"a", p.a}, {"b", p.b}, {"seed", p.seed}, {"n", gc.size()}};
    if (requested_n) f.construction["requested_n"] = *requested_n;
    f.meta = {{"tool_version", tool_version}};
    return f;
}

inline instance_file make_instance(const ranked_construction& rc, std::optional<std::size_t> requested_n = {},
                                   std::optional<double> epsilon = {}) {
    instance_file f;
    f.kind = instance_kind::ranked;
    f.graph = ranked_union(rc);
    const auto& p = rc.params();
    f.construction = {{"r", p.r}, {"b", p.b}, {"a", p.a}, {"d", p.d}, {"seed", p.seed},
                      {"variant", to_string(p.variant)}, {"n", rc.size()},
                      {"expander_attempts", rc.expander_attempts()}};
    if (requested_n) f.construction["requested_n"] = *requested_n;
    if (epsilon) f.construction["epsilon"] = *epsilon;
    f.meta = {{"tool_version", tool_version}};
    return f;
}

inline nlohmann::json to_json(const instance_file& f) {
    nlohmann::json j;
    j["format_version"] = instance_format_version;
    j["kind"] = to_string(f.kind);
    j["n"] = f.graph.order();
    j["r"] = f.graph.relation_count();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (const auto& e : f.graph.edges()) {
        nlohmann::json labels = nlohmann::json::array();
        for (std::size_t s = 0; s < 32; ++s)
            if (e.labels >> s & 1U) labels.push_back(s + 1);
        edges.push_back({e.u, e.v, std::move(labels)});
    }
    j["construction"] = f.construction;
    if (f.orders) {
        auto& orders = j["orders"] = nlohmann::json::array();
        for (const auto& rel : *f.orders) {
            auto sorted = rel;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            nlohmann::json list = nlohmann::json::array();
            for (auto [u, v] : sorted) list.push_back({u, v});
            orders.push_back(std::move(list));
        }
    }
    j["meta"] = f.meta;
    return j;
}

inline std::string serialize(const instance_file& f) { return to_json(f).dump() + "\n"; }

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw error(errc::malformed_input, what); }

inline std::uint64_t get_uint(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_unsigned())
        malformed(std::string("missing or invalid unsigned field '") + key + "'");
    return j.at(key).get<std::uint64_t>();
}

} // namespace detail

inline instance_file parse_instance(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        detail::malformed(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) detail::malformed("top level is not an object");
    if (detail::get_uint(j, "format_version") != instance_format_version) detail::malformed("unsupported format_version");

    instance_file f;
    if (!j.contains("kind") || !j["kind"].is_string()) detail::malformed("missing 'kind'");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "grid") f.kind = instance_kind::grid;
    else if (kind == "ranked") f.kind = instance_kind::ranked;
    else if (kind == "generic") f.kind = instance_kind::generic;
    else detail::malformed("unknown kind '" + kind + "'");

    const auto n = detail::get_uint(j, "n");
    const auto r = detail::get_uint(j, "r");
    if (n > std::numeric_limits<vertex>::max()) detail::malformed("n too large");
    if (r > 32) detail::malformed("r must be <= 32");
    if (!j.contains("edges") || !j["edges"].is_array()) detail::malformed("missing 'edges' array");

    std::vector<labeled_edge> edges;
    std::optional<std::pair<vertex, vertex>> previous;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() || !e[2].is_array())
            detail::malformed("edge records must be [u, v, [labels]]");
        const auto u = e[0].get<std::uint64_t>(), v = e[1].get<std::uint64_t>();
        if (u >= n || v >= n) detail::malformed("edge endpoint outside [0, n)");
        if (u == v) detail::malformed("loop edge");
        if (e[2].empty()) detail::malformed("edge with empty label set");
        label_set labels = 0;
        std::uint64_t last_label = 0;
        for (const auto& l : e[2]) {
            if (!l.is_number_unsigned()) detail::malformed("labels must be unsigned integers");
            const auto s = l.get<std::uint64_t>();
            if (s < 1 || s > r) detail::malformed("label outside [1, r]");
            if (s <= last_label) f.canonical = false;
            last_label = s;
            labels |= label_set{1} << (s - 1);
        }
        if (u > v) f.canonical = false;
        const std::pair<vertex, vertex> key{static_cast<vertex>(std::min(u, v)), static_cast<vertex>(std::max(u, v))};
        if (previous && !(*previous < key)) f.canonical = false;
        previous = key;
        edges.push_back({static_cast<vertex>(u), static_cast<vertex>(v), labels});
    }
    f.graph = labeled_union_graph::from_edges(n, r, std::move(edges));

    if (j.contains("construction")) {
        if (!j["construction"].is_object()) detail::malformed("'construction' must be an object");
        f.construction = j["construction"];
    }
    if (j.contains("meta")) f.meta = j["meta"];
    if (j.contains("orders")) {
        const auto& orders = j["orders"];
        if (!orders.is_array() || orders.size() != r) detail::malformed("'orders' must list one relation per label");
        std::vector<std::vector<vertex_pair>> rels;
        for (const auto& rel : orders) {
            if (!rel.is_array()) detail::malformed("relation must be an array of pairs");
            auto& out = rels.emplace_back();
            for (const auto& pr : rel) {
                if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_unsigned() || !pr[1].is_number_unsigned())
                    detail::malformed("relation pairs must be [u, v]");
                const auto u = pr[0].get<std::uint64_t>(), v = pr[1].get<std::uint64_t>();
                if (u >= n || v >= n) detail::malformed("relation pair outside [0, n)");
                out.emplace_back(static_cast<vertex>(u), static_cast<vertex>(v));
            }
        }
        f.orders = std::move(rels);
    }
    return f;
}

inline instance_file load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::malformed_input, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

inline grid_params grid_params_of(const instance_file& f) {
    const auto& c = f.construction;
    grid_params p{static_cast<std::uint32_t>(detail::get_uint(c, "a")), static_cast<std::uint32_t>(detail::get_uint(c, "b")),
                  detail::get_uint(c, "seed")};
    if (p.a < 1 || p.b < 1) detail::malformed("grid construction needs a, b >= 1");
    if (p.vertex_count() != f.graph.order() || f.graph.relation_count() != 2)
        detail::malformed("grid construction record does not match n / r");
    return p;
}

inline ranked_params ranked_params_of(const instance_file& f) {
    const auto& c = f.construction;
    ranked_params p;
    p.r = static_cast<std::uint32_t>(detail::get_uint(c, "r"));
    p.b = static_cast<std::uint32_t>(detail::get_uint(c, "b"));
    p.a = static_cast<std::uint32_t>(detail::get_uint(c, "a"));
    p.d = static_cast<std::uint32_t>(detail::get_uint(c, "d"));
    p.seed = detail::get_uint(c, "seed");
    if (!c.contains("variant") || !c["variant"].is_string()) detail::malformed("ranked construction needs 'variant'");
    try {
        p.variant = parse_variant(c["variant"].get<std::string>());
    } catch (const error& e) {
        detail::malformed(e.what());
    }
    if (p.r < 1 || p.b < 1 || p.a < 1 || p.r > 32) detail::malformed("ranked construction needs r, b, a >= 1");
    if (p.vertex_count() != f.graph.order() || f.graph.relation_count() != p.r)
        detail::malformed("ranked construction record does not match n / r");
    return p;
}

/// The strict orders behind an instance: regenerated for grid / ranked files, closed from the
/// listed pairs for generic files. Empty when a generic file carries no orders.
inline std::vector<strict_order> instance_orders(const instance_file& f) {
    switch (f.kind) {
        case instance_kind::grid: {
            const auto gc = build_grid(grid_params_of(f));
            return {grid_order1(gc), grid_order2(gc)};
        }
        case instance_kind::ranked: {
            const auto rc = build_ranked(ranked_params_of(f));
            return {rc.orders().begin(), rc.orders().end()};
        }
        case instance_kind::generic: break;
    }
    std::vector<strict_order> out;
    if (f.orders)
        for (const auto& rel : *f.orders) out.push_back(strict_order::from_closed(f.graph.order(), rel));
    return out;
}

struct check {
    std::string name;
    bool passed = true;
    std::string detail;
};

inline std::string summarize(const order_audit& a) {
    return std::to_string(a.irreflexivity.size()) + " irreflexivity, " + std::to_string(a.antisymmetry.size()) +
           " antisymmetry, " + std::to_string(a.transitivity.size()) + " transitivity violations";
}

/// Every invariant applicable to the instance kind. Malformed construction records throw.
inline std::vector<check> verify_instance(const instance_file& f, std::size_t oracle_limit = default_clique_limit) {
    std::vector<check> out;
    out.push_back({"canonical_form", f.canonical, f.canonical ? "" : "edges or labels not in canonical order"});

    auto labels_match = [&](std::span<const strict_order> orders) {
        const auto expected = union_graphs(orders);
        std::size_t mismatches = 0;
        const auto got = f.graph.edges();
        const auto want = expected.edges();
        std::size_t i = 0, k = 0;
        while (i < got.size() || k < want.size()) {
            if (k == want.size() || (i < got.size() && std::pair(got[i].u, got[i].v) < std::pair(want[k].u, want[k].v))) {
                ++mismatches, ++i;
            } else if (i == got.size() || std::pair(want[k].u, want[k].v) < std::pair(got[i].u, got[i].v)) {
                ++mismatches, ++k;
            } else {
                mismatches += got[i].labels != want[k].labels;
                ++i, ++k;
            }
        }
        out.push_back({"edge_labels_match_orders", mismatches == 0, std::to_string(mismatches) + " mismatched edges"});
    };
    auto orders_are_partial = [&](std::span<const strict_order> orders) {
        for (std::size_t s = 0; s < orders.size(); ++s) {
            const auto a = is_partial_order(orders[s]);
            out.push_back({"order" + std::to_string(s + 1) + "_partial_order", a.ok(), summarize(a)});
        }
    };

    switch (f.kind) {
        case instance_kind::grid: {
            const auto gc = build_grid(grid_params_of(f));
            const std::array<strict_order, 2> orders{grid_order1(gc), grid_order2(gc)};
            labels_match(orders);
            const auto audit = audit_grid(gc);
            out.push_back({"order1_partial_order", audit.order1.ok(), summarize(audit.order1)});
            out.push_back({"order2_partial_order", audit.order2.ok(), summarize(audit.order2)});
            out.push_back({"edge_disjointness", audit.overlapping_pairs == 0,
                           std::to_string(audit.overlapping_pairs) + " pairs comparable in both orders"});
            out.push_back({"exact_coverage", audit.coverage_failures == 0 && audit.same_line_failures == 0,
                           std::to_string(audit.coverage_failures) + " cross pairs, " +
                               std::to_string(audit.same_line_failures) + " same-line pairs"});
            if (f.graph.order() <= oracle_limit) {
                const auto alpha = max_independent_exact(f.graph.to_graph());
                out.push_back({"independence_number_equals_a", alpha.exact && alpha.value == gc.a(),
                               "alpha = " + std::to_string(alpha.value) + ", a = " + std::to_string(gc.a())});
            }
            break;
        }
        case instance_kind::ranked: {
            const auto rc = build_ranked(ranked_params_of(f));
            labels_match(rc.orders());
            const auto audit = audit_ranked(rc);
            for (std::size_t s = 0; s < audit.orders.size(); ++s)
                out.push_back({"order" + std::to_string(s + 1) + "_partial_order", audit.orders[s].ok(), summarize(audit.orders[s])});
            out.push_back({"rank_coverage", audit.rank_coverage_failures == 0,
                           std::to_string(audit.rank_coverage_failures) + " rank pairs"});
            if (rc.params().variant == ranked_variant::disjoint)
                out.push_back({"edge_disjointness", audit.multi_label_edges == 0,
                               std::to_string(audit.multi_label_edges) + " edges with several labels"});
            if (audit.degree_checked)
                out.push_back({"degree_lemma", static_cast<double>(audit.max_degree) <= audit.degree_bound,
                               "max degree " + std::to_string(audit.max_degree)});
            break;
        }
        case instance_kind::generic: {
            if (f.orders) {
                const auto orders = instance_orders(f);
                orders_are_partial(orders);
                labels_match(orders);
            }
            break;
        }
    }
    return out;
}

/// DIMACS edge format: "p edge n m" then one-based "e u v" lines in sorted order.
inline std::string to_dimacs(const graph& g) {
    std::string s = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edges()) s += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return s;
}

/// Undirected DOT; edges carry their one-based relation labels unless `complement` is set.
inline std::string to_dot(const labeled_union_graph& g, bool complement = false) {
    std::string s = "graph G {\n";
    for (vertex v = 0; v < g.order(); ++v) s += "  " + std::to_string(v) + ";\n";
    if (complement) {
        for (auto [u, v] : g.to_graph().complement().edges())
            s += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    } else {
        for (const auto& e : g.edges()) {
            std::string labels;
            for (std::size_t i = 0; i < 32; ++i)
                if (e.labels >> i & 1U) labels += (labels.empty() ? "" : ",") + std::to_string(i + 1);
            s += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + " [label=\"" + labels + "\"];\n";
        }
    }
    s += "}\n";
    return s;
}

} // namespace compgraph
