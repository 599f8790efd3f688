// compgraph: generate, verify, analyze, export and run experiments on
// comparability-graph unions. Exit codes: 0 success, 1 violation, 2 bad input.

#include "compgraph/experiments.hpp"
#include "compgraph/instance.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace cg = compgraph;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_input = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw usage_error("cannot write '" + path + "'");
    out << text;
}

std::size_t env_limit(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoull(v);
    } catch (const std::exception&) {
        throw usage_error(std::string(name) + " must be a non-negative integer");
    }
}

// gen

struct gen_options {
    std::string kind;
    std::optional<std::uint32_t> a, b, r, d;
    std::optional<std::size_t> n;
    std::optional<double> epsilon;
    std::optional<std::uint64_t> seed;
    std::string variant = "overlapping";
    std::string out;
    bool deterministic = false;
};

int cmd_gen(const gen_options& o) {
    cg::instance_file f;
    if (o.kind == "grid") {
        if (o.n && (o.a || o.b)) throw usage_error("use either --n or --a/--b");
        cg::grid_params p;
        if (o.n) {
            p = cg::grid_params_from_n(*o.n, *o.seed);
        } else {
            if (!o.a || !o.b) throw usage_error("grid needs --a and --b, or --n");
            if (*o.a < 1 || *o.b < 1) throw usage_error("--a and --b must be >= 1");
            p = {*o.a, *o.b, *o.seed};
        }
        f = cg::make_instance(cg::build_grid(p), o.n);
    } else {
        const auto variant = cg::parse_variant(o.variant);
        cg::ranked_params p;
        if (o.n) {
            if (!o.epsilon || !o.r) throw usage_error("ranked --n needs --epsilon and --r");
            if (o.a || o.b) throw usage_error("use either --n or --a/--b");
            p = cg::ranked_params_from_n(*o.n, *o.epsilon, *o.r, *o.seed, o.d.value_or(3), variant);
        } else {
            if (!o.r || !o.b) throw usage_error("ranked needs --r and --b, or --n with --epsilon");
            p = {*o.r, *o.b, o.a.value_or(4), o.d.value_or(3), *o.seed, variant};
            if (p.r < 1 || p.r > 32 || p.b < 1 || p.a < 1) throw usage_error("need 1 <= r <= 32, b >= 1, a >= 1");
        }
        f = cg::make_instance(cg::build_ranked(p), o.n, o.epsilon);
    }
    if (!o.deterministic) f.meta["created"] = utc_timestamp();
    write_output(cg::serialize(f), o.out);

    const auto g = f.graph.to_graph();
    auto& log = o.out.empty() || o.out == "-" ? std::cerr : std::cout;
    log << "n " << g.order() << "\nedges " << g.edge_count() << "\nmax_degree " << g.max_degree() << "\n";
    return exit_ok;
}

// verify

int cmd_verify(const std::string& path) {
    const auto f = cg::load_instance(path);
    const auto checks = cg::verify_instance(f, env_limit("COMPGRAPH_CLIQUE_LIMIT", cg::default_clique_limit));
    bool ok = true;
    for (const auto& c : checks) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        ok = ok && c.passed;
    }
    return ok ? exit_ok : exit_violation;
}

// analyze

struct analyze_options {
    std::string file;
    bool omega = false, alpha = false, biclique = false, homogeneous = false;
    std::optional<std::size_t> budget;
    std::string out;
};

json oracle_json(const cg::oracle_result& r) {
    return {{"value", r.value}, {"witness", r.witness}, {"exact", r.exact}, {"explored", r.explored}};
}

int cmd_analyze(const analyze_options& o) {
    const auto f = cg::load_instance(o.file);
    const auto g = f.graph.to_graph();
    const std::size_t n = g.order();
    const auto clique_limit = env_limit("COMPGRAPH_CLIQUE_LIMIT", cg::default_clique_limit);
    const auto biclique_limit = env_limit("COMPGRAPH_BICLIQUE_LIMIT", cg::default_biclique_limit);
    const auto budget = o.budget.value_or(cg::default_node_budget);

    auto require = [&](std::size_t limit, const char* what) {
        if (n > limit && !o.budget)
            throw cg::error(cg::errc::limit_exceeded, std::string(what) + " oracle limited to n <= " + std::to_string(limit) +
                                                          " (n = " + std::to_string(n) + "); pass --budget to override");
    };
    if (o.omega || o.alpha) require(clique_limit, "clique");
    if (o.biclique) require(biclique_limit, "biclique");

    json rep;
    rep["n"] = n;
    rep["r"] = f.graph.relation_count();
    rep["edges"] = g.edge_count();
    if (o.omega) {
        const auto res = cg::max_clique_exact(g, budget);
        rep["omega"] = oracle_json(res);
        rep["omega"]["certified"] = cg::is_clique(g, res.witness.front());
    }
    if (o.alpha) {
        const auto res = cg::max_independent_exact(g, budget);
        rep["alpha"] = oracle_json(res);
        rep["alpha"]["certified"] = cg::is_independent(g, res.witness.front());
    }
    if (o.biclique) {
        const auto res = cg::max_balanced_biclique_exact(g, o.budget ? n : biclique_limit, budget);
        rep["biclique"] = oracle_json(res);
        rep["biclique"]["certified"] = cg::is_biclique(g, res.witness[0], res.witness[1]);
    }
    if (o.homogeneous) {
        const auto orders = cg::instance_orders(f);
        if (orders.empty() && f.graph.relation_count() > 0)
            throw cg::error(cg::errc::malformed_input, "generic instance without 'orders'; cannot extract a homogeneous set");
        const auto h = cg::extract_homogeneous(orders);
        const auto r = f.graph.relation_count();
        rep["homogeneous"] = {{"kind", cg::to_string(h.kind)},
                              {"vertices", h.vertices},
                              {"size", h.vertices.size()},
                              {"bound", cg::homogeneous_bound(n, r)},
                              {"meets_bound", cg::meets_homogeneous_bound(h.vertices.size(), n, r)},
                              {"certified", cg::is_homogeneous(g, h)}};
    }
    write_output(rep.dump(2) + "\n", o.out);
    return exit_ok;
}

// experiment

struct experiment_options {
    std::string kind;
    std::string spec;
    std::vector<std::uint64_t> a, b, r, n;
    std::optional<std::uint32_t> d;
    std::optional<double> epsilon;
    std::string variant = "overlapping";
    std::optional<std::uint64_t> seed;
    std::size_t seeds = 5;
    std::size_t trials = 100;
    std::string out;
};

template <class T>
void read_field(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        j.at(key).get_to(out);
    } catch (const json::exception&) {
        throw cg::error(cg::errc::malformed_input, std::string("spec field '") + key + "' has the wrong type");
    }
}

template <class T>
void read_list(const json& j, const char* key, std::vector<T>& out) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    try {
        if (v.is_array()) v.get_to(out);
        else out = {v.get<T>()};
    } catch (const json::exception&) {
        throw cg::error(cg::errc::malformed_input, std::string("spec field '") + key + "' has the wrong type");
    }
}

void load_spec(experiment_options& o) {
    std::ifstream in(o.spec);
    if (!in) throw cg::error(cg::errc::malformed_input, "cannot open spec '" + o.spec + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw cg::error(cg::errc::malformed_input, std::string("invalid spec JSON: ") + e.what());
    }
    if (!j.is_object()) throw cg::error(cg::errc::malformed_input, "spec must be a JSON object");
    read_field(j, "kind", o.kind);
    read_list(j, "a", o.a);
    read_list(j, "b", o.b);
    read_list(j, "r", o.r);
    read_list(j, "n", o.n);
    read_field(j, "variant", o.variant);
    read_field(j, "seeds", o.seeds);
    read_field(j, "trials", o.trials);
    if (j.contains("d")) {
        if (!j["d"].is_number_unsigned()) throw cg::error(cg::errc::malformed_input, "spec field 'd' must be unsigned");
        o.d = j["d"].get<std::uint32_t>();
    }
    if (j.contains("epsilon")) {
        if (!j["epsilon"].is_number()) throw cg::error(cg::errc::malformed_input, "spec field 'epsilon' must be a number");
        o.epsilon = j["epsilon"].get<double>();
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) throw cg::error(cg::errc::malformed_input, "spec field 'seed' must be unsigned");
        o.seed = j["seed"].get<std::uint64_t>();
    }
}

std::uint32_t narrow(std::uint64_t v, const char* what) {
    if (v < 1 || v > std::numeric_limits<std::uint32_t>::max())
        throw cg::error(cg::errc::malformed_input, std::string(what) + " out of range");
    return static_cast<std::uint32_t>(v);
}

int cmd_experiment(experiment_options o) {
    if (!o.spec.empty()) load_spec(o);
    if (!o.seed) throw cg::error(cg::errc::malformed_input, "a master --seed is required");
    if (o.seeds < 1) throw cg::error(cg::errc::malformed_input, "--seeds must be >= 1");

    cg::experiment_report rep;
    if (o.kind == "balls") {
        if (o.a.size() != 1 || o.b.size() != 1) throw cg::error(cg::errc::malformed_input, "balls needs one --a (bins) and one --b (balls)");
        if (o.a[0] < 1 || o.b[0] < 1 || o.trials < 1) throw cg::error(cg::errc::malformed_input, "balls needs a, b, trials >= 1");
        rep = cg::balls_into_bins(o.a[0], o.b[0], o.trials, *o.seed);
    } else if (o.kind == "grid") {
        std::vector<cg::grid_params> sweep;
        if (!o.n.empty()) {
            if (!o.a.empty() || !o.b.empty()) throw cg::error(cg::errc::malformed_input, "use either n or a/b");
            for (auto n : o.n) sweep.push_back(cg::grid_params_from_n(n));
        } else {
            if (o.a.empty() || o.b.empty()) throw cg::error(cg::errc::malformed_input, "grid needs a and b lists, or n");
            for (auto a : o.a)
                for (auto b : o.b) sweep.push_back({narrow(a, "a"), narrow(b, "b"), 0});
        }
        const auto seeds = cg::derive_seeds(*o.seed, o.seeds);
        cg::grid_experiment_options opt;
        opt.oracle_limit = env_limit("COMPGRAPH_CLIQUE_LIMIT", opt.oracle_limit);
        rep = cg::run_grid_experiment(sweep, seeds, opt);
    } else if (o.kind == "ranked") {
        const auto variant = cg::parse_variant(o.variant);
        const std::uint32_t d = o.d.value_or(3);
        std::vector<cg::ranked_params> sweep;
        if (!o.n.empty()) {
            if (!o.epsilon || o.r.size() != 1) throw cg::error(cg::errc::malformed_input, "ranked n sweep needs epsilon and one r");
            for (auto n : o.n) sweep.push_back(cg::ranked_params_from_n(n, *o.epsilon, narrow(o.r[0], "r"), 0, d, variant));
        } else {
            if (o.r.empty() || o.b.empty()) throw cg::error(cg::errc::malformed_input, "ranked needs r and b lists, or n");
            if (o.a.empty()) o.a = {4};
            for (auto r : o.r)
                for (auto b : o.b)
                    for (auto a : o.a) {
                        if (r > 32) throw cg::error(cg::errc::malformed_input, "r must be <= 32");
                        sweep.push_back({narrow(r, "r"), narrow(b, "b"), narrow(a, "a"), d, 0, variant});
                    }
        }
        const auto seeds = cg::derive_seeds(*o.seed, o.seeds);
        cg::ranked_experiment_options opt;
        opt.epsilon = o.epsilon;
        opt.biclique_limit = env_limit("COMPGRAPH_BICLIQUE_LIMIT", opt.biclique_limit);
        rep = cg::run_ranked_experiment(sweep, seeds, opt);
    } else {
        throw cg::error(cg::errc::malformed_input, "unknown experiment kind '" + o.kind + "'");
    }
    write_output(rep.to_json().dump(2) + "\n", o.out);
    for (const auto& a : rep.assertions)
        std::cerr << (a.passed ? "PASS " : "FAIL ") << (a.hard ? "" : "(soft) ") << a.name << "\n";
    return rep.hard_failure() ? exit_violation : exit_ok;
}

// export

int cmd_export(const std::string& file, const std::string& format, bool complement, const std::string& out) {
    const auto f = cg::load_instance(file);
    if (format == "dimacs") {
        const auto g = f.graph.to_graph();
        write_output(cg::to_dimacs(complement ? g.complement() : g), out);
    } else {
        write_output(cg::to_dot(f.graph, complement), out);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Comparability-graph union constructions and oracles"};
    app.require_subcommand(1);
    app.set_version_flag("--version", cg::tool_version);

    gen_options gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a construction instance");
    gen_cmd->add_option("kind", gen.kind, "grid or ranked")->required()->check(CLI::IsMember({"grid", "ranked"}));
    gen_cmd->add_option("--a", gen.a, "Cell size");
    gen_cmd->add_option("--b", gen.b, "Grid side / ranks per coordinate");
    gen_cmd->add_option("--r", gen.r, "Number of orders (ranked)");
    gen_cmd->add_option("--d", gen.d, "Expander degree (ranked, default 3)");
    gen_cmd->add_option("--n", gen.n, "Target vertex count; derives the other parameters");
    gen_cmd->add_option("--epsilon", gen.epsilon, "Edge exponent slack (ranked with --n)");
    gen_cmd->add_option("--seed", gen.seed, "Master seed")->required();
    gen_cmd->add_option("--variant", gen.variant, "overlapping or disjoint")->check(CLI::IsMember({"overlapping", "disjoint"}));
    gen_cmd->add_option("--out", gen.out, "Output file (default stdout)");
    gen_cmd->add_flag("--deterministic", gen.deterministic, "Omit the creation timestamp");

    std::string verify_file;
    auto* verify_cmd = app.add_subcommand("verify", "Check every invariant applicable to an instance");
    verify_cmd->add_option("file", verify_file)->required();

    analyze_options an;
    auto* analyze_cmd = app.add_subcommand("analyze", "Run exact oracles on an instance");
    analyze_cmd->add_option("file", an.file)->required();
    analyze_cmd->add_flag("--omega", an.omega, "Maximum clique");
    analyze_cmd->add_flag("--alpha", an.alpha, "Maximum independent set");
    analyze_cmd->add_flag("--biclique", an.biclique, "Largest balanced biclique");
    analyze_cmd->add_flag("--homogeneous", an.homogeneous, "Homogeneous set from the orders");
    analyze_cmd->add_option("--budget", an.budget, "Search-node budget; lifts the size limits");
    analyze_cmd->add_option("--out", an.out, "Output file (default stdout)");

    experiment_options ex;
    auto* ex_cmd = app.add_subcommand("experiment", "Run a seeded experiment sweep");
    ex_cmd->add_option("--kind", ex.kind, "balls, grid or ranked");
    ex_cmd->add_option("--spec", ex.spec, "JSON spec file; its fields override flags");
    ex_cmd->add_option("--a", ex.a, "Cell sizes (balls: bins)")->delimiter(',');
    ex_cmd->add_option("--b", ex.b, "Grid sides / rank counts (balls: balls)")->delimiter(',');
    ex_cmd->add_option("--r", ex.r, "Order counts (ranked)")->delimiter(',');
    ex_cmd->add_option("--n", ex.n, "Target vertex counts")->delimiter(',');
    ex_cmd->add_option("--d", ex.d, "Expander degree (ranked)");
    ex_cmd->add_option("--epsilon", ex.epsilon, "Edge exponent slack (ranked)");
    ex_cmd->add_option("--variant", ex.variant, "overlapping or disjoint");
    ex_cmd->add_option("--seed", ex.seed, "Master seed");
    ex_cmd->add_option("--seeds", ex.seeds, "Seeds per parameter point");
    ex_cmd->add_option("--trials", ex.trials, "Trials (balls)");
    ex_cmd->add_option("--out", ex.out, "Report file (default stdout)");

    std::string export_file, export_format = "dimacs", export_out;
    bool export_complement = false;
    auto* export_cmd = app.add_subcommand("export", "Export an instance as DIMACS or DOT");
    export_cmd->add_option("file", export_file)->required();
    export_cmd->add_option("--format", export_format)->check(CLI::IsMember({"dimacs", "dot"}));
    export_cmd->add_flag("--complement", export_complement, "Export the complement graph");
    export_cmd->add_option("--out", export_out, "Output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen);
        if (*verify_cmd) return cmd_verify(verify_file);
        if (*analyze_cmd) return cmd_analyze(an);
        if (*ex_cmd) return cmd_experiment(ex);
        if (*export_cmd) return cmd_export(export_file, export_format, export_complement, export_out);
    } catch (const cg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
