#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kiso/cliques.hpp"
#include "kiso/constructive.hpp"
#include "kiso/edge_list.hpp"
#include "kiso/generators.hpp"
#include "kiso/isolation.hpp"
#include "kiso/sweep.hpp"

namespace kiso::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public InputError {
public:
    using InputError::InputError;
};

Json set_json(const VertexSet& s) { return Json(s.members()); }

Json graph_json(const Graph& g) {
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return Json{{"n", g.order()}, {"edges", std::move(edges)}};
}

Json trace_json(const std::vector<TraceStep>& trace) {
    Json out = Json::array();
    for (const TraceStep& step : trace) {
        Json entry{{"tag", to_string(step.tag)}, {"depth", step.depth}};
        entry["pivot"] = step.pivot >= 0 ? Json(step.pivot) : Json(nullptr);
        entry["link"] = step.link >= 0 ? Json(step.link) : Json(nullptr);
        entry["chosen"] = step.chosen;
        entry["scope"] = step.scope;
        out.push_back(std::move(entry));
    }
    return out;
}

void emit(std::ostream& out, const Json& report) { out << report.dump() << '\n'; }

struct SolveArgs {
    std::string input;
    int k = 0;
    std::string method = "bnb";
    int oracle_cap = OracleOptions{}.cap;
    bool timing = false;
};

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const Graph g = read_edge_list(a.input);
    const SolveReport r = a.method == "oracle" ? iota_oracle(g, a.k, {a.oracle_cap}) : iota_solve(g, a.k);
    Json report{{"command", "solve"}, {"input", a.input}, {"k", a.k}, {"n", g.order()}, {"m", g.edge_count()},
                {"method", a.method}, {"iota", r.iota}, {"set", set_json(r.optimal_set)},
                {"valid", verify_isolating(g, a.k, r.optimal_set).valid}};
    Json stats{{"nodes_expanded", r.nodes_expanded}};
    if (a.timing) stats["elapsed_ms"] = r.elapsed.count() * 1e3;
    report["stats"] = std::move(stats);
    emit(out, report);
    return kOk;
}

struct BoundArgs {
    std::string input;
    int k = 0;
    bool per_component = false;
    bool verify_steps = false;
};

int cmd_bound(const BoundArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = read_edge_list(a.input);
    const BoundOptions options{a.verify_steps};
    Json report{{"command", "bound"}, {"input", a.input}, {"k", a.k}, {"n", g.order()}, {"m", g.edge_count()}};

    if (a.per_component) {
        VertexSet all(g.order());
        Json parts = Json::array();
        for (const ComponentBound& part : theorem1_per_component(g, a.k, options)) {
            Json entry{{"members", set_json(part.members)}};
            if (const auto* ex = std::get_if<ExceptionalComponent>(&part.outcome)) {
                entry["exceptional"] = to_string(ex->kind);
                entry["set"] = set_json(ex->forced_set);
                all |= ex->forced_set;
            } else {
                const auto& b = std::get<BoundResult>(part.outcome);
                entry["bound"] = b.bound;
                entry["set"] = set_json(b.set);
                entry["trace"] = trace_json(b.trace);
                all |= b.set;
            }
            parts.push_back(std::move(entry));
        }
        report["per_component"] = true;
        report["size"] = all.count();
        report["set"] = set_json(all);
        report["valid"] = verify_isolating(g, a.k, all).valid;
        report["components"] = std::move(parts);
        emit(out, report);
        return kOk;
    }

    try {
        const BoundResult r = theorem1_set(g, a.k, options);
        report["bound"] = r.bound;
        report["size"] = r.set.count();
        report["set"] = set_json(r.set);
        report["valid"] = verify_isolating(g, a.k, r.set).valid;
        report["trace"] = trace_json(r.trace);
        emit(out, report);
        return kOk;
    } catch (const BoundPreconditionError& e) {
        if (e.disconnected()) {
            report["error"] = "graph is not connected";
            err << "error: graph is not connected; rerun with --per-component\n";
        } else {
            report["error"] = e.what();
            report["exception"] = to_string(e.kind());
            err << "error: " << e.what() << '\n';
        }
        emit(out, report);
        return kInputError;
    }
}

struct VerifyArgs {
    std::string input;
    int k = 0;
    std::string set;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const Graph g = read_edge_list(a.input);
    const VertexSet d = make_vertex_set(g, parse_set_literal(a.set));
    const IsolationCertificate cert = verify_isolating(g, a.k, d);
    Json report{{"command", "verify"}, {"input", a.input}, {"k", a.k}, {"set", set_json(d)},
                {"valid", cert.valid}, {"residual_size", cert.residual_size}};
    report["witness"] = cert.witness ? set_json(*cert.witness) : Json(nullptr);
    emit(out, report);
    return cert.valid ? kOk : kInvalid;
}

struct GenArgs {
    std::string kind;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<double> p;
    std::optional<std::uint64_t> seed;
    std::string out_path;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
    auto need = [&](const auto& opt, const char* flag) {
        if (!opt) throw UsageError("gen " + a.kind + " requires " + flag);
        return *opt;
    };
    Json params;
    Graph g;
    if (a.kind == "extremal") {
        const int n = need(a.n, "--n");
        const int k = need(a.k, "--k");
        g = build_extremal(n, k);
        params = {{"n", n}, {"k", k}};
    } else if (a.kind == "path" || a.kind == "cycle" || a.kind == "complete") {
        const int n = need(a.n, "--n");
        g = a.kind == "path" ? build_path(n) : a.kind == "cycle" ? build_cycle(n) : build_complete(n);
        params = {{"n", n}};
    } else if (a.kind == "random") {
        const int n = need(a.n, "--n");
        const double p = need(a.p, "--p");
        const std::uint64_t seed = need(a.seed, "--seed");
        g = gen_random_connected(n, p, seed);
        params = {{"n", n}, {"p", p}, {"seed", seed}};
    } else {
        throw UsageError("unknown generator kind '" + a.kind + "'");
    }

    if (a.out_path.empty()) {
        write_edge_list(out, g);
        return kOk;
    }
    std::ofstream file(a.out_path, std::ios::binary);
    if (!file) throw InputError("cannot write '" + a.out_path + "'");
    write_edge_list(file, g);
    emit(out, Json{{"command", "gen"}, {"kind", a.kind}, {"params", params}, {"n", g.order()},
                   {"m", g.edge_count()}, {"out", a.out_path}});
    return kOk;
}

struct CheckArgs {
    std::string mode = "exhaustive";
    int n_max = 0;
    std::optional<int> n_min;
    int k_max = 3;
    std::optional<std::uint64_t> count;
    std::optional<std::uint64_t> seed;
    std::optional<double> p;
    int oracle_cap = OracleOptions{}.cap;
    int cap = kDefaultEnumerationCap;
    bool verify_steps = false;
    bool serial = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
    SweepOptions options;
    options.k_max = a.k_max;
    options.oracle_cap = a.oracle_cap;
    options.verify_each_step = a.verify_steps;
    options.enumeration_cap = a.cap;

    Json summary{{"command", "check-theorem"}, {"mode", a.mode}};
    SweepSummary result;
    if (a.mode == "exhaustive") {
        result = a.serial ? check_exhaustive_serial(a.n_max, options) : check_exhaustive(a.n_max, options);
        summary["n_max"] = a.n_max;
    } else if (a.mode == "random") {
        if (!a.count) throw UsageError("random mode requires --count");
        if (!a.seed) throw UsageError("random mode requires --seed");
        RandomSweepConfig config;
        config.count = *a.count;
        config.n_max = a.n_max;
        config.n_min = a.n_min.value_or(a.n_max);
        config.seed = *a.seed;
        config.p = a.p;
        result = a.serial ? check_random_serial(config, options) : check_random(config, options);
        summary["count"] = config.count;
        summary["n_min"] = config.n_min;
        summary["n_max"] = config.n_max;
        summary["seed"] = config.seed;
    } else {
        throw UsageError("unknown mode '" + a.mode + "' (expected exhaustive or random)");
    }

    for (const TheoremViolation& v : result.violations) {
        emit(out, Json{{"command", "check-theorem"}, {"violation", v.reason}, {"n", v.n}, {"index", v.index},
                       {"k", v.k}, {"graph", graph_json(v.graph)}});
    }
    summary["k_max"] = a.k_max;
    summary["graphs"] = result.graphs;
    summary["instances"] = result.instances;
    summary["exceptional"] = result.exceptional;
    summary["violations"] = result.violations.size();
    emit(out, summary);
    return result.violations.empty() ? kOk : kViolation;
}

}  // namespace

std::vector<int> parse_set_literal(const std::string& text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        int value = 0;
        const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || end != token.data() + token.size() || value < 0)
            throw UsageError("malformed vertex '" + token + "' in set literal");
        out.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '\t' || c == '\n') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and constructive k-clique isolation"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Exact minimum k-clique isolating set");
    solve_cmd->add_option("file", solve.input, "Edge-list file")->required();
    solve_cmd->add_option("--k", solve.k, "Clique order")->required()->check(CLI::PositiveNumber);
    solve_cmd->add_option("--method", solve.method, "bnb or oracle")->check(CLI::IsMember({"bnb", "oracle"}));
    solve_cmd->add_option("--oracle-cap", solve.oracle_cap, "Vertex cap for the subset oracle");
    solve_cmd->add_flag("--timing", solve.timing, "Include elapsed time in the report");

    BoundArgs bound;
    auto* bound_cmd = app.add_subcommand("bound", "Constructive isolating set of size <= floor(n/(k+1))");
    bound_cmd->add_option("file", bound.input, "Edge-list file")->required();
    bound_cmd->add_option("--k", bound.k, "Clique order")->required()->check(CLI::PositiveNumber);
    bound_cmd->add_flag("--per-component", bound.per_component, "Handle each component separately");
    bound_cmd->add_flag("--verify-steps", bound.verify_steps, "Verify every recursive result");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate isolating set");
    verify_cmd->add_option("file", verify.input, "Edge-list file")->required();
    verify_cmd->add_option("--k", verify.k, "Clique order")->required()->check(CLI::PositiveNumber);
    verify_cmd->add_option("--set", verify.set, "Vertices, e.g. \"0 3 5\"");

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as an edge list");
    gen_cmd->add_option("kind", gen.kind, "extremal, path, cycle, complete or random")->required();
    gen_cmd->add_option("--n", gen.n, "Vertex count");
    gen_cmd->add_option("--k", gen.k, "Clique order (extremal)");
    gen_cmd->add_option("--p", gen.p, "Extra-edge probability (random)");
    gen_cmd->add_option("--seed", gen.seed, "Seed (random)");
    gen_cmd->add_option("--out", gen.out_path, "Output path; stdout when omitted");

    CheckArgs check;
    auto* check_cmd = app.add_subcommand("check-theorem", "Check the n/(k+1) bound over many graphs");
    check_cmd->add_option("--mode", check.mode, "exhaustive or random");
    check_cmd->add_option("--n-max", check.n_max, "Largest vertex count")->required();
    check_cmd->add_option("--n-min", check.n_min, "Smallest vertex count (random)");
    check_cmd->add_option("--k-max", check.k_max, "Check k = 1..k-max");
    check_cmd->add_option("--count", check.count, "Number of random graphs");
    check_cmd->add_option("--seed", check.seed, "Seed (random)");
    check_cmd->add_option("--p", check.p, "Fixed extra-edge probability (random)");
    check_cmd->add_option("--oracle-cap", check.oracle_cap, "Use the subset oracle up to this order");
    check_cmd->add_option("--cap", check.cap, "Exhaustive enumeration cap");
    check_cmd->add_flag("--verify-steps", check.verify_steps, "Verify every recursive construction step");
    check_cmd->add_flag("--serial", check.serial, "Use the single-threaded reference sweep");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve, out);
        if (*bound_cmd) return cmd_bound(bound, out, err);
        if (*verify_cmd) return cmd_verify(verify, out);
        if (*gen_cmd) return cmd_gen(gen, out);
        if (*check_cmd) return cmd_check(check, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace kiso::cli
