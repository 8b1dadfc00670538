// pvc: exact partial vertex cover on bounded-degeneracy graphs.
//
// Exit codes: 0 success, 1 input error, 2 capability (size guard) error,
// 3 biclique certificate from `compress`, 4 violated internal guarantee.

#include <sys/resource.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvc/compress.hpp"
#include "pvc/degeneracy.hpp"
#include "pvc/errors.hpp"
#include "pvc/io.hpp"
#include "pvc/oracle.hpp"
#include "pvc/solver.hpp"
#include "pvc/universal.hpp"

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

long peak_rss_kb() {
    rusage usage{};
    getrusage(RUSAGE_SELF, &usage);
    return usage.ru_maxrss;
}

int threads_from(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("PVC_THREADS"); env != nullptr) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string verified_string(pvc::VerifyStatus s) {
    switch (s) {
        case pvc::VerifyStatus::verified_true: return "true";
        case pvc::VerifyStatus::verified_false: return "false";
        case pvc::VerifyStatus::unverified: return "unverified";
    }
    return "?";
}

json witness_json(const pvc::UsetWitness& w) {
    return json{{"A", w.a}, {"B", w.b}};
}

void emit(const json& payload, bool report, const std::string& command, const json& parameters,
          const std::string& input_digest, std::uint64_t seed, double wall_ms) {
    if (report) {
        json envelope{{"command", command},
                      {"parameters", parameters},
                      {"input_digest", input_digest},
                      {"seed", seed},
                      {"wall_time_ms", wall_ms},
                      {"peak_rss_kb", peak_rss_kb()},
                      {"result", payload}};
        std::cout << envelope.dump(2) << '\n';
    } else {
        std::cout << payload.dump(2) << '\n';
    }
}

struct SolveArgs {
    std::string input;
    int k = 0;
    std::string algorithm = "fpt";
    std::string strategy = "auto";
    std::uint64_t seed = 0;
    double delta = 1e-3;
    int threads = 0;
    bool report = false;
};

int cmd_solve(const SolveArgs& a) {
    const auto start = Clock::now();
    const pvc::WeightedGraph g = pvc::load_instance(a.input);

    pvc::Solution sol;
    if (a.algorithm == "fpt") {
        pvc::SolveConfig cfg;
        cfg.strategy = a.strategy;
        cfg.seed = a.seed;
        cfg.delta = a.delta;
        cfg.threads = threads_from(a.threads);
        sol = pvc::solve(g, a.k, cfg);
    } else if (a.algorithm == "brute") {
        sol = pvc::brute_force_solve(g, a.k);
    } else {
        throw pvc::input_error("unknown algorithm '" + a.algorithm + "'");
    }

    std::vector<std::string> labels;
    labels.reserve(sol.vertices.size());
    for (pvc::VertexId v : sol.vertices) labels.push_back(g.label(v));

    json payload{{"value", sol.value},
                 {"reported_value", sol.reported_value},
                 {"solution", labels},
                 {"k", a.k},
                 {"degeneracy", sol.degeneracy},
                 {"l", sol.l},
                 {"strategy", sol.strategy},
                 {"family_size", sol.family_size},
                 {"members_evaluated", sol.members_evaluated},
                 {"seed", sol.seed},
                 {"wall_time_ms", ms_since(start)}};
    json params{{"input", a.input}, {"k", a.k},         {"algorithm", a.algorithm},
                {"strategy", a.strategy}, {"delta", a.delta}, {"threads", threads_from(a.threads)}};
    emit(payload, a.report, "solve", params, pvc::file_digest(a.input), a.seed, ms_since(start));
    return 0;
}

struct CompressArgs {
    std::string input;
    int k = 0;
    std::optional<int> p;
    bool planar = false;
    std::string output;
    std::string trace;
    bool report = false;
};

int cmd_compress(const CompressArgs& a) {
    const auto start = Clock::now();
    const pvc::WeightedGraph g = pvc::load_instance(a.input);
    pvc::CompressOptions opt;
    opt.p = a.p;
    opt.planar = a.planar;
    const auto result = pvc::compress(g, a.k, opt);

    if (const auto* bic = std::get_if<pvc::BicliqueReport>(&result)) {
        const json payload = pvc::biclique_report_json(*bic);
        emit(payload, a.report, "compress", json{{"input", a.input}, {"k", a.k}},
             pvc::file_digest(a.input), 0, ms_since(start));
        return 3;
    }

    const auto& reduced = std::get<pvc::ReducedInstance>(result);
    const json payload = pvc::reduced_instance_json(reduced);
    if (!a.output.empty()) {
        std::ofstream out(a.output);
        if (!out) throw pvc::input_error("cannot write '" + a.output + "'");
        out << payload.dump(2) << '\n';
    }
    if (!a.trace.empty()) {
        json events = json::array();
        pvc::Weight max_rho = 0;
        for (const auto& r : reduced.rho) max_rho = std::max(max_rho, r);
        for (const auto& ev : reduced.trace) {
            events.push_back({{"removed", ev.removed},
                              {"u", ev.u_labels},
                              {"c", ev.c_labels},
                              {"incident_weight", ev.incident_weight}});
        }
        std::ofstream out(a.trace);
        if (!out) throw pvc::input_error("cannot write '" + a.trace + "'");
        out << json{{"events", events}, {"max_rho", max_rho}}.dump(2) << '\n';
    }
    emit(payload, a.report, "compress",
         json{{"input", a.input}, {"k", a.k}, {"planar", a.planar}},
         pvc::file_digest(a.input), 0, ms_since(start));
    return 0;
}

struct UsetArgs {
    int n = 0;
    int l = 0;
    std::string strategy = "auto";
    std::uint64_t seed = 0;
    double delta = 1e-3;
    bool verify = false;
    std::string dump;
    bool report = false;
};

int cmd_uset(const UsetArgs& a) {
    const auto start = Clock::now();
    pvc::UsetStrategy strategy;
    if (a.strategy == "auto") {
        strategy = pvc::resolve_auto_strategy(a.n, a.l);
    } else if (a.strategy == "exhaustive") {
        strategy = pvc::UsetStrategy::exhaustive;
    } else if (a.strategy == "greedy") {
        strategy = pvc::UsetStrategy::greedy;
    } else if (a.strategy == "randomized") {
        strategy = pvc::UsetStrategy::randomized;
    } else {
        throw pvc::input_error("unknown strategy '" + a.strategy + "'");
    }

    pvc::SubsetFamily family = pvc::build_universal_set(
        a.n, a.l, strategy,
        strategy == pvc::UsetStrategy::randomized ? std::optional<std::uint64_t>(a.seed)
                                                  : std::nullopt,
        strategy == pvc::UsetStrategy::randomized ? std::optional<double>(a.delta) : std::nullopt);
    if (a.verify) pvc::verify_universal(family);

    json payload{{"n", a.n},
                 {"l", a.l},
                 {"strategy", pvc::to_string(family.strategy())},
                 {"seed", family.seed().has_value() ? json(*family.seed()) : json(nullptr)},
                 {"delta", family.delta().has_value() ? json(*family.delta()) : json(nullptr)},
                 {"size", family.size()},
                 {"verified", verified_string(family.verified())}};
    if (family.witness().has_value()) payload["witness"] = witness_json(*family.witness());

    if (!a.dump.empty()) {
        std::ofstream out(a.dump);
        if (!out) throw pvc::input_error("cannot write '" + a.dump + "'");
        for (std::size_t i = 0; i < family.size(); ++i) out << family.member_string(i) << '\n';
    }
    emit(payload, a.report, "uset",
         json{{"n", a.n}, {"l", a.l}, {"strategy", a.strategy}, {"delta", a.delta}}, "", a.seed,
         ms_since(start));
    return 0;
}

struct GenArgs {
    std::string model;
    int n = 0, d = 0, rows = 0, cols = 0, leaves = 0, k = 0, privates = 0;
    std::uint64_t seed = 0;
    std::string weights = "unit";
    std::string output;
};

int cmd_gen(const GenArgs& a) {
    pvc::GeneratorSpec spec;
    spec.model = pvc::GeneratorSpec::parse_model(a.model);
    spec.n = a.n;
    spec.d = a.d;
    spec.rows = a.rows;
    spec.cols = a.cols;
    spec.leaves = a.leaves;
    spec.k = a.k;
    spec.privates = a.privates;
    spec.seed = a.seed;
    if (a.weights == "unit") {
        spec.w_max = 1;
    } else if (a.weights.rfind("uniform:", 0) == 0) {
        spec.w_max = std::stoll(a.weights.substr(8));
        if (spec.w_max < 1) throw pvc::input_error("uniform weight bound must be >= 1");
    } else {
        throw pvc::input_error("weights must be 'unit' or 'uniform:MAX'");
    }
    const pvc::WeightedGraph g = pvc::generate(spec);
    if (a.output.empty()) {
        pvc::write_edge_list(g, std::cout);
    } else {
        pvc::write_edge_list_file(g, a.output);
    }
    return 0;
}

struct DegArgs {
    std::string input;
    bool report = false;
};

int cmd_degeneracy(const DegArgs& a) {
    const auto start = Clock::now();
    const pvc::WeightedGraph g = pvc::load_instance(a.input);
    const auto ord = pvc::degeneracy_ordering(g);
    json payload{{"n", g.vertex_count()},
                 {"m", g.edge_count()},
                 {"degeneracy", ord.degeneracy}};
    emit(payload, a.report, "degeneracy", json{{"input", a.input}}, pvc::file_digest(a.input), 0,
         ms_since(start));
    return 0;
}

struct VerifyArgs {
    std::string input;
    std::string family;
    int family_l = 0;
    std::string solution;  // comma-separated labels
    int k = 0;
    std::optional<pvc::Weight> expect_value;
    bool report = false;
};

int cmd_verify(const VerifyArgs& a) {
    const auto start = Clock::now();
    json payload;
    bool ok = true;

    if (!a.input.empty()) {
        const pvc::WeightedGraph g = pvc::load_instance(a.input);
        const auto ord = pvc::degeneracy_ordering(g);
        const int n = g.vertex_count();
        const int d = ord.degeneracy;

        std::int64_t degree_sum = 0;
        for (pvc::VertexId v = 0; v < n; ++v) degree_sum += g.degree(v);
        const bool identity_ok = degree_sum == 2 * (g.edge_count() - g.total_loop_weight());
        const bool degree_bound_ok = degree_sum <= 2LL * n * d;

        std::int64_t low = 0;
        for (pvc::VertexId v = 0; v < n; ++v) {
            if (g.degree(v) <= 2 * d) ++low;
        }
        const std::int64_t low_bound = n == 0 ? 0 : (n + 2 * d) / (2 * d + 1);

        const auto color = pvc::greedy_coloring(g, ord);
        bool coloring_ok = true;
        for (const pvc::Edge& e : g.edges()) {
            if (color[static_cast<std::size_t>(e.u)] == color[static_cast<std::size_t>(e.v)]) {
                coloring_ok = false;
            }
        }

        payload["graph"] = {{"n", n},
                            {"m", g.edge_count()},
                            {"degeneracy", d},
                            {"degree_sum_identity", identity_ok},
                            {"degree_sum_bound", degree_bound_ok},
                            {"low_degree_count", low},
                            {"low_degree_bound", low_bound},
                            {"low_degree_ok", low >= low_bound},
                            {"coloring_proper", coloring_ok}};
        ok = ok && identity_ok && degree_bound_ok && low >= low_bound && coloring_ok;

        if (!a.solution.empty()) {
            std::vector<pvc::VertexId> ids;
            std::stringstream ss(a.solution);
            for (std::string tok; std::getline(ss, tok, ',');) {
                const auto id = g.find_vertex(tok);
                if (!id.has_value()) throw pvc::input_error("unknown vertex label '" + tok + "'");
                ids.push_back(*id);
            }
            const pvc::Weight cov = g.coverage(ids);
            const bool size_ok = a.k == 0 || static_cast<int>(ids.size()) == a.k;
            const bool value_ok = !a.expect_value.has_value() || cov == *a.expect_value;
            payload["solution"] = {{"size", ids.size()}, {"coverage", cov},
                                   {"size_ok", size_ok},  {"value_ok", value_ok}};
            ok = ok && size_ok && value_ok;
        }
    }

    if (!a.family.empty()) {
        std::ifstream in(a.family);
        if (!in) throw pvc::input_error("cannot open '" + a.family + "'");
        std::vector<std::vector<int>> members;
        int n = 0;
        for (std::string line; std::getline(in, line);) {
            if (line.empty()) continue;
            if (n == 0) {
                n = static_cast<int>(line.size());
            } else if (static_cast<int>(line.size()) != n) {
                throw pvc::input_error("family dump lines have inconsistent lengths");
            }
            std::vector<int> elems;
            for (int i = 0; i < n; ++i) {
                if (line[static_cast<std::size_t>(i)] == '1') {
                    elems.push_back(i + 1);
                } else if (line[static_cast<std::size_t>(i)] != '0') {
                    throw pvc::input_error("family dump must be lines of 0/1");
                }
            }
            members.push_back(std::move(elems));
        }
        if (a.family_l < 1) throw pvc::input_error("--l is required with --family");
        pvc::SubsetFamily f = pvc::family_from_members(n, a.family_l, members);
        const auto witness = pvc::verify_universal(f);
        payload["family"] = {{"n", n},
                             {"l", a.family_l},
                             {"size", f.size()},
                             {"verified", verified_string(f.verified())}};
        if (witness.has_value()) payload["family"]["witness"] = witness_json(*witness);
        ok = ok && !witness.has_value();
    }

    if (payload.empty()) throw pvc::input_error("verify needs --input and/or --family");
    payload["ok"] = ok;
    emit(payload, a.report, "verify", json{{"input", a.input}, {"family", a.family}},
         a.input.empty() ? "" : pvc::file_digest(a.input), 0, ms_since(start));
    return ok ? 0 : 1;
}

struct BenchArgs {
    std::string config;
    std::string csv;
    int threads = 0;
    bool report = false;
};

json bench_row(const json& row, int threads) {
    json out;
    out["model"] = row.value("model", "degenerate");
    const auto start = Clock::now();
    try {
        pvc::GeneratorSpec spec;
        spec.model = pvc::GeneratorSpec::parse_model(out["model"].get<std::string>());
        spec.n = row.value("n", 0);
        spec.d = row.value("d", 0);
        spec.rows = row.value("rows", 0);
        spec.cols = row.value("cols", 0);
        spec.leaves = row.value("leaves", 0);
        spec.privates = row.value("privates", 0);
        spec.seed = row.value("gen_seed", 0ULL);
        if (spec.model == pvc::GeneratorSpec::Model::gadget_nice) spec.k = row.value("k", 1);
        const std::string weights = row.value("weights", "unit");
        if (weights.rfind("uniform:", 0) == 0) spec.w_max = std::stoll(weights.substr(8));
        const pvc::WeightedGraph g = pvc::generate(spec);

        const int k = row.at("k").get<int>();
        const std::string algorithm = row.value("algorithm", "fpt");
        pvc::Solution sol;
        if (algorithm == "brute") {
            sol = pvc::brute_force_solve(g, k);
        } else {
            pvc::SolveConfig cfg;
            cfg.strategy = row.value("strategy", "auto");
            cfg.seed = row.value("seed", 0ULL);
            cfg.delta = row.value("delta", 1e-3);
            cfg.threads = threads;
            sol = pvc::solve(g, k, cfg);
        }
        out["status"] = "ok";
        out["n"] = g.vertex_count();
        out["m"] = g.edge_count();
        out["k"] = k;
        out["algorithm"] = algorithm;
        out["strategy"] = sol.strategy;
        out["degeneracy"] = sol.degeneracy;
        out["l"] = sol.l;
        out["family_size"] = sol.family_size;
        out["members_evaluated"] = sol.members_evaluated;
        out["value"] = sol.value;
        out["reported_value"] = sol.reported_value;
        out["seed"] = sol.seed;
    } catch (const pvc::capability_error& e) {
        out["status"] = "capability_error";
        out["error"] = e.what();
    } catch (const pvc::input_error& e) {
        out["status"] = "input_error";
        out["error"] = e.what();
    }
    out["wall_time_ms"] = ms_since(start);
    return out;
}

int cmd_bench(const BenchArgs& a) {
    const auto start = Clock::now();
    std::ifstream in(a.config);
    if (!in) throw pvc::input_error("cannot open '" + a.config + "'");
    json config;
    try {
        in >> config;
    } catch (const json::parse_error& e) {
        throw pvc::input_error(std::string("bench config does not parse: ") + e.what());
    }
    const json rows = config.is_array() ? config : config.value("rows", json::array());
    if (!rows.is_array() || rows.empty()) throw pvc::input_error("bench config has no rows");

    json results = json::array();
    int index = 0;
    for (const auto& row : rows) {
        json r = bench_row(row, threads_from(a.threads));
        r["index"] = index++;
        results.push_back(std::move(r));
    }

    if (!a.csv.empty()) {
        std::ofstream csv(a.csv);
        if (!csv) throw pvc::input_error("cannot write '" + a.csv + "'");
        csv << "index,status,model,n,m,k,algorithm,strategy,degeneracy,l,family_size,"
               "members_evaluated,value,reported_value,seed,wall_time_ms\n";
        for (const auto& r : results) {
            auto cell = [&](const char* key) -> std::string {
                if (!r.contains(key)) return "";
                const auto& v = r.at(key);
                return v.is_string() ? v.get<std::string>() : v.dump();
            };
            csv << cell("index") << ',' << cell("status") << ',' << cell("model") << ','
                << cell("n") << ',' << cell("m") << ',' << cell("k") << ',' << cell("algorithm")
                << ',' << cell("strategy") << ',' << cell("degeneracy") << ',' << cell("l") << ','
                << cell("family_size") << ',' << cell("members_evaluated") << ',' << cell("value")
                << ',' << cell("reported_value") << ',' << cell("seed") << ','
                << cell("wall_time_ms") << '\n';
        }
    }

    emit(json{{"rows", results}}, a.report, "bench", json{{"config", a.config}},
         pvc::file_digest(a.config), 0, ms_since(start));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver and compressor for weighted partial vertex cover"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "solve partial vertex cover");
    solve->add_option("--input", solve_args.input, "graph file (edge list or compressed JSON)")
        ->required();
    solve->add_option("--k", solve_args.k, "number of vertices to pick")->required();
    solve->add_option("--algorithm", solve_args.algorithm, "fpt | brute")
        ->check(CLI::IsMember({"fpt", "brute"}));
    solve->add_option("--strategy", solve_args.strategy,
                      "auto | exhaustive | greedy | randomized");
    solve->add_option("--seed", solve_args.seed, "seed for the randomized strategy");
    solve->add_option("--delta", solve_args.delta, "failure probability for randomized");
    solve->add_option("--threads", solve_args.threads, "worker cap (or PVC_THREADS)");
    solve->add_flag("--json", "output is always JSON; accepted for compatibility");
    solve->add_flag("--report", solve_args.report, "wrap output in a run report");

    CompressArgs compress_args;
    int compress_p = 0;
    auto* compress = app.add_subcommand("compress", "reduce an instance, emitting H and rho");
    compress->add_option("--input", compress_args.input, "graph file (edge list)")->required();
    compress->add_option("--k", compress_args.k, "parameter k")->required();
    auto* compress_p_opt =
        compress->add_option("--p", compress_p, "biclique parameter (default: degeneracy+1)");
    compress->add_flag("--planar", compress_args.planar, "preset p = 3 (requires degeneracy <= 5)");
    compress->add_option("--output", compress_args.output, "write the instance JSON here");
    compress->add_option("--trace", compress_args.trace, "write the reduction trace here");
    compress->add_flag("--report", compress_args.report, "wrap output in a run report");

    UsetArgs uset_args;
    auto* uset = app.add_subcommand("uset", "build an (n,l)-universal set family");
    uset->add_option("--n", uset_args.n, "universe size")->required();
    uset->add_option("--l", uset_args.l, "subset size")->required();
    uset->add_option("--strategy", uset_args.strategy, "auto | exhaustive | greedy | randomized");
    uset->add_option("--seed", uset_args.seed, "seed for the randomized strategy");
    uset->add_option("--delta", uset_args.delta, "failure probability for randomized");
    uset->add_flag("--verify", uset_args.verify, "run the exhaustive verifier");
    uset->add_option("--dump", uset_args.dump, "write members as 0/1 lines to this file");
    uset->add_flag("--report", uset_args.report, "wrap output in a run report");

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a benchmark instance");
    gen->add_option("--model", gen_args.model,
                    "degenerate | forest | grid | star | path | gadget-nice")
        ->required();
    gen->add_option("--n", gen_args.n, "vertex count");
    gen->add_option("--d", gen_args.d, "degeneracy bound");
    gen->add_option("--rows", gen_args.rows, "grid rows");
    gen->add_option("--cols", gen_args.cols, "grid columns");
    gen->add_option("--leaves", gen_args.leaves, "star leaves");
    gen->add_option("--k", gen_args.k, "gadget parameter k");
    gen->add_option("--privates", gen_args.privates, "gadget private leaves per member");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_option("--weights", gen_args.weights, "unit | uniform:MAX");
    gen->add_option("--output", gen_args.output, "write edge list here (default stdout)");

    DegArgs deg_args;
    auto* deg = app.add_subcommand("degeneracy", "compute the degeneracy of a graph");
    deg->add_option("--input", deg_args.input, "graph file")->required();
    deg->add_flag("--report", deg_args.report, "wrap output in a run report");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check graph invariants, solutions, families");
    verify->add_option("--input", verify_args.input, "graph file");
    verify->add_option("--family", verify_args.family, "family dump (0/1 lines)");
    verify->add_option("--l", verify_args.family_l, "l for --family");
    verify->add_option("--solution", verify_args.solution, "comma-separated vertex labels");
    verify->add_option("--k", verify_args.k, "expected solution size");
    pvc::Weight expect_value = 0;
    auto* expect_value_opt =
        verify->add_option("--value", expect_value, "expected coverage of --solution");
    verify->add_flag("--report", verify_args.report, "wrap output in a run report");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "run a benchmark suite from a JSON config");
    bench->add_option("--config", bench_args.config, "JSON file with rows")->required();
    bench->add_option("--csv", bench_args.csv, "also write rows as CSV");
    bench->add_option("--threads", bench_args.threads, "worker cap (or PVC_THREADS)");
    bench->add_flag("--report", bench_args.report, "wrap output in a run report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // --help exits 0; any parse failure is an input error
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_args);
        if (compress->parsed()) {
            if (compress_p_opt->count() > 0) compress_args.p = compress_p;
            return cmd_compress(compress_args);
        }
        if (uset->parsed()) return cmd_uset(uset_args);
        if (gen->parsed()) return cmd_gen(gen_args);
        if (deg->parsed()) return cmd_degeneracy(deg_args);
        if (verify->parsed()) {
            if (expect_value_opt->count() > 0) verify_args.expect_value = expect_value;
            return cmd_verify(verify_args);
        }
        if (bench->parsed()) return cmd_bench(bench_args);
    } catch (const pvc::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 1;
    } catch (const pvc::capability_error& e) {
        std::cerr << "capability error: " << e.what() << '\n';
        return 2;
    } catch (const pvc::internal_error& e) {
        std::cerr << "internal error (this is a bug): " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
