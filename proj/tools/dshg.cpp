#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dshg/baselines.hpp"
#include "dshg/local.hpp"
#include "dshg/objective.hpp"
#include "dshg/rng.hpp"
#include "dshg/solvers.hpp"
#include "dshg/synth.hpp"

namespace {

using namespace dshg;

constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

void write_hyperedge_list(const Hypergraph& h, std::ostream& os) {
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& members = h.edge(e);
        for (std::size_t i = 0; i < members.size(); ++i)
            os << (i ? " " : "") << h.label_of(members[i]);
        os << '\n';
    }
}

void write_label_list(const Hypergraph& h, const std::vector<int>& ids, std::ostream& os) {
    for (int v : ids) os << h.label_of(v) << '\n';
}

std::vector<double> load_vertex_values(const std::string& path, const Hypergraph& h) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open vertex value file: " + path);
    std::vector<double> values(h.vertex_count(), 0.0);
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long label;
        double value;
        if (!(ls >> label)) continue;
        if (!(ls >> value))
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": expected 'label value'");
        int v = h.id_of(label);
        if (v < 0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": unknown vertex label " + std::to_string(label));
        values[v] = value;
    }
    return values;
}

struct SolveArgs {
    std::string input, objective = "dshg", method = "di", seeds_path, values_path, out_path;
    double eps = 1.0;
    double bs_lo = -1.0, bs_hi = -1.0, bs_gap = -1.0;
    double clamp_multiplier = 1.0;
    bool no_clamp = false;
};

int cmd_solve(const SolveArgs& args) {
    Hypergraph h = load_hypergraph(args.input);
    SeedSet seeds;
    if (!args.seeds_path.empty()) seeds = load_seed_set(args.seeds_path, h);

    ObjectiveSpec spec;
    if (args.objective == "dshg") {
        spec = ObjectiveSpec::dshg();
    } else if (args.objective == "adsh") {
        spec = ObjectiveSpec::adsh(seeds, args.eps);
    } else if (args.objective == "adsh-f") {
        spec = ObjectiveSpec::adsh_fractional(seeds, args.eps);
    } else if (args.objective == "hdsp") {
        if (args.values_path.empty())
            throw std::invalid_argument("--values is required for the hdsp objective");
        spec = ObjectiveSpec::heavy_dense(load_vertex_values(args.values_path, h));
    } else if (args.objective == "penalty") {
        if (args.values_path.empty())
            throw std::invalid_argument("--values is required for the penalty objective");
        spec = ObjectiveSpec::vertex_penalty(load_vertex_values(args.values_path, h));
    } else {
        throw std::invalid_argument("unknown objective: " + args.objective);
    }
    validate_objective(h, spec);

    SolveReport report;
    if (args.method == "di") {
        report = solve(h, spec, SolveMethod::kDensityImprovement);
    } else if (args.method == "bs") {
        SearchRange r = default_search_range(h, spec);
        if (args.bs_lo >= 0.0) r.lo = args.bs_lo;
        if (args.bs_hi >= 0.0) r.hi = args.bs_hi;
        if (args.bs_gap > 0.0) r.gap = args.bs_gap;
        DecisionOracle oracle = make_global_oracle(h, spec);
        report = binary_search(oracle, r.lo, r.hi, r.gap, r.witness);
        report.objective = objective_name(spec.kind);
        report.epsilon = spec.epsilon;
    } else if (args.method == "local") {
        if (spec.kind != ObjectiveKind::kAnchored)
            throw std::invalid_argument("--method local requires --obj adsh");
        LocalOptions opts;
        opts.clamp_multiplier = args.clamp_multiplier;
        opts.use_clamp = !args.no_clamp;
        report = solve_adsh_local(h, seeds, args.eps, opts);
    } else if (args.method == "peel") {
        std::vector<double> penalty = objective_penalty(h, spec);
        PeelResult peel = greedy_peeling(h, penalty);
        report.best_set = peel.best_set;
        report.best_density = peel.best_density;
        report.iterations = 1;
        report.method = "peel";
        report.objective = objective_name(spec.kind);
        report.epsilon = spec.epsilon;
    } else {
        throw std::invalid_argument("unknown method: " + args.method);
    }

    for (const std::string& flag : report.flags) std::cerr << "warning: " << flag << '\n';
    std::printf("density %.9f\n", report.best_density);
    std::printf("size %zu\n", report.best_set.size());
    std::printf("iterations %d\n", report.iterations);
    if (!args.out_path.empty()) {
        auto out = open_out(args.out_path);
        out << report_to_json(report, h) << '\n';
    }
    return 0;
}

struct GenArgs {
    std::string kind, out_prefix = "instance";
    PlantedParams planted;
    int a = 4, b = 20, c = 200;
};

int cmd_gen(const GenArgs& args) {
    if (args.kind == "planted") {
        PlantedInstance instance = generate_planted(args.planted);
        {
            auto out = open_out(args.out_prefix + ".hgr");
            write_hyperedge_list(instance.h, out);
        }
        auto out = open_out(args.out_prefix + ".clusters");
        for (int v = 0; v < instance.h.vertex_count(); ++v)
            out << instance.h.label_of(v) << ' ' << instance.cluster_of[v] << '\n';
        std::printf("n %d\nm %d\n", instance.h.vertex_count(), instance.h.edge_count());
    } else if (args.kind == "peeling-counterexample") {
        PeelingCounterexample ex = make_peeling_counterexample(args.a);
        {
            auto out = open_out(args.out_prefix + ".hgr");
            write_hyperedge_list(ex.h, out);
        }
        {
            auto out = open_out(args.out_prefix + ".penalty");
            for (int v = 0; v < ex.h.vertex_count(); ++v)
                if (ex.penalty[v] != 0.0)
                    out << ex.h.label_of(v) << ' ' << ex.penalty[v] << '\n';
        }
        auto out = open_out(args.out_prefix + ".seeds");
        write_label_list(ex.h, ex.seeds.members, out);
        std::printf("n %d\nm %d\noptimum %.9f\n", ex.h.vertex_count(), ex.h.edge_count(),
                    ex.optimal_density);
    } else if (args.kind == "locality-counterexample") {
        LocalityCounterexample ex = make_locality_counterexample(args.a, args.b, args.c);
        {
            auto out = open_out(args.out_prefix + ".hgr");
            write_hyperedge_list(ex.h, out);
        }
        auto out = open_out(args.out_prefix + ".seeds");
        write_label_list(ex.h, ex.seeds.members, out);
        std::printf("n %d\nm %d\n", ex.h.vertex_count(), ex.h.edge_count());
    } else {
        throw std::invalid_argument("unknown generator: " + args.kind);
    }
    return 0;
}

struct BenchArgs {
    std::string mode = "planted", out_path = "bench.csv", methods = "adsh,adsh-f,wce-ads,peel";
    std::string difficulties = "0,500,2500";
    PlantedParams base{500, 15, 0, 5000, 0.2, 12, 1};
    int seeds_per_cluster = 2;
    double eps = 1.0;
    int threads = 1;
    bool full_scale = false;
};

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<std::string> parse_string_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_bench(const BenchArgs& args) {
    if (args.mode == "planted") {
        BenchmarkConfig config;
        config.base = args.base;
        if (args.full_scale) {
            config.base.n = 1000;
            config.base.k = 30;
            config.base.m2 = 50000;
        }
        config.difficulties = parse_int_list(args.difficulties);
        config.methods = parse_string_list(args.methods);
        config.seeds_per_cluster = args.seeds_per_cluster;
        config.eps = args.eps;
        config.threads = args.threads;
        EvalResult result = run_planted_benchmark(config);
        auto out = open_out(args.out_path);
        write_benchmark_csv(result, out);
        for (const auto& [key, summary] : result.summary)
            std::printf("%-8s m1=%-6d mean_f1=%.4f stderr=%.4f (%d cells)\n",
                        key.first.c_str(), key.second, summary.mean_f1, summary.stderr_f1,
                        summary.cells);
        return 0;
    }
    if (args.mode == "di-vs-bs") {
        auto difficulties = parse_int_list(args.difficulties);
        auto out = open_out(args.out_path);
        out << "m1,n,m,di_iters,bs_iters,di_density,bs_density,di_ms,bs_ms\n";
        for (std::size_t d = 0; d < difficulties.size(); ++d) {
            PlantedParams p = args.base;
            p.m1 = difficulties[d];
            p.seed = Rng::derive(args.base.seed, d);
            PlantedInstance instance = generate_planted(p);
            SolveReport di =
                solve(instance.h, ObjectiveSpec::dshg(), SolveMethod::kDensityImprovement);
            SolveReport bs =
                solve(instance.h, ObjectiveSpec::dshg(), SolveMethod::kBinarySearch);
            char line[256];
            std::snprintf(line, sizeof(line), "%d,%d,%d,%d,%d,%.9g,%.9g,%.3f,%.3f\n", p.m1,
                          instance.h.vertex_count(), instance.h.edge_count(), di.iterations,
                          bs.iterations, di.best_density, bs.best_density, di.wall_ms,
                          bs.wall_ms);
            out << line;
            std::printf("m1=%-6d di_iters=%d bs_iters=%d density=%.6f\n", p.m1, di.iterations,
                        bs.iterations, di.best_density);
        }
        return 0;
    }
    throw std::invalid_argument("unknown bench mode: " + args.mode);
}

struct ExpandArgs {
    std::string input, mode = "wce", out_path;
    int cap = 1000;
};

int cmd_expand(const ExpandArgs& args) {
    Hypergraph h = load_hypergraph(args.input);
    ExpansionMode mode;
    if (args.mode == "wce")
        mode = ExpansionMode::kWeighted;
    else if (args.mode == "uce")
        mode = ExpansionMode::kUnweighted;
    else
        throw std::invalid_argument("unknown expansion mode: " + args.mode);
    WeightedGraph g = clique_expand(h, mode, args.cap);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!args.out_path.empty()) {
        file = open_out(args.out_path);
        os = &file;
    }
    char buf[64];
    for (const auto& e : g.edges) {
        std::snprintf(buf, sizeof(buf), "%.12g", e.w);
        *os << g.labels[e.u] << ' ' << g.labels[e.v] << ' ' << buf << '\n';
    }
    return 0;
}

std::vector<int> load_label_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open set file: " + path);
    std::vector<int> out;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long label;
        if (ls >> label) out.push_back(static_cast<int>(label));
    }
    return out;
}

int cmd_eval(const std::string& detected_path, const std::string& truth_path) {
    std::vector<int> detected = load_label_set(detected_path);
    std::vector<int> truth = load_label_set(truth_path);
    std::printf("f1 %.6f\n", f1_score(detected, truth));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact densest subhypergraph discovery (global and seed-anchored)"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "solve a density objective on a hypergraph");
    solve_cmd->add_option("input", solve_args.input, "hyperedge-list file")->required();
    solve_cmd->add_option("--obj", solve_args.objective,
                          "objective: dshg|adsh|adsh-f|hdsp|penalty");
    solve_cmd->add_option("--method", solve_args.method, "method: di|bs|local|peel");
    solve_cmd->add_option("--eps", solve_args.eps, "locality parameter");
    solve_cmd->add_option("--seeds", solve_args.seeds_path, "seed-set file (one label per line)");
    solve_cmd->add_option("--values", solve_args.values_path,
                          "vertex value file ('label value' lines)");
    solve_cmd->add_option("--out", solve_args.out_path, "write the JSON report here");
    solve_cmd->add_option("--bs-lo", solve_args.bs_lo, "binary search lower bound");
    solve_cmd->add_option("--bs-hi", solve_args.bs_hi, "binary search upper bound");
    solve_cmd->add_option("--bs-gap", solve_args.bs_gap, "binary search termination gap");
    solve_cmd->add_option("--clamp-mult", solve_args.clamp_multiplier,
                          "degree clamp safety multiplier (local method)");
    solve_cmd->add_flag("--no-clamp", solve_args.no_clamp, "disable the degree clamp");

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen", "generate benchmark instances");
    gen_cmd->add_option("kind", gen_args.kind,
                        "planted|peeling-counterexample|locality-counterexample")
        ->required();
    gen_cmd->add_option("--out", gen_args.out_prefix, "output path prefix");
    gen_cmd->add_option("--n", gen_args.planted.n);
    gen_cmd->add_option("--k", gen_args.planted.k);
    gen_cmd->add_option("--m1", gen_args.planted.m1);
    gen_cmd->add_option("--m2", gen_args.planted.m2);
    gen_cmd->add_option("--p-stop", gen_args.planted.p_stop);
    gen_cmd->add_option("--max-size", gen_args.planted.max_size);
    gen_cmd->add_option("--seed", gen_args.planted.seed);
    gen_cmd->add_option("--a", gen_args.a);
    gen_cmd->add_option("--b", gen_args.b);
    gen_cmd->add_option("--c", gen_args.c);

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "run the experiment harnesses");
    bench_cmd->add_option("mode", bench_args.mode, "planted|di-vs-bs")->required();
    bench_cmd->add_option("--out", bench_args.out_path, "CSV output path");
    bench_cmd->add_option("--methods", bench_args.methods, "comma-separated method list");
    bench_cmd->add_option("--difficulties", bench_args.difficulties,
                          "comma-separated m1 values");
    bench_cmd->add_option("--n", bench_args.base.n);
    bench_cmd->add_option("--k", bench_args.base.k);
    bench_cmd->add_option("--m2", bench_args.base.m2);
    bench_cmd->add_option("--p-stop", bench_args.base.p_stop);
    bench_cmd->add_option("--max-size", bench_args.base.max_size);
    bench_cmd->add_option("--seed", bench_args.base.seed);
    bench_cmd->add_option("--seeds-per-cluster", bench_args.seeds_per_cluster);
    bench_cmd->add_option("--eps", bench_args.eps);
    bench_cmd->add_option("--threads", bench_args.threads);
    bench_cmd->add_flag("--full", bench_args.full_scale, "full-scale planted parameters");

    ExpandArgs expand_args;
    auto* expand_cmd = app.add_subcommand("expand", "clique-expand a hypergraph");
    expand_cmd->add_option("input", expand_args.input, "hyperedge-list file")->required();
    expand_cmd->add_option("--mode", expand_args.mode, "uce|wce");
    expand_cmd->add_option("--out", expand_args.out_path, "weighted edge list output");
    expand_cmd->add_option("--cap", expand_args.cap, "max hyperedge size to expand");

    std::string eval_detected, eval_truth;
    auto* eval_cmd = app.add_subcommand("eval", "F1 score between two vertex-set files");
    eval_cmd->add_option("detected", eval_detected)->required();
    eval_cmd->add_option("truth", eval_truth)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_args);
        if (*gen_cmd) return cmd_gen(gen_args);
        if (*bench_cmd) return cmd_bench(bench_args);
        if (*expand_cmd) return cmd_expand(expand_args);
        if (*eval_cmd) return cmd_eval(eval_detected, eval_truth);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return kExitConfig;
}
