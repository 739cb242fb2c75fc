#include "dshg/synth.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "dshg/baselines.hpp"
#include "dshg/local.hpp"
#include "dshg/objective.hpp"
#include "dshg/rng.hpp"
#include "dshg/solvers.hpp"

namespace dshg {

namespace {

// One hyperedge: two distinct seeds, then geometric growth capped by
// max_size (and by pool exhaustion).
std::vector<long long> draw_hyperedge(std::span<const int> pool, double p_stop, int max_size,
                                      Rng& rng) {
    std::unordered_set<int> members;
    members.insert(pool[rng.below(pool.size())]);
    while (members.size() < 2) members.insert(pool[rng.below(pool.size())]);
    while (static_cast<int>(members.size()) < max_size &&
           members.size() < pool.size()) {
        if (rng.unit() < p_stop) break;
        int v;
        do {
            v = pool[rng.below(pool.size())];
        } while (members.count(v));
        members.insert(v);
    }
    std::vector<long long> edge;
    edge.reserve(members.size());
    for (int v : members) edge.push_back(static_cast<long long>(v) + 1);
    std::sort(edge.begin(), edge.end());
    return edge;
}

}  // namespace

PlantedInstance generate_planted(const PlantedParams& params) {
    if (params.n < params.k || params.k < 1) throw std::invalid_argument("need n >= k >= 1");
    if (params.p_stop <= 0.0 || params.p_stop > 1.0)
        throw std::invalid_argument("p_stop must be in (0, 1]");
    if (params.max_size < 2) throw std::invalid_argument("max_size must be >= 2");

    Rng rng(params.seed);
    std::vector<int> cluster_by_label(params.n);
    std::vector<std::vector<int>> pools(params.k);
    for (int v = 0; v < params.n; ++v) {
        int c = static_cast<int>(rng.below(params.k));
        cluster_by_label[v] = c;
        pools[c].push_back(v);
    }
    std::vector<int> all(params.n);
    for (int v = 0; v < params.n; ++v) all[v] = v;

    RawHypergraph raw;
    raw.edges.reserve(params.m1 + params.m2);
    for (int i = 0; i < params.m1; ++i)
        raw.edges.push_back(draw_hyperedge(all, params.p_stop, params.max_size, rng));
    for (int i = 0; i < params.m2; ++i) {
        int c = -1;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            int candidate = static_cast<int>(rng.below(params.k));
            if (pools[candidate].size() >= 2) {
                c = candidate;
                break;
            }
        }
        if (c < 0) throw std::runtime_error("no cluster with >= 2 vertices after 1000 retries");
        raw.edges.push_back(draw_hyperedge(pools[c], params.p_stop, params.max_size, rng));
    }

    PlantedInstance instance;
    instance.params = params;
    instance.h = preprocess(raw);
    instance.cluster_of.resize(instance.h.vertex_count());
    instance.clusters.assign(params.k, {});
    for (int v = 0; v < instance.h.vertex_count(); ++v) {
        int c = cluster_by_label[instance.h.label_of(v) - 1];
        instance.cluster_of[v] = c;
        instance.clusters[c].push_back(v);
    }
    return instance;
}

SeedSample sample_seed_set(const PlantedInstance& instance, int cluster, double frac,
                           double target_multiple, int walk_len, std::uint64_t seed) {
    if (cluster < 0 || cluster >= static_cast<int>(instance.clusters.size()))
        throw std::invalid_argument("cluster id out of range");
    const std::vector<int>& members = instance.clusters[cluster];
    if (members.empty()) throw std::invalid_argument("empty cluster");
    if (frac <= 0.0 || frac > 1.0) throw std::invalid_argument("frac must be in (0, 1]");

    Rng rng(seed);
    const Hypergraph& h = instance.h;
    std::size_t initial =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(frac * members.size())));
    std::size_t target = std::max(
        initial, static_cast<std::size_t>(std::llround(target_multiple * members.size())));

    // uniform sample without replacement
    std::vector<int> shuffled = members;
    for (std::size_t i = 0; i < shuffled.size(); ++i) {
        std::size_t j = i + rng.below(shuffled.size() - i);
        std::swap(shuffled[i], shuffled[j]);
    }
    std::vector<int> starts(shuffled.begin(), shuffled.begin() + initial);

    auto walk_step = [&](int v) {
        const auto& inc = h.incident_edges(v);
        int e = inc[rng.below(inc.size())];
        const auto& edge = h.edge(e);
        int u;
        do {
            u = edge[rng.below(edge.size())];
        } while (u == v);
        return u;
    };

    // Launch many short walks round-robin from the sampled members and rank
    // the visited vertices by visit count; the sample plus the most-visited
    // vertices form the seed set. Frequent revisits keep the set anchored
    // where the walks concentrate instead of on one-off strays.
    std::unordered_map<int, long long> visits;
    if (walk_len > 0) {
        long long total_walks = std::max<long long>(256, 32 * static_cast<long long>(target));
        for (long long w = 0; w < total_walks; ++w) {
            int v = starts[static_cast<std::size_t>(w) % starts.size()];
            for (int step = 0; step < walk_len; ++step) {
                v = walk_step(v);
                ++visits[v];
            }
        }
    }
    std::vector<int> chosen = starts;
    std::vector<std::pair<long long, int>> ranked;  // (-count, id) for stable order
    for (int v : starts) visits.erase(v);
    ranked.reserve(visits.size());
    for (const auto& [v, count] : visits) ranked.emplace_back(-count, v);
    std::sort(ranked.begin(), ranked.end());
    for (const auto& [neg_count, v] : ranked) {
        if (chosen.size() >= target) break;
        chosen.push_back(v);
    }
    SeedSample out;
    out.reached_target = chosen.size() >= target;
    out.seeds = SeedSet::of(std::move(chosen));
    return out;
}

double f1_score(std::span<const int> detected, std::span<const int> truth) {
    if (truth.empty()) throw std::invalid_argument("truth set must be nonempty");
    if (detected.empty()) return 0.0;
    std::unordered_set<int> t(truth.begin(), truth.end());
    std::size_t hits = 0;
    for (int v : detected) hits += t.count(v);
    if (hits == 0) return 0.0;
    double precision = static_cast<double>(hits) / detected.size();
    double recall = static_cast<double>(hits) / truth.size();
    return 2.0 * precision * recall / (precision + recall);
}

namespace {

BenchmarkCell run_cell(const PlantedInstance& instance, const std::string& method,
                       const SeedSet& seeds, std::span<const int> truth, double eps) {
    const Hypergraph& h = instance.h;
    auto start = std::chrono::steady_clock::now();
    BenchmarkCell cell;
    cell.method = method;

    std::vector<int> detected;
    if (method == "adsh") {
        SolveReport r;
        DegreeStats st = degree_stats(h, seeds.members);
        if (eps >= 1.0 && st.edges_inside >= 1.0)
            r = solve_adsh_local(h, seeds, eps);
        else
            r = solve_adsh_fallback(h, seeds, eps);
        detected = r.best_set;
        cell.density = r.best_density;
        cell.solver_iters = r.iterations;
        cell.nodes_explored = r.vertices_materialized;
    } else if (method == "adsh-f") {
        SolveReport r = solve(h, ObjectiveSpec::adsh_fractional(seeds, eps),
                              SolveMethod::kDensityImprovement);
        detected = r.best_set;
        cell.density = r.best_density;
        cell.solver_iters = r.iterations;
        cell.nodes_explored = h.vertex_count();
    } else if (method == "wce-ads" || method == "uce-ads") {
        auto mode = method == "wce-ads" ? ExpansionMode::kWeighted : ExpansionMode::kUnweighted;
        WeightedGraph g = clique_expand(h, mode, h.rank());
        SolveReport r = solve_ads_graph(g, seeds, SolveMethod::kDensityImprovement);
        detected = r.best_set;
        cell.density = r.best_density;
        cell.solver_iters = r.iterations;
        cell.nodes_explored = h.vertex_count();
    } else if (method == "peel") {
        std::vector<double> penalty =
            objective_penalty(h, ObjectiveSpec::adsh(seeds, eps));
        PeelResult r = greedy_peeling(h, penalty);
        detected = r.best_set;
        cell.density = r.best_density;
        cell.solver_iters = 1;
        cell.nodes_explored = h.vertex_count();
    } else {
        throw std::invalid_argument("unknown benchmark method: " + method);
    }

    cell.f1 = f1_score(detected, truth);
    cell.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return cell;
}

}  // namespace

EvalResult run_planted_benchmark(const BenchmarkConfig& config) {
    struct Task {
        int difficulty_idx, cluster, seed_idx;
        int method_idx;
    };

    EvalResult result;
    std::vector<PlantedInstance> instances;
    instances.reserve(config.difficulties.size());
    std::vector<std::vector<SeedSample>> samples;  // [difficulty][cluster*seeds + s]
    for (std::size_t d = 0; d < config.difficulties.size(); ++d) {
        PlantedParams p = config.base;
        p.m1 = config.difficulties[d];
        p.seed = Rng::derive(config.base.seed, d);
        instances.push_back(generate_planted(p));
        auto& per = samples.emplace_back();
        for (int c = 0; c < p.k; ++c)
            for (int s = 0; s < config.seeds_per_cluster; ++s)
                per.push_back(sample_seed_set(
                    instances[d], c, config.seed_frac, config.seed_target_multiple,
                    config.walk_len,
                    Rng::derive(p.seed, 1000003ULL * c + static_cast<std::uint64_t>(s) + 7)));
    }

    std::vector<Task> tasks;
    for (std::size_t d = 0; d < config.difficulties.size(); ++d)
        for (int c = 0; c < config.base.k; ++c)
            for (int s = 0; s < config.seeds_per_cluster; ++s)
                for (std::size_t m = 0; m < config.methods.size(); ++m)
                    tasks.push_back({static_cast<int>(d), c, s, static_cast<int>(m)});

    std::vector<BenchmarkCell> cells(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            const Task& task = tasks[i];
            const PlantedInstance& inst = instances[task.difficulty_idx];
            const SeedSample& sample =
                samples[task.difficulty_idx]
                       [task.cluster * config.seeds_per_cluster + task.seed_idx];
            BenchmarkCell cell =
                run_cell(inst, config.methods[task.method_idx], sample.seeds,
                         inst.clusters[task.cluster], config.eps);
            cell.m1 = config.difficulties[task.difficulty_idx];
            cell.m2 = config.base.m2;
            cell.cluster = task.cluster;
            cell.seed_idx = task.seed_idx;
            cells[i] = std::move(cell);
        }
    };
    int thread_count = std::max(1, config.threads);
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int i = 0; i < thread_count; ++i) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    result.cells = std::move(cells);
    std::map<std::pair<std::string, int>, std::vector<double>> grouped;
    for (const BenchmarkCell& cell : result.cells)
        grouped[{cell.method, cell.m1}].push_back(cell.f1);
    for (const auto& [key, f1s] : grouped) {
        MethodSummary s;
        s.cells = static_cast<int>(f1s.size());
        double mean = 0.0;
        for (double x : f1s) mean += x;
        mean /= f1s.size();
        double var = 0.0;
        for (double x : f1s) var += (x - mean) * (x - mean);
        var = f1s.size() > 1 ? var / (f1s.size() - 1) : 0.0;
        s.mean_f1 = mean;
        s.stderr_f1 = std::sqrt(var / f1s.size());
        result.summary[key] = s;
    }
    return result;
}

void write_benchmark_csv(const EvalResult& result, std::ostream& os) {
    os << "method,m1,m2,cluster,seed_idx,f1,density,solver_iters,nodes_explored,millis\n";
    char buf[64];
    for (const BenchmarkCell& c : result.cells) {
        std::snprintf(buf, sizeof(buf), "%.6f", c.f1);
        os << c.method << ',' << c.m1 << ',' << c.m2 << ',' << c.cluster << ',' << c.seed_idx
           << ',' << buf << ',';
        std::snprintf(buf, sizeof(buf), "%.9g", c.density);
        os << buf << ',' << c.solver_iters << ',' << c.nodes_explored << ',';
        std::snprintf(buf, sizeof(buf), "%.3f", c.millis);
        os << buf << '\n';
    }
}

}  // namespace dshg
