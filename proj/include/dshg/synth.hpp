#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dshg/hypergraph.hpp"

namespace dshg {

struct PlantedParams {
    int n = 1000;
    int k = 30;
    int m1 = 0;       // inter-cluster hyperedges (drawn from all of V)
    int m2 = 50000;   // intra-cluster hyperedges
    double p_stop = 0.2;
    int max_size = 12;
    std::uint64_t seed = 0;
};

/// Planted-dense-set hypergraph: vertices land in one of k clusters
/// uniformly at random; every hyperedge starts from two distinct pool
/// vertices and grows geometrically (stop with probability p_stop) up to
/// max_size. The instance is preprocessed, so cluster data lives in the
/// compacted id space.
struct PlantedInstance {
    Hypergraph h;
    PlantedParams params;
    std::vector<int> cluster_of;            // compact vertex id -> cluster
    std::vector<std::vector<int>> clusters; // cluster -> compact vertex ids
};

PlantedInstance generate_planted(const PlantedParams& params);

struct SeedSample {
    SeedSet seeds;
    bool reached_target = true;  // false when the component was too small
};

/// Uniformly sample ceil(frac*|cluster|) cluster members, then grow the set
/// to round(target_multiple*|cluster|) vertices with length-walk_len random
/// walks (uniform incident hyperedge, uniform other member per step)
/// launched from the sample: vertices visited most often fill the remaining
/// slots. reached_target is false when the walks cannot reach enough
/// distinct vertices.
SeedSample sample_seed_set(const PlantedInstance& instance, int cluster, double frac,
                           double target_multiple, int walk_len, std::uint64_t seed);

/// Harmonic mean of precision and recall; 0 for an empty or disjoint
/// detection. truth must be nonempty.
double f1_score(std::span<const int> detected, std::span<const int> truth);

struct BenchmarkCell {
    std::string method;
    int m1 = 0, m2 = 0, cluster = 0, seed_idx = 0;
    double f1 = 0.0;
    double density = 0.0;
    int solver_iters = 0;
    long long nodes_explored = 0;
    double millis = 0.0;
};

struct MethodSummary {
    double mean_f1 = 0.0;
    double stderr_f1 = 0.0;
    int cells = 0;
};

struct EvalResult {
    std::vector<BenchmarkCell> cells;
    // (method, m1) -> summary
    std::map<std::pair<std::string, int>, MethodSummary> summary;
};

struct BenchmarkConfig {
    PlantedParams base;             // m1 is overridden per difficulty
    std::vector<int> difficulties;  // list of m1 values
    std::vector<std::string> methods = {"adsh", "adsh-f", "wce-ads", "uce-ads", "peel"};
    int seeds_per_cluster = 2;
    double eps = 1.0;
    double seed_frac = 0.05;
    double seed_target_multiple = 1.5;
    int walk_len = 2;
    int threads = 1;
};

/// Runs every (difficulty x cluster x seed x method) cell, in parallel over
/// cells when threads > 1; identical output regardless of thread count.
EvalResult run_planted_benchmark(const BenchmarkConfig& config);

/// CSV schema: method,m1,m2,cluster,seed_idx,f1,density,solver_iters,
/// nodes_explored,millis
void write_benchmark_csv(const EvalResult& result, std::ostream& os);

}  // namespace dshg
