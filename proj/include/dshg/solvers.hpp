#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dshg/hypergraph.hpp"
#include "dshg/maxflow.hpp"
#include "dshg/objective.hpp"

namespace dshg {

/// Result of one decision subproblem: the minimum of beta|S| - f(S) over
/// the admissible sets and a set attaining it (empty when the minimum is 0).
struct DecisionOutcome {
    double min_value = 0.0;
    std::vector<int> minimizer;
    FlowStats stats;
    // strongly-local bookkeeping; zero for global oracles
    long long local_vertices = 0;
    long long local_edges = 0;
    long long explored = 0;
    int inner_iterations = 0;
};

/// Decision primitive plus a value oracle for the normalized supermodular
/// numerator f. minimize(beta) must return min_S beta|S| - f(S) (always
/// <= 0; the empty set attains 0) together with a minimizer.
struct DecisionOracle {
    std::function<DecisionOutcome(double beta)> minimize;
    std::function<double(std::span<const int>)> value;
};

struct TraceEntry {
    double beta = 0.0;
    int set_size = 0;
    double min_value = 0.0;
    FlowStats stats;
    long long local_vertices = 0;
    long long local_edges = 0;
    long long explored = 0;
    int inner_iterations = 0;
};

struct SolveReport {
    std::vector<int> best_set;  // compact vertex ids, sorted
    double best_density = 0.0;
    std::vector<TraceEntry> trace;
    int iterations = 0;  // decision subproblems solved
    double wall_ms = 0.0;
    std::string method;
    std::string objective;
    double epsilon = 0.0;
    std::vector<std::string> flags;
    FlowStats flow_stats;
    long long vertices_materialized = 0;
    long long hyperedges_materialized = 0;
    double exploration_fraction = 1.0;
};

/// Density improvement: repeatedly set beta to the density of the current
/// best set and re-minimize beta|S| - f(S) until the minimum reaches zero,
/// which certifies optimality. Returns the exact maximizer of f(S)/|S|.
SolveReport density_improvement(const DecisionOracle& oracle, std::span<const int> initial_set);

/// Bisection on beta over [lo, hi] down to width `gap`, keeping the densest
/// witness produced by "yes" decisions. Requires lo <= optimum <= hi;
/// initial_witness seeds the best-set tracking (usually the set whose
/// density equals lo).
SolveReport binary_search(const DecisionOracle& oracle, double lo, double hi, double gap,
                          std::span<const int> initial_witness);

/// Shift construction: C = max(0, max_v -f({v})) and g(S) = f(S) + C|S|.
/// g is normalized, nonnegative and monotone, and argmax g/|S| equals
/// argmax f/|S| (the optima differ by exactly C).
struct ShiftedEvaluator {
    double shift = 0.0;
    std::function<double(std::span<const int>)> value;
};
ShiftedEvaluator shift_to_nonnegative(std::function<double(std::span<const int>)> f, int n);

enum class SolveMethod { kDensityImprovement, kBinarySearch };

/// For binary search: the default [lo, hi] bracket and termination gap for
/// an objective, plus the witness whose density equals lo.
struct SearchRange {
    double lo = 0.0;
    double hi = 0.0;
    double gap = 0.0;
    std::vector<int> witness;
};
SearchRange default_search_range(const Hypergraph& h, const ObjectiveSpec& spec);

/// Global exact solve: dispatches to the matching network construction and
/// outer loop. Exact for density improvement; gap-certified for bisection.
SolveReport solve(const Hypergraph& h, const ObjectiveSpec& spec, SolveMethod method);

/// Decision oracle backed by the flow reduction (global constructions).
DecisionOracle make_global_oracle(const Hypergraph& h, const ObjectiveSpec& spec);

/// Serialized report: objective, params, density, set (original labels),
/// iterations, trace, work counters, timings.
std::string report_to_json(const SolveReport& report, const Hypergraph& h);

}  // namespace dshg
