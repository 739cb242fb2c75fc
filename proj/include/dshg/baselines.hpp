#pragma once

#include <span>
#include <vector>

#include "dshg/hypergraph.hpp"
#include "dshg/solvers.hpp"

namespace dshg {

/// Weighted undirected graph (the clique-expansion target and the input of
/// the anchored densest subgraph baseline).
struct WeightedGraph {
    struct Edge {
        int u, v;
        double w;
    };
    int n = 0;
    std::vector<Edge> edges;
    std::vector<double> weighted_degree;
    std::vector<long long> labels;  // original vertex labels
};

enum class ExpansionMode { kUnweighted, kWeighted };  // UCE / WCE

struct PeelResult {
    std::vector<int> best_set;  // sorted; densest intermediate set seen
    double best_density = 0.0;  // -inf when every intermediate set is empty
    std::vector<int> removal_order;
    std::vector<double> density_trace;  // density before each removal
};

/// Greedy peeling for f(S) = e[S] - p(S): repeatedly remove the vertex of
/// minimum marginal gain (residual contained-edge weight minus penalty),
/// lowest id on ties, and return the densest intermediate set (the empty
/// set counts as -inf).
PeelResult greedy_peeling(const Hypergraph& h, std::span<const double> penalty);

/// Replace every hyperedge by a clique (weight 1 per pair for UCE, 1/|e|
/// for WCE); parallel pairs merge by summing weights. Throws when a
/// hyperedge exceeds max_edge_size.
WeightedGraph clique_expand(const Hypergraph& h, ExpansionMode mode, int max_edge_size = 1000);

/// View of a weighted graph as a rank-2 weighted hypergraph (shares the
/// reduction machinery).
Hypergraph to_rank2_hypergraph(const WeightedGraph& g);

/// Anchored densest subgraph, exact: maximize (2 e[S] - vol(S inter
/// R-bar))/|S| on a weighted graph. Solved through the merged-terminal
/// construction with eps = 1 on the rank-2 view; the reported density uses
/// the 2 e[S] normalization.
SolveReport solve_ads_graph(const WeightedGraph& g, const SeedSet& seeds, SolveMethod method);

/// Two cliques of a and b = 9a vertices joined by one edge, with penalty
/// 2b/3 on the larger clique. Exact optimum is (R, (a-1)/2) while greedy
/// peeling never sees a positive density.
struct PeelingCounterexample {
    Hypergraph h;            // rank-2
    std::vector<double> penalty;
    SeedSet seeds;           // the small clique R
    double optimal_density;  // (a-1)/2
};
PeelingCounterexample make_peeling_counterexample(int a);

/// Clique A plus independent sets B, C with complete bipartite A-B and B-C
/// layers; R = A. For eps < 1 the anchored optimum swallows all of B and C
/// no matter how large c grows.
struct LocalityCounterexample {
    Hypergraph h;  // rank-2
    SeedSet seeds;
    int a, b, c;
};
LocalityCounterexample make_locality_counterexample(int a, int b, int c);

}  // namespace dshg
