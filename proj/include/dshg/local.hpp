#pragma once

#include <span>
#include <vector>

#include "dshg/hypergraph.hpp"
#include "dshg/solvers.hpp"

namespace dshg {

/// The growing local hypergraph L = (V_L, E_L, E_L^st) plus the explored
/// set X. L is always a sub-structure of the full merged-terminal network,
/// so min-st-cut(L) <= min-st-cut(H_beta) at every iteration.
struct LocalState {
    std::vector<int> local_vertices;  // V_L, in materialization order
    std::vector<int> local_edges;     // E_L hyperedge ids
    std::vector<int> explored;        // X
    int iterations = 0;
    std::vector<double> cut_values;  // local min-cut value per iteration
    FlowStats stats;
};

struct LocalCutResult {
    std::vector<int> minimizer;  // sorted vertex ids
    double min_value = 0.0;      // min over S within the degree cap of
                                 // eps*vol(S inter R-bar)/2 + beta|S| - e[S]
    LocalState state;
};

/// Inner solver: grows L from R until the local min s-t cut is also a
/// minimum cut of the full network, touching the hypergraph only through
/// incidence lookups of materialized vertices. Vertices with degree above
/// degree_clamp are pinned to the sink side.
LocalCutResult local_min_cut(const Hypergraph& h, const SeedSet& seeds, double eps, double beta,
                             double degree_clamp);

/// Degree cap above which no vertex can be part of an optimal anchored set:
/// delta = max(Delta(R), multiplier * (nvol(R)*(2 + 1/d_R) + 6*nvol(R)
///                                     + nvol(R)/d_R)).
/// seed_density must be positive.
double clamp_threshold(const Hypergraph& h, const SeedSet& seeds, double seed_density,
                       double multiplier = 1.0);

struct LocalOptions {
    double clamp_multiplier = 1.0;
    bool use_clamp = true;
};

/// Exact anchored densest subhypergraph around a seed set. eps >= 2 reduces
/// to the densest subhypergraph inside R; 1 <= eps < 2 runs the
/// strongly-local growing solver; eps < 1 falls back to the global solver
/// (flagged in the report). Requires at least one hyperedge inside R.
SolveReport solve_adsh_local(const Hypergraph& h, const SeedSet& seeds, double eps,
                             const LocalOptions& options = {});

/// Global fallback for eps < 1, where strong locality is impossible.
SolveReport solve_adsh_fallback(const Hypergraph& h, const SeedSet& seeds, double eps);

}  // namespace dshg
