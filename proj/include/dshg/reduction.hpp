#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dshg/hypergraph.hpp"
#include "dshg/maxflow.hpp"

namespace dshg {

/// Per-vertex penalty p: V -> R. In the objective (e[S] - p(S))/|S|,
/// entries must be >= 0 for the plain global construction; the signed
/// construction accepts any sign.
using VertexPenalty = std::vector<double>;

/// Flow network encoding the decision problem "exists S with
/// (e[S] - p(S))/|S| > beta". For every vertex set S (auxiliary nodes
/// placed optimally):
///
///     cut(S u {s}) = offset + beta*|S| + p(S) - e[S]
///
/// where offset is the total capacity out of s, i.e. the value of the
/// trivial cut {s}.
struct ReducedNetwork {
    FlowNetwork net;
    double offset = 0.0;
    double beta = 0.0;
    int original_count = 0;  // vertices occupy node ids [0, original_count)
    int source = 0;
    int sink = 0;
    std::vector<int> aux_hyperedge;  // aux node (original_count+2+i) -> hyperedge id
    double inf_capacity = 0.0;       // finite sentinel standing in for infinity
};

struct Decision {
    bool denser_exists = false;
    std::vector<int> witness;  // sorted vertex ids; auxiliaries and s stripped
    double margin = 0.0;       // offset - cut_value = -min_S(beta|S| + p(S) - e[S])
    double cut_value = 0.0;
    FlowStats stats;
};

/// Construction for beta >= 0 and p >= 0: s->v with ndeg(v), v->t with
/// beta + p(v), one auxiliary node per hyperedge e with arcs v->v_e of
/// w_e/|e| and v_e->v of the INF sentinel. offset = nvol(H).
ReducedNetwork build_global_network(const Hypergraph& h, std::span<const double> penalty,
                                    double beta);

/// Arbitrary-sign construction: rewards q (f(S) = e[S] + q(S)) and beta of
/// any sign. With c_v = beta - q(v): t-arc max(0, c_v), s-arc
/// ndeg(v) + max(0, -c_v); offset picks up the sum of the negative parts.
ReducedNetwork build_signed_network(const Hypergraph& h, std::span<const double> reward,
                                    double beta);

/// Merged-terminal construction for the anchored objective
/// (e[S] - eps*vol(S inter R-bar)/2)/|S| with eps >= 1 and beta >= 0:
/// seed vertices keep s-arc ndeg(v) and t-arc beta; outside vertices lose
/// the s-arc and get a t-arc of beta + eps*deg(v)/2 - ndeg(v) (nonnegative
/// by the degree sandwich). Vertices with deg above degree_clamp get an
/// extra INF t-arc pinning them to the sink side. offset = nvol(R).
ReducedNetwork build_anchored_network(const Hypergraph& h, const SeedSet& seeds, double eps,
                                      double beta,
                                      std::optional<double> degree_clamp = std::nullopt);

/// Solves the network once. denser_exists iff cut < offset - tol; the
/// witness is the source side restricted to original vertices.
Decision decide(ReducedNetwork& rn);

}  // namespace dshg
