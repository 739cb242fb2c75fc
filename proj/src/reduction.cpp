#include "dshg/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dshg {

namespace {

// The sentinel must exceed every cut a minimum cut could use and every
// per-edge fractional capacity, so that (a) no minimum cut ever pays for an
// INF arc and (b) the cut identity holds for every vertex placement, not
// just minimizers.
double inf_sentinel(double source_capacity, const Hypergraph& h) {
    double max_w = 0.0;
    for (int e = 0; e < h.edge_count(); ++e) max_w = std::max(max_w, h.edge_weight(e));
    return source_capacity + max_w + 1.0;
}

// Appends one gadget per hyperedge: v -> v_e with w_e/|e|, v_e -> v with INF.
void add_gadgets(ReducedNetwork& rn, const Hypergraph& h) {
    rn.aux_hyperedge.reserve(h.edge_count());
    for (int e = 0; e < h.edge_count(); ++e) {
        int aux = rn.net.add_node();
        rn.aux_hyperedge.push_back(e);
        double share = h.edge_weight(e) / static_cast<double>(h.edge(e).size());
        for (int v : h.edge(e)) {
            rn.net.add_arc(v, aux, share);
            rn.net.add_arc(aux, v, rn.inf_capacity);
        }
    }
}

ReducedNetwork make_base(const Hypergraph& h, double beta) {
    int n = h.vertex_count();
    ReducedNetwork rn{FlowNetwork(n + 2, n, n + 1), 0.0, beta, n, n, n + 1, {}, 0.0};
    return rn;
}

}  // namespace

ReducedNetwork build_global_network(const Hypergraph& h, std::span<const double> penalty,
                                    double beta) {
    int n = h.vertex_count();
    if (static_cast<int>(penalty.size()) != n)
        throw std::invalid_argument("penalty vector size mismatch");
    if (beta < 0.0)
        throw std::invalid_argument("negative beta requires build_signed_network");
    for (double p : penalty)
        if (p < 0.0) throw std::invalid_argument("negative penalty requires build_signed_network");

    ReducedNetwork rn = make_base(h, beta);
    double source_cap = 0.0;
    for (int v = 0; v < n; ++v) {
        rn.net.add_arc(rn.source, v, h.fractional_degree(v));
        source_cap += h.fractional_degree(v);
        rn.net.add_arc(v, rn.sink, beta + penalty[v]);
    }
    rn.offset = source_cap;  // == nvol(H)
    rn.inf_capacity = inf_sentinel(source_cap, h);
    add_gadgets(rn, h);
    return rn;
}

ReducedNetwork build_signed_network(const Hypergraph& h, std::span<const double> reward,
                                    double beta) {
    int n = h.vertex_count();
    if (static_cast<int>(reward.size()) != n)
        throw std::invalid_argument("reward vector size mismatch");

    ReducedNetwork rn = make_base(h, beta);
    double source_cap = 0.0;
    for (int v = 0; v < n; ++v) {
        double c = beta - reward[v];
        double s_cap = h.fractional_degree(v) + std::max(0.0, -c);
        rn.net.add_arc(rn.source, v, s_cap);
        source_cap += s_cap;
        rn.net.add_arc(v, rn.sink, std::max(0.0, c));
    }
    rn.offset = source_cap;  // == nvol(H) + sum_v max(0, -c_v)
    rn.inf_capacity = inf_sentinel(source_cap, h);
    add_gadgets(rn, h);
    return rn;
}

ReducedNetwork build_anchored_network(const Hypergraph& h, const SeedSet& seeds, double eps,
                                      double beta, std::optional<double> degree_clamp) {
    int n = h.vertex_count();
    if (eps < 1.0)
        throw std::invalid_argument(
            "merged-terminal construction needs eps >= 1; use the global builders");
    if (beta < 0.0) throw std::invalid_argument("anchored construction needs beta >= 0");
    auto in_r = seeds.mask(n);

    ReducedNetwork rn = make_base(h, beta);
    double source_cap = 0.0;
    for (int v = 0; v < n; ++v) {
        if (in_r[v]) {
            rn.net.add_arc(rn.source, v, h.fractional_degree(v));
            source_cap += h.fractional_degree(v);
            rn.net.add_arc(v, rn.sink, beta);
        } else {
            double cap = beta + eps * h.degree(v) / 2.0 - h.fractional_degree(v);
            if (cap < -kTol)
                throw std::logic_error("merged terminal capacity went negative");
            rn.net.add_arc(v, rn.sink, std::max(0.0, cap));
        }
    }
    rn.offset = source_cap;  // == nvol(R)
    rn.inf_capacity = inf_sentinel(source_cap, h);
    if (degree_clamp) {
        for (int v = 0; v < n; ++v)
            if (h.degree(v) > *degree_clamp) rn.net.add_arc(v, rn.sink, rn.inf_capacity);
    }
    add_gadgets(rn, h);
    return rn;
}

Decision decide(ReducedNetwork& rn) {
    CutResult cut = rn.net.max_flow_min_cut();
    Decision d;
    d.cut_value = cut.cut_value;
    d.margin = rn.offset - cut.cut_value;
    d.denser_exists = cut.cut_value <= rn.offset - kTol;
    d.stats = cut.stats;
    for (int v = 0; v < rn.original_count; ++v)
        if (cut.source_side[v]) d.witness.push_back(v);
    return d;
}

}  // namespace dshg
