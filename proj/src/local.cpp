#include "dshg/local.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "dshg/reduction.hpp"

namespace dshg {

namespace {

using Clock = std::chrono::steady_clock;

struct GrowingNetwork {
    const Hypergraph& h;
    std::vector<std::uint8_t> in_r;
    std::vector<std::uint8_t> in_vl;
    std::vector<std::uint8_t> in_el;
    std::vector<std::uint8_t> in_x;
    LocalState state;
    double eps, beta, clamp;
    double seed_nvol = 0.0;
    double inf_cap = 0.0;

    GrowingNetwork(const Hypergraph& hg, const SeedSet& seeds, double eps_, double beta_,
                   double clamp_)
        : h(hg),
          in_r(seeds.mask(hg.vertex_count())),
          in_vl(hg.vertex_count(), 0),
          in_el(hg.edge_count(), 0),
          in_x(hg.vertex_count(), 0),
          eps(eps_),
          beta(beta_),
          clamp(clamp_) {
        double max_w = 0.0;
        for (int v : seeds.members) seed_nvol += hg.fractional_degree(v);
        for (int e = 0; e < hg.edge_count(); ++e) max_w = std::max(max_w, hg.edge_weight(e));
        inf_cap = seed_nvol + max_w + 1.0;
        // V_L <- R u N_V(R), E_L <- N_E(R), X <- R
        for (int v : seeds.members) {
            add_vertex(v);
            in_x[v] = 1;
            state.explored.push_back(v);
        }
        for (int v : seeds.members) materialize_edges_of(v);
    }

    void add_vertex(int v) {
        if (in_vl[v]) return;
        in_vl[v] = 1;
        state.local_vertices.push_back(v);
    }

    // Materializing a hyperedge pulls in all member vertices (and hence
    // their terminal arcs) so L stays a valid sub-network.
    void materialize_edges_of(int v) {
        for (int e : h.incident_edges(v)) {
            if (in_el[e]) continue;
            in_el[e] = 1;
            state.local_edges.push_back(e);
            for (int u : h.edge(e)) add_vertex(u);
        }
    }

    // Rebuild the flow network over the current L from scratch and solve.
    CutResult solve_local(std::vector<int>& source_side_vertices) {
        const int nv = static_cast<int>(state.local_vertices.size());
        const int ne = static_cast<int>(state.local_edges.size());
        FlowNetwork net(nv + ne + 2, nv + ne, nv + ne + 1);
        const int s = net.source(), t = net.sink();
        std::unordered_map<int, int> node_of;
        node_of.reserve(nv * 2);
        for (int i = 0; i < nv; ++i) node_of[state.local_vertices[i]] = i;

        for (int i = 0; i < nv; ++i) {
            int v = state.local_vertices[i];
            if (in_r[v]) {
                net.add_arc(s, i, h.fractional_degree(v));
                net.add_arc(i, t, beta);
            } else {
                double cap = beta + eps * h.degree(v) / 2.0 - h.fractional_degree(v);
                if (cap < -kTol) throw std::logic_error("merged terminal capacity went negative");
                net.add_arc(i, t, std::max(0.0, cap));
            }
            if (h.degree(v) > clamp) net.add_arc(i, t, inf_cap);
        }
        for (int j = 0; j < ne; ++j) {
            int e = state.local_edges[j];
            int aux = nv + j;
            double share = h.edge_weight(e) / static_cast<double>(h.edge(e).size());
            for (int v : h.edge(e)) {
                int i = node_of.at(v);
                net.add_arc(i, aux, share);
                net.add_arc(aux, i, inf_cap);
            }
        }

        CutResult cut = net.max_flow_min_cut();
        source_side_vertices.clear();
        for (int i = 0; i < nv; ++i)
            if (cut.source_side[i]) source_side_vertices.push_back(state.local_vertices[i]);
        return cut;
    }
};

}  // namespace

LocalCutResult local_min_cut(const Hypergraph& h, const SeedSet& seeds, double eps, double beta,
                             double degree_clamp) {
    if (eps < 1.0) throw std::invalid_argument("strongly-local solver needs eps >= 1");
    if (beta < 0.0) throw std::invalid_argument("strongly-local solver needs beta >= 0");
    if (seeds.empty()) throw std::invalid_argument("empty seed set");

    GrowingNetwork g(h, seeds, eps, beta, degree_clamp);
    std::vector<int> cut_set;
    const int iteration_cap = h.vertex_count() + 2;
    while (true) {
        ++g.state.iterations;
        if (g.state.iterations > iteration_cap)
            throw std::logic_error("local growth failed to terminate");
        CutResult cut = g.solve_local(cut_set);
        g.state.cut_values.push_back(cut.cut_value);
        g.state.stats += cut.stats;

        std::vector<int> fresh;
        for (int v : cut_set)
            if (!g.in_x[v]) fresh.push_back(v);
        if (fresh.empty()) {
            LocalCutResult result;
            result.minimizer = std::move(cut_set);
            std::sort(result.minimizer.begin(), result.minimizer.end());
            result.min_value = cut.cut_value - g.seed_nvol;
            result.state = std::move(g.state);
            return result;
        }
        for (int v : fresh) {
            g.in_x[v] = 1;
            g.state.explored.push_back(v);
            g.add_vertex(v);
        }
        for (int v : fresh) g.materialize_edges_of(v);
    }
}

double clamp_threshold(const Hypergraph& h, const SeedSet& seeds, double seed_density,
                       double multiplier) {
    if (seed_density <= 0.0)
        throw std::invalid_argument("clamp threshold needs a positive seed density");
    DegreeStats st = degree_stats(h, seeds.members);
    double bound = st.nvol * (2.0 + 1.0 / seed_density) + 6.0 * st.nvol + st.nvol / seed_density;
    return std::max(st.max_deg, multiplier * bound);
}

SolveReport solve_adsh_local(const Hypergraph& h, const SeedSet& seeds, double eps,
                             const LocalOptions& options) {
    if (seeds.empty()) throw std::invalid_argument("empty seed set");
    if (eps < 1.0) {
        SolveReport report = solve_adsh_fallback(h, seeds, eps);
        report.flags.push_back("global fallback (eps < 1)");
        return report;
    }
    DegreeStats seed_stats = degree_stats(h, seeds.members);
    if (seed_stats.edges_inside < 1.0)
        throw std::invalid_argument(
            "seed set contains no hyperedge; the locality precondition d(R) > 0 fails "
            "(grow R or use the global solver)");
    auto start = Clock::now();
    ObjectiveSpec spec = ObjectiveSpec::adsh(seeds, eps);

    if (eps >= 2.0) {
        // Restricting to R is exact for eps >= 2: solve the densest
        // subhypergraph inside R and translate ids back.
        InducedSubhypergraph sub = induce(h, seeds.members);
        SolveReport inner = solve(sub.hypergraph, ObjectiveSpec::dshg(),
                                  SolveMethod::kDensityImprovement);
        SolveReport report = inner;
        report.best_set.clear();
        for (int v : inner.best_set) report.best_set.push_back(sub.original_ids[v]);
        std::sort(report.best_set.begin(), report.best_set.end());
        report.objective = objective_name(spec.kind);
        report.epsilon = eps;
        report.method = "local";
        report.flags.push_back("restricted to R (eps >= 2)");
        report.vertices_materialized = sub.hypergraph.vertex_count();
        report.hyperedges_materialized = sub.hypergraph.edge_count();
        report.exploration_fraction =
            static_cast<double>(sub.hypergraph.vertex_count()) / h.vertex_count();
        report.wall_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return report;
    }

    double seed_density = seed_stats.edges_inside / static_cast<double>(seeds.size());
    double delta = options.use_clamp
                       ? clamp_threshold(h, seeds, seed_density, options.clamp_multiplier)
                       : std::numeric_limits<double>::infinity();

    // Union of everything materialized across the outer iterations.
    std::vector<std::uint8_t> ever_vertex(h.vertex_count(), 0);
    std::vector<std::uint8_t> ever_edge(h.edge_count(), 0);
    long long union_vertices = 0, union_edges = 0;

    DecisionOracle oracle;
    oracle.value = [&h, &spec](std::span<const int> s) {
        return objective_numerator(h, spec, s);
    };
    oracle.minimize = [&](double beta) {
        LocalCutResult local = local_min_cut(h, seeds, eps, beta, delta);
        DecisionOutcome out;
        out.min_value = local.min_value;
        out.minimizer = std::move(local.minimizer);
        out.stats = local.state.stats;
        out.local_vertices = static_cast<long long>(local.state.local_vertices.size());
        out.local_edges = static_cast<long long>(local.state.local_edges.size());
        out.explored = static_cast<long long>(local.state.explored.size());
        out.inner_iterations = local.state.iterations;
        for (int v : local.state.local_vertices)
            if (!ever_vertex[v]) { ever_vertex[v] = 1; ++union_vertices; }
        for (int e : local.state.local_edges)
            if (!ever_edge[e]) { ever_edge[e] = 1; ++union_edges; }
        return out;
    };

    SolveReport report = density_improvement(oracle, seeds.members);
    report.objective = objective_name(spec.kind);
    report.epsilon = eps;
    report.method = "local";
    report.vertices_materialized = union_vertices;
    report.hyperedges_materialized = union_edges;
    report.exploration_fraction = static_cast<double>(union_vertices) / h.vertex_count();
    report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return report;
}

SolveReport solve_adsh_fallback(const Hypergraph& h, const SeedSet& seeds, double eps) {
    if (eps < 0.0) throw std::invalid_argument("eps must be >= 0");
    ObjectiveSpec spec = ObjectiveSpec::adsh(seeds, eps);
    SolveReport report = solve(h, spec, SolveMethod::kDensityImprovement);
    report.method = "global";
    return report;
}

}  // namespace dshg
