#include "dshg/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "dshg/reduction.hpp"

namespace dshg {

PeelResult greedy_peeling(const Hypergraph& h, std::span<const double> penalty) {
    const int n = h.vertex_count();
    if (static_cast<int>(penalty.size()) != n)
        throw std::invalid_argument("penalty vector size mismatch");

    // gain(v) = weight of edges fully inside the current set that contain v,
    // minus p(v). Gains only decrease, so a lazy min-heap with per-vertex
    // versions suffices; ties break toward the lowest id.
    std::vector<double> gain(n);
    std::vector<int> version(n, 0);
    std::vector<int> outside_count(h.edge_count(), 0);
    std::vector<std::uint8_t> removed(n, 0);

    double f = 0.0;  // e[S] - p(S) for the current set
    for (int e = 0; e < h.edge_count(); ++e) f += h.edge_weight(e);
    for (int v = 0; v < n; ++v) {
        gain[v] = h.degree(v) - penalty[v];
        f -= penalty[v];
    }

    struct Entry {
        double gain;
        int v;
        int version;
        bool operator>(const Entry& o) const {
            if (gain != o.gain) return gain > o.gain;
            return v > o.v;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    for (int v = 0; v < n; ++v) heap.push({gain[v], v, 0});

    PeelResult result;
    result.best_density = -std::numeric_limits<double>::infinity();
    result.removal_order.reserve(n);
    int best_removed = -1;  // number of removals at the densest prefix
    int size = n;

    for (int step = 0; step < n; ++step) {
        double density = f / static_cast<double>(size);
        result.density_trace.push_back(density);
        if (density > result.best_density) {
            result.best_density = density;
            best_removed = step;
        }
        Entry top{};
        while (true) {
            top = heap.top();
            heap.pop();
            if (!removed[top.v] && top.version == version[top.v]) break;
        }
        int v = top.v;
        removed[v] = 1;
        result.removal_order.push_back(v);
        f -= gain[v];
        --size;
        for (int e : h.incident_edges(v)) {
            if (outside_count[e]++ != 0) continue;  // was already broken
            double w = h.edge_weight(e);
            for (int u : h.edge(e)) {
                if (removed[u]) continue;
                gain[u] -= w;
                heap.push({gain[u], u, ++version[u]});
            }
        }
    }

    if (best_removed >= 0) {
        std::vector<std::uint8_t> gone(n, 0);
        for (int i = 0; i < best_removed; ++i) gone[result.removal_order[i]] = 1;
        for (int v = 0; v < n; ++v)
            if (!gone[v]) result.best_set.push_back(v);
    }
    return result;
}

WeightedGraph clique_expand(const Hypergraph& h, ExpansionMode mode, int max_edge_size) {
    WeightedGraph g;
    g.n = h.vertex_count();
    g.labels = h.labels();
    std::unordered_map<long long, double> pair_weight;
    for (int e = 0; e < h.edge_count(); ++e) {
        const auto& members = h.edge(e);
        int k = static_cast<int>(members.size());
        if (k > max_edge_size)
            throw std::invalid_argument("hyperedge exceeds the clique expansion cap");
        double w = mode == ExpansionMode::kWeighted ? h.edge_weight(e) / k : h.edge_weight(e);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                long long key =
                    static_cast<long long>(members[i]) * g.n + members[j];
                pair_weight[key] += w;
            }
    }
    g.edges.reserve(pair_weight.size());
    for (const auto& [key, w] : pair_weight) {
        int u = static_cast<int>(key / g.n);
        int v = static_cast<int>(key % g.n);
        g.edges.push_back({u, v, w});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    });
    g.weighted_degree.assign(g.n, 0.0);
    for (const auto& e : g.edges) {
        g.weighted_degree[e.u] += e.w;
        g.weighted_degree[e.v] += e.w;
    }
    return g;
}

Hypergraph to_rank2_hypergraph(const WeightedGraph& g) {
    std::vector<std::vector<int>> edges;
    std::vector<double> weights;
    edges.reserve(g.edges.size());
    weights.reserve(g.edges.size());
    for (const auto& e : g.edges) {
        edges.push_back({e.u, e.v});
        weights.push_back(e.w);
    }
    return Hypergraph::from_edges(g.n, std::move(edges), std::move(weights), g.labels);
}

SolveReport solve_ads_graph(const WeightedGraph& g, const SeedSet& seeds, SolveMethod method) {
    if (seeds.empty()) throw std::invalid_argument("anchored densest subgraph needs seeds");
    Hypergraph h2 = to_rank2_hypergraph(g);
    ObjectiveSpec spec = ObjectiveSpec::adsh(seeds, 1.0);
    validate_objective(h2, spec);

    DecisionOracle oracle;
    oracle.value = [&h2, &spec](std::span<const int> s) {
        return objective_numerator(h2, spec, s);
    };
    oracle.minimize = [&h2, &seeds](double beta) {
        ReducedNetwork rn = build_anchored_network(h2, seeds, 1.0, beta);
        Decision d = decide(rn);
        DecisionOutcome out;
        out.min_value = -d.margin;
        out.minimizer = std::move(d.witness);
        out.stats = d.stats;
        return out;
    };

    SolveReport report;
    if (method == SolveMethod::kDensityImprovement) {
        std::vector<int> all(h2.vertex_count());
        for (int v = 0; v < h2.vertex_count(); ++v) all[v] = v;
        report = density_improvement(oracle, all);
    } else {
        SearchRange r = default_search_range(h2, spec);
        report = binary_search(oracle, r.lo, r.hi, r.gap, r.witness);
    }
    // Problem value is (2 e[S] - vol(S inter R-bar))/|S|, twice the solved ratio.
    report.best_density *= 2.0;
    for (TraceEntry& t : report.trace) t.beta *= 2.0;
    report.objective = "ads";
    report.epsilon = 1.0;
    return report;
}

PeelingCounterexample make_peeling_counterexample(int a) {
    if (a < 2) throw std::invalid_argument("a must be >= 2");
    int b = 9 * a;
    int n = a + b;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) edges.push_back({i, j});
    for (int i = a; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    edges.push_back({a - 1, a});  // the bridge
    PeelingCounterexample out;
    out.h = Hypergraph::from_edges(n, std::move(edges));
    out.penalty.assign(n, 0.0);
    for (int v = a; v < n; ++v) out.penalty[v] = 2.0 * b / 3.0;
    std::vector<int> r(a);
    for (int i = 0; i < a; ++i) r[i] = i;
    out.seeds = SeedSet::of(std::move(r));
    out.optimal_density = (a - 1) / 2.0;
    return out;
}

LocalityCounterexample make_locality_counterexample(int a, int b, int c) {
    if (a < 2 || b < 1 || c < 1) throw std::invalid_argument("need a >= 2, b, c >= 1");
    int n = a + b + c;
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = i + 1; j < a; ++j) edges.push_back({i, j});
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) edges.push_back({i, j});
    for (int i = a; i < a + b; ++i)
        for (int j = a + b; j < n; ++j) edges.push_back({i, j});
    LocalityCounterexample out;
    out.h = Hypergraph::from_edges(n, std::move(edges));
    std::vector<int> r(a);
    for (int i = 0; i < a; ++i) r[i] = i;
    out.seeds = SeedSet::of(std::move(r));
    out.a = a;
    out.b = b;
    out.c = c;
    return out;
}

}  // namespace dshg
