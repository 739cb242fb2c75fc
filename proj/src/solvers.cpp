#include "dshg/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dshg/reduction.hpp"
#include "json.hpp"

namespace dshg {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void accumulate(SolveReport& report, const DecisionOutcome& out) {
    report.flow_stats += out.stats;
    report.vertices_materialized = std::max(report.vertices_materialized, out.local_vertices);
    report.hyperedges_materialized = std::max(report.hyperedges_materialized, out.local_edges);
}

TraceEntry make_entry(double beta, const DecisionOutcome& out) {
    TraceEntry e;
    e.beta = beta;
    e.set_size = static_cast<int>(out.minimizer.size());
    e.min_value = out.min_value;
    e.stats = out.stats;
    e.local_vertices = out.local_vertices;
    e.local_edges = out.local_edges;
    e.explored = out.explored;
    e.inner_iterations = out.inner_iterations;
    return e;
}

}  // namespace

SolveReport density_improvement(const DecisionOracle& oracle, std::span<const int> initial_set) {
    if (initial_set.empty())
        throw std::invalid_argument("density improvement needs a nonempty initial set");
    auto start = Clock::now();

    SolveReport report;
    report.method = "di";
    std::vector<int> best(initial_set.begin(), initial_set.end());
    double best_density = oracle.value(best) / static_cast<double>(best.size());

    // Minimizer sizes decrease strictly after the first iteration, so the
    // first minimizer bounds the remaining iteration count.
    std::size_t iteration_cap = std::numeric_limits<std::size_t>::max();
    for (std::size_t t = 1; t <= iteration_cap; ++t) {
        double beta = best_density;
        DecisionOutcome out = oracle.minimize(beta);
        ++report.iterations;
        accumulate(report, out);
        report.trace.push_back(make_entry(beta, out));
        if (out.min_value > kTol)
            throw std::logic_error("decision oracle returned a positive minimum");
        if (out.min_value >= -kTol) break;  // beta|S| - f(S) = 0: best is optimal

        if (out.minimizer.empty())
            throw std::logic_error("negative minimum with an empty minimizer");
        if (t == 1) iteration_cap = out.minimizer.size() + 4;
        if (t == iteration_cap)
            throw std::logic_error("density improvement failed to terminate");
        double f = oracle.value(out.minimizer);
        double attained = beta * static_cast<double>(out.minimizer.size()) - f;
        if (std::abs(attained - out.min_value) > 1e-6 * std::max(1.0, std::abs(f)))
            throw std::logic_error("minimizer does not attain the reported minimum");
        best = out.minimizer;
        best_density = f / static_cast<double>(best.size());
    }
    report.best_set = std::move(best);
    std::sort(report.best_set.begin(), report.best_set.end());
    report.best_density = best_density;
    report.wall_ms = elapsed_ms(start);
    return report;
}

SolveReport binary_search(const DecisionOracle& oracle, double lo, double hi, double gap,
                          std::span<const int> initial_witness) {
    if (lo > hi) throw std::invalid_argument("binary search needs lo <= hi");
    if (gap <= 0.0) throw std::invalid_argument("binary search needs a positive gap");
    auto start = Clock::now();

    SolveReport report;
    report.method = "bs";
    std::vector<int> best(initial_witness.begin(), initial_witness.end());
    double best_density = best.empty()
                              ? -std::numeric_limits<double>::infinity()
                              : oracle.value(best) / static_cast<double>(best.size());

    while (hi - lo > gap) {
        double mid = 0.5 * (lo + hi);
        DecisionOutcome out = oracle.minimize(mid);
        ++report.iterations;
        accumulate(report, out);
        report.trace.push_back(make_entry(mid, out));
        if (out.min_value < -kTol) {
            // a witness strictly denser than mid exists
            double density =
                oracle.value(out.minimizer) / static_cast<double>(out.minimizer.size());
            if (density > best_density) {
                best_density = density;
                best = out.minimizer;
            }
            lo = mid;
        } else {
            hi = mid;
        }
    }
    report.best_set = std::move(best);
    std::sort(report.best_set.begin(), report.best_set.end());
    report.best_density = best_density;
    report.wall_ms = elapsed_ms(start);
    return report;
}

ShiftedEvaluator shift_to_nonnegative(std::function<double(std::span<const int>)> f, int n) {
    double c = 0.0;
    for (int v = 0; v < n; ++v) {
        int singleton[1] = {v};
        c = std::max(c, -f(std::span<const int>(singleton, 1)));
    }
    ShiftedEvaluator shifted;
    shifted.shift = c;
    shifted.value = [f = std::move(f), c](std::span<const int> s) {
        return f(s) + c * static_cast<double>(s.size());
    };
    return shifted;
}

DecisionOracle make_global_oracle(const Hypergraph& h, const ObjectiveSpec& spec) {
    validate_objective(h, spec);
    std::vector<double> penalty = objective_penalty(h, spec);

    DecisionOracle oracle;
    oracle.value = [&h, spec](std::span<const int> s) {
        return objective_numerator(h, spec, s);
    };
    if (spec.kind == ObjectiveKind::kDensestSubhypergraph) {
        oracle.minimize = [&h, penalty](double beta) {
            ReducedNetwork rn = build_global_network(h, penalty, beta);
            Decision d = decide(rn);
            DecisionOutcome out;
            out.min_value = -d.margin;
            out.minimizer = std::move(d.witness);
            out.stats = d.stats;
            return out;
        };
    } else {
        // rewards = -penalties; handles negative beta uniformly
        std::vector<double> reward(penalty.size());
        for (std::size_t v = 0; v < penalty.size(); ++v) reward[v] = -penalty[v];
        oracle.minimize = [&h, reward](double beta) {
            ReducedNetwork rn = build_signed_network(h, reward, beta);
            Decision d = decide(rn);
            DecisionOutcome out;
            out.min_value = -d.margin;
            out.minimizer = std::move(d.witness);
            out.stats = d.stats;
            return out;
        };
    }
    return oracle;
}

SearchRange default_search_range(const Hypergraph& h, const ObjectiveSpec& spec) {
    validate_objective(h, spec);
    int n = h.vertex_count();
    SearchRange r;
    r.gap = 1.0 / (static_cast<double>(n) * std::max(1.0, static_cast<double>(n) - 1.0));
    switch (spec.kind) {
        case ObjectiveKind::kDensestSubhypergraph: {
            r.lo = 0.0;
            for (int e = 0; e < h.edge_count(); ++e) r.lo += h.edge_weight(e);
            r.lo /= static_cast<double>(n);
            r.hi = h.max_fractional_degree();
            r.witness.resize(n);
            for (int v = 0; v < n; ++v) r.witness[v] = v;
            break;
        }
        case ObjectiveKind::kAnchored:
        case ObjectiveKind::kAnchoredFractional: {
            // d* >= d(R); for eps >= 1 the optimum is capped by the seed
            // set's maximum fractional degree, otherwise fall back to the
            // global cap.
            DegreeStats seed_stats = degree_stats(h, spec.seeds.members);
            r.lo = seed_stats.edges_inside / static_cast<double>(spec.seeds.size());
            r.hi = spec.epsilon >= 1.0 ? seed_stats.max_ndeg : h.max_fractional_degree();
            r.hi = std::max(r.hi, r.lo);
            r.witness = spec.seeds.members;
            break;
        }
        case ObjectiveKind::kHeavyDense:
        case ObjectiveKind::kVertexPenalty: {
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            r.lo = objective_numerator(h, spec, all) / static_cast<double>(n);
            double max_reward = 0.0;
            if (spec.kind == ObjectiveKind::kHeavyDense)
                for (double w : spec.vertex_values) max_reward = std::max(max_reward, w);
            r.hi = h.max_fractional_degree() + max_reward;
            r.hi = std::max(r.hi, r.lo);
            r.witness = std::move(all);
            break;
        }
    }
    return r;
}

SolveReport solve(const Hypergraph& h, const ObjectiveSpec& spec, SolveMethod method) {
    DecisionOracle oracle = make_global_oracle(h, spec);
    SolveReport report;
    if (method == SolveMethod::kDensityImprovement) {
        std::vector<int> all(h.vertex_count());
        for (int v = 0; v < h.vertex_count(); ++v) all[v] = v;
        report = density_improvement(oracle, all);
    } else {
        SearchRange r = default_search_range(h, spec);
        report = binary_search(oracle, r.lo, r.hi, r.gap, r.witness);
    }
    report.objective = objective_name(spec.kind);
    report.epsilon = spec.epsilon;
    report.vertices_materialized = h.vertex_count();
    report.hyperedges_materialized = h.edge_count();
    report.exploration_fraction = 1.0;
    return report;
}

std::string report_to_json(const SolveReport& report, const Hypergraph& h) {
    nlohmann::json j;
    j["objective"] = report.objective;
    j["method"] = report.method;
    j["params"] = {{"epsilon", report.epsilon}};
    j["density"] = report.best_density;
    std::vector<long long> labels;
    labels.reserve(report.best_set.size());
    for (int v : report.best_set) labels.push_back(h.label_of(v));
    j["set"] = labels;
    j["set_size"] = report.best_set.size();
    j["iterations"] = report.iterations;
    nlohmann::json trace = nlohmann::json::array();
    for (const TraceEntry& t : report.trace) {
        nlohmann::json e;
        e["beta"] = t.beta;
        e["set_size"] = t.set_size;
        e["min_value"] = t.min_value;
        e["pushes"] = t.stats.pushes;
        e["relabels"] = t.stats.relabels;
        if (t.local_vertices > 0) {
            e["local_vertices"] = t.local_vertices;
            e["local_edges"] = t.local_edges;
            e["explored"] = t.explored;
            e["inner_iterations"] = t.inner_iterations;
        }
        trace.push_back(std::move(e));
    }
    j["trace"] = std::move(trace);
    j["work"] = {{"flow_pushes", report.flow_stats.pushes},
                 {"flow_relabels", report.flow_stats.relabels},
                 {"global_updates", report.flow_stats.global_updates},
                 {"gap_events", report.flow_stats.gap_events},
                 {"vertices_materialized", report.vertices_materialized},
                 {"hyperedges_materialized", report.hyperedges_materialized},
                 {"exploration_fraction", report.exploration_fraction}};
    j["timings"] = {{"total_ms", report.wall_ms}};
    j["flags"] = report.flags;
    return j.dump(2);
}

}  // namespace dshg
