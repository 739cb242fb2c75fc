#include "dshg/objective.hpp"

#include <limits>
#include <stdexcept>

namespace dshg {

ObjectiveSpec ObjectiveSpec::dshg() { return ObjectiveSpec{}; }

ObjectiveSpec ObjectiveSpec::adsh(SeedSet seeds, double eps) {
    ObjectiveSpec s;
    s.kind = ObjectiveKind::kAnchored;
    s.seeds = std::move(seeds);
    s.epsilon = eps;
    return s;
}

ObjectiveSpec ObjectiveSpec::adsh_fractional(SeedSet seeds, double eps) {
    ObjectiveSpec s;
    s.kind = ObjectiveKind::kAnchoredFractional;
    s.seeds = std::move(seeds);
    s.epsilon = eps;
    return s;
}

ObjectiveSpec ObjectiveSpec::heavy_dense(std::vector<double> rewards) {
    ObjectiveSpec s;
    s.kind = ObjectiveKind::kHeavyDense;
    s.vertex_values = std::move(rewards);
    return s;
}

ObjectiveSpec ObjectiveSpec::vertex_penalty(std::vector<double> penalties) {
    ObjectiveSpec s;
    s.kind = ObjectiveKind::kVertexPenalty;
    s.vertex_values = std::move(penalties);
    return s;
}

std::string objective_name(ObjectiveKind kind) {
    switch (kind) {
        case ObjectiveKind::kDensestSubhypergraph: return "dshg";
        case ObjectiveKind::kAnchored: return "adsh";
        case ObjectiveKind::kAnchoredFractional: return "adsh-f";
        case ObjectiveKind::kHeavyDense: return "hdsp";
        case ObjectiveKind::kVertexPenalty: return "penalty";
    }
    return "?";
}

void validate_objective(const Hypergraph& h, const ObjectiveSpec& spec) {
    int n = h.vertex_count();
    switch (spec.kind) {
        case ObjectiveKind::kDensestSubhypergraph:
            break;
        case ObjectiveKind::kAnchored:
        case ObjectiveKind::kAnchoredFractional:
            if (spec.seeds.empty())
                throw std::invalid_argument("anchored objective needs a nonempty seed set");
            for (int v : spec.seeds.members)
                if (v < 0 || v >= n)
                    throw std::invalid_argument("seed set is not a subset of the vertices");
            if (spec.epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
            break;
        case ObjectiveKind::kHeavyDense:
            if (static_cast<int>(spec.vertex_values.size()) != n)
                throw std::invalid_argument("vertex weight vector size mismatch");
            break;
        case ObjectiveKind::kVertexPenalty:
            if (static_cast<int>(spec.vertex_values.size()) != n)
                throw std::invalid_argument("vertex penalty vector size mismatch");
            for (double p : spec.vertex_values)
                if (p < 0.0) throw std::invalid_argument("vertex penalties must be >= 0");
            break;
    }
}

std::vector<double> objective_penalty(const Hypergraph& h, const ObjectiveSpec& spec) {
    validate_objective(h, spec);
    int n = h.vertex_count();
    std::vector<double> p(n, 0.0);
    switch (spec.kind) {
        case ObjectiveKind::kDensestSubhypergraph:
            break;
        case ObjectiveKind::kAnchored: {
            auto in_r = spec.seeds.mask(n);
            for (int v = 0; v < n; ++v)
                if (!in_r[v]) p[v] = spec.epsilon * h.degree(v) / 2.0;
            break;
        }
        case ObjectiveKind::kAnchoredFractional: {
            auto in_r = spec.seeds.mask(n);
            for (int v = 0; v < n; ++v)
                if (!in_r[v]) p[v] = spec.epsilon * h.fractional_degree(v);
            break;
        }
        case ObjectiveKind::kHeavyDense:
            for (int v = 0; v < n; ++v) p[v] = -spec.vertex_values[v];
            break;
        case ObjectiveKind::kVertexPenalty:
            p = spec.vertex_values;
            break;
    }
    return p;
}

double objective_numerator(const Hypergraph& h, const ObjectiveSpec& spec,
                           std::span<const int> s) {
    validate_objective(h, spec);
    DegreeStats st = degree_stats(h, s);
    double value = st.edges_inside;
    switch (spec.kind) {
        case ObjectiveKind::kDensestSubhypergraph:
            break;
        case ObjectiveKind::kAnchored:
        case ObjectiveKind::kAnchoredFractional: {
            double outside = 0.0;
            for (int v : s) {
                if (spec.seeds.contains(v)) continue;
                outside += spec.kind == ObjectiveKind::kAnchored
                               ? h.degree(v) / 2.0
                               : h.fractional_degree(v);
            }
            value -= spec.epsilon * outside;
            break;
        }
        case ObjectiveKind::kHeavyDense:
            for (int v : s) value += spec.vertex_values[v];
            break;
        case ObjectiveKind::kVertexPenalty:
            for (int v : s) value -= spec.vertex_values[v];
            break;
    }
    return value;
}

double evaluate_objective(const Hypergraph& h, const ObjectiveSpec& spec,
                          std::span<const int> s) {
    if (s.empty()) return -std::numeric_limits<double>::infinity();
    return objective_numerator(h, spec, s) / static_cast<double>(s.size());
}

}  // namespace dshg
