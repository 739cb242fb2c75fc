#pragma once

#include <span>
#include <string>
#include <vector>

#include "dshg/hypergraph.hpp"

namespace dshg {

/// Which ratio objective is being maximized. All of them are of the form
/// (e[S] - p(S))/|S| for a suitable per-vertex p (rewards enter as
/// negative penalties).
enum class ObjectiveKind {
    kDensestSubhypergraph,  // e[S]/|S|
    kAnchored,              // (e[S] - eps*vol(S inter R-bar)/2)/|S|
    kAnchoredFractional,    // (e[S] - eps*nvol(S inter R-bar))/|S|
    kHeavyDense,            // (e[S] + sum_{v in S} w(v))/|S|, w of any sign
    kVertexPenalty,         // (e[S] - p(S))/|S|, p >= 0
};

struct ObjectiveSpec {
    ObjectiveKind kind = ObjectiveKind::kDensestSubhypergraph;
    double epsilon = 1.0;               // anchored kinds
    SeedSet seeds;                      // anchored kinds
    std::vector<double> vertex_values;  // kHeavyDense rewards / kVertexPenalty penalties

    static ObjectiveSpec dshg();
    static ObjectiveSpec adsh(SeedSet seeds, double eps);
    static ObjectiveSpec adsh_fractional(SeedSet seeds, double eps);
    static ObjectiveSpec heavy_dense(std::vector<double> rewards);
    static ObjectiveSpec vertex_penalty(std::vector<double> penalties);
};

std::string objective_name(ObjectiveKind kind);

/// Throws if the objective is inconsistent with the hypergraph (seed ids
/// out of range, value vector of the wrong size, negative penalties,
/// eps < 0).
void validate_objective(const Hypergraph& h, const ObjectiveSpec& spec);

/// p(v) such that the objective's numerator is f(S) = e[S] - p(S).
std::vector<double> objective_penalty(const Hypergraph& h, const ObjectiveSpec& spec);

/// f(S) = e[S] - p(S); normalized (f of the empty set is 0).
double objective_numerator(const Hypergraph& h, const ObjectiveSpec& spec,
                           std::span<const int> s);

/// f(S)/|S|; the empty set evaluates to -infinity (0/0 convention).
double evaluate_objective(const Hypergraph& h, const ObjectiveSpec& spec,
                          std::span<const int> s);

}  // namespace dshg
