#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace dshg {

/// Absolute tolerance for all density / cut-value comparisons.
inline constexpr double kTol = 1e-9;

/// Hyperedge list with original (arbitrary positive) vertex labels, before
/// preprocessing. May contain duplicate edges, repeated labels inside a line,
/// and size-1 edges; preprocess() cleans all of that up.
struct RawHypergraph {
    std::vector<std::vector<long long>> edges;
    std::vector<double> weights;  // empty = unweighted (all 1)
};

/// Immutable vertex/hyperedge incidence structure with precomputed degree
/// tables. Vertex ids are dense 0-based; original labels are kept in a side
/// mapping for reporting. Safe to share across concurrent solver runs.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Build directly from compact, already-clean data. Members get sorted;
    /// throws if an edge has < 2 distinct vertices or an id is out of range.
    static Hypergraph from_edges(int n, std::vector<std::vector<int>> edges,
                                 std::vector<double> weights = {},
                                 std::vector<long long> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int rank() const { return rank_; }

    const std::vector<int>& edge(int e) const { return edges_[e]; }
    double edge_weight(int e) const { return weights_[e]; }
    bool unit_weights() const { return unit_weights_; }

    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }

    /// deg(v): total weight of hyperedges containing v (count when unweighted).
    double degree(int v) const { return deg_[v]; }
    /// ndeg(v): sum of w_e/|e| over hyperedges containing v.
    double fractional_degree(int v) const { return ndeg_[v]; }

    double total_volume() const { return total_vol_; }
    double total_fractional_volume() const { return total_nvol_; }
    double max_fractional_degree() const;

    long long label_of(int v) const { return labels_[v]; }
    /// Returns -1 when the label is unknown.
    int id_of(long long label) const;
    const std::vector<long long>& labels() const { return labels_; }

    RawHypergraph to_raw() const;

private:
    int n_ = 0;
    int rank_ = 0;
    bool unit_weights_ = true;
    std::vector<std::vector<int>> edges_;
    std::vector<double> weights_;
    std::vector<std::vector<int>> incident_;
    std::vector<double> deg_;
    std::vector<double> ndeg_;
    double total_vol_ = 0.0;
    double total_nvol_ = 0.0;
    std::vector<long long> labels_;
    std::unordered_map<long long, int> label_to_id_;
};

/// Seed set R for anchored problems; members are compact vertex ids.
struct SeedSet {
    std::vector<int> members;  // sorted, unique

    static SeedSet of(std::vector<int> ids);
    bool contains(int v) const;
    std::vector<std::uint8_t> mask(int n) const;
    bool empty() const { return members.empty(); }
    int size() const { return static_cast<int>(members.size()); }
};

struct DegreeStats {
    double vol = 0.0;
    double nvol = 0.0;
    double max_deg = 0.0;       // 0 for empty S by convention
    double max_ndeg = 0.0;
    double edges_inside = 0.0;  // e[S]; weighted sum (count when unweighted)
};

struct Neighborhoods {
    std::vector<int> edge_ids;    // N_E(S), sorted
    std::vector<int> vertex_ids;  // N_V(S), sorted
};

/// Parse the text hyperedge-list format: one hyperedge per line,
/// whitespace-separated positive integer labels, '#' starts a comment line.
/// Throws std::runtime_error with the line number on malformed input.
RawHypergraph parse_hyperedge_list(std::istream& in, const std::string& name = "<stream>");

/// Drop size-<2 edges, duplicate edges (as vertex sets; first occurrence
/// kept) and degree-0 vertices, then compact vertex ids to 0..n-1.
Hypergraph preprocess(const RawHypergraph& raw);

/// Load + preprocess. Throws on parse failure or if nothing survives
/// preprocessing.
Hypergraph load_hypergraph(const std::string& path);

/// vol / nvol / max degrees / contained-edge count for a vertex set.
DegreeStats degree_stats(const Hypergraph& h, std::span<const int> s);

/// N_E(S) and N_V(S), touching only structures incident to S.
Neighborhoods neighborhoods(const Hypergraph& h, std::span<const int> s);

/// Seed-set file: one vertex label per line ('#' comments tolerated).
/// Labels are resolved against the hypergraph's label map; unknown labels
/// are an error.
SeedSet load_seed_set(const std::string& path, const Hypergraph& h);

/// Induced subhypergraph on the given vertices: keeps hyperedges fully
/// contained in the set, then preprocesses. original_ids maps the result's
/// compact ids back to ids of `h`.
struct InducedSubhypergraph {
    Hypergraph hypergraph;
    std::vector<int> original_ids;
};
InducedSubhypergraph induce(const Hypergraph& h, std::span<const int> vertices);

}  // namespace dshg
