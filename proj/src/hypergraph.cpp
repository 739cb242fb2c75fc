#include "dshg/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dshg {

namespace {

// FNV-1a over the sorted member list, used for duplicate-edge detection.
std::uint64_t hash_sorted(const std::vector<long long>& v) {
    std::uint64_t h = 1469598103934665603ULL;
    for (long long x : v) {
        std::uint64_t u = static_cast<std::uint64_t>(x);
        for (int i = 0; i < 8; ++i) {
            h ^= (u >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    }
    return h;
}

}  // namespace

Hypergraph Hypergraph::from_edges(int n, std::vector<std::vector<int>> edges,
                                  std::vector<double> weights,
                                  std::vector<long long> labels) {
    Hypergraph h;
    h.n_ = n;
    if (weights.empty()) weights.assign(edges.size(), 1.0);
    if (weights.size() != edges.size())
        throw std::invalid_argument("edge/weight count mismatch");
    if (labels.empty()) {
        labels.resize(n);
        for (int v = 0; v < n; ++v) labels[v] = v + 1;
    }
    if (static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("label count mismatch");

    h.edges_ = std::move(edges);
    h.weights_ = std::move(weights);
    h.labels_ = std::move(labels);
    h.incident_.assign(n, {});
    h.deg_.assign(n, 0.0);
    h.ndeg_.assign(n, 0.0);

    for (int e = 0; e < h.edge_count(); ++e) {
        auto& members = h.edges_[e];
        std::sort(members.begin(), members.end());
        if (members.size() < 2 ||
            std::adjacent_find(members.begin(), members.end()) != members.end())
            throw std::invalid_argument("hyperedge must have >= 2 distinct vertices");
        if (members.front() < 0 || members.back() >= n)
            throw std::invalid_argument("hyperedge vertex id out of range");
        double w = h.weights_[e];
        if (w < 0.0) throw std::invalid_argument("negative hyperedge weight");
        if (w != 1.0) h.unit_weights_ = false;
        h.rank_ = std::max(h.rank_, static_cast<int>(members.size()));
        for (int v : members) {
            h.incident_[v].push_back(e);
            h.deg_[v] += w;
            h.ndeg_[v] += w / static_cast<double>(members.size());
        }
    }
    for (int v = 0; v < n; ++v) {
        h.total_vol_ += h.deg_[v];
        h.total_nvol_ += h.ndeg_[v];
    }
    h.label_to_id_.reserve(n);
    for (int v = 0; v < n; ++v) {
        if (!h.label_to_id_.emplace(h.labels_[v], v).second)
            throw std::invalid_argument("duplicate vertex label");
    }
    return h;
}

double Hypergraph::max_fractional_degree() const {
    double m = 0.0;
    for (double d : ndeg_) m = std::max(m, d);
    return m;
}

int Hypergraph::id_of(long long label) const {
    auto it = label_to_id_.find(label);
    return it == label_to_id_.end() ? -1 : it->second;
}

RawHypergraph Hypergraph::to_raw() const {
    RawHypergraph raw;
    raw.edges.reserve(edges_.size());
    for (const auto& e : edges_) {
        std::vector<long long> line;
        line.reserve(e.size());
        for (int v : e) line.push_back(labels_[v]);
        raw.edges.push_back(std::move(line));
    }
    if (!unit_weights_) raw.weights = weights_;
    return raw;
}

SeedSet SeedSet::of(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return SeedSet{std::move(ids)};
}

bool SeedSet::contains(int v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::vector<std::uint8_t> SeedSet::mask(int n) const {
    std::vector<std::uint8_t> m(n, 0);
    for (int v : members) {
        if (v < 0 || v >= n) throw std::out_of_range("seed vertex id out of range");
        m[v] = 1;
    }
    return m;
}

RawHypergraph parse_hyperedge_list(std::istream& in, const std::string& name) {
    RawHypergraph raw;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<long long> members;
        long long v;
        while (ls >> v) {
            if (v <= 0)
                throw std::runtime_error(name + ":" + std::to_string(line_no) +
                                         ": vertex labels must be positive integers");
            members.push_back(v);
        }
        if (!ls.eof()) {
            throw std::runtime_error(name + ":" + std::to_string(line_no) +
                                     ": malformed hyperedge line");
        }
        if (!members.empty()) raw.edges.push_back(std::move(members));
    }
    return raw;
}

Hypergraph preprocess(const RawHypergraph& raw) {
    // Dedup as vertex sets; self-loops collapse via the sort+unique below.
    struct SortedHash {
        std::size_t operator()(const std::vector<long long>& v) const {
            return static_cast<std::size_t>(hash_sorted(v));
        }
    };
    std::vector<std::vector<long long>> kept;
    std::vector<double> kept_w;
    std::unordered_set<std::vector<long long>, SortedHash> seen;
    const bool weighted = !raw.weights.empty();

    for (std::size_t i = 0; i < raw.edges.size(); ++i) {
        std::vector<long long> members = raw.edges[i];
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (members.size() < 2) continue;
        if (!seen.insert(members).second) continue;
        kept.push_back(std::move(members));
        kept_w.push_back(weighted ? raw.weights[i] : 1.0);
    }

    std::vector<long long> used;
    for (const auto& e : kept) used.insert(used.end(), e.begin(), e.end());
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());

    std::unordered_map<long long, int> relabel;
    relabel.reserve(used.size());
    for (std::size_t i = 0; i < used.size(); ++i) relabel[used[i]] = static_cast<int>(i);

    std::vector<std::vector<int>> compact(kept.size());
    for (std::size_t e = 0; e < kept.size(); ++e) {
        compact[e].reserve(kept[e].size());
        for (long long x : kept[e]) compact[e].push_back(relabel[x]);
    }
    bool unit = true;
    for (double w : kept_w) unit = unit && w == 1.0;
    const int n = static_cast<int>(used.size());
    return Hypergraph::from_edges(n, std::move(compact),
                                  unit ? std::vector<double>{} : std::move(kept_w),
                                  std::move(used));
}

Hypergraph load_hypergraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open hypergraph file: " + path);
    Hypergraph h = preprocess(parse_hyperedge_list(in, path));
    if (h.vertex_count() == 0)
        throw std::runtime_error(path + ": empty hypergraph after preprocessing");
    return h;
}

DegreeStats degree_stats(const Hypergraph& h, std::span<const int> s) {
    DegreeStats st;
    std::vector<std::uint8_t> in_s(h.vertex_count(), 0);
    for (int v : s) {
        if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("vertex id out of range");
        in_s[v] = 1;
    }
    std::unordered_set<int> touched;
    for (int v : s) {
        st.vol += h.degree(v);
        st.nvol += h.fractional_degree(v);
        st.max_deg = std::max(st.max_deg, h.degree(v));
        st.max_ndeg = std::max(st.max_ndeg, h.fractional_degree(v));
        for (int e : h.incident_edges(v)) touched.insert(e);
    }
    for (int e : touched) {
        bool inside = true;
        for (int u : h.edge(e))
            if (!in_s[u]) { inside = false; break; }
        if (inside) st.edges_inside += h.edge_weight(e);
    }
    return st;
}

Neighborhoods neighborhoods(const Hypergraph& h, std::span<const int> s) {
    Neighborhoods nb;
    std::unordered_set<int> edges, verts;
    for (int v : s) {
        if (v < 0 || v >= h.vertex_count()) throw std::out_of_range("vertex id out of range");
        for (int e : h.incident_edges(v)) edges.insert(e);
    }
    for (int e : edges)
        for (int u : h.edge(e)) verts.insert(u);
    nb.edge_ids.assign(edges.begin(), edges.end());
    nb.vertex_ids.assign(verts.begin(), verts.end());
    std::sort(nb.edge_ids.begin(), nb.edge_ids.end());
    std::sort(nb.vertex_ids.begin(), nb.vertex_ids.end());
    return nb;
}

SeedSet load_seed_set(const std::string& path, const Hypergraph& h) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open seed file: " + path);
    std::vector<int> ids;
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long long label;
        if (!(ls >> label)) continue;
        int v = h.id_of(label);
        if (v < 0)
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": unknown vertex label " + std::to_string(label));
        ids.push_back(v);
    }
    if (ids.empty()) throw std::runtime_error(path + ": empty seed set");
    return SeedSet::of(std::move(ids));
}

InducedSubhypergraph induce(const Hypergraph& h, std::span<const int> vertices) {
    std::vector<std::uint8_t> in_s(h.vertex_count(), 0);
    for (int v : vertices) in_s[v] = 1;
    RawHypergraph raw;
    std::unordered_set<int> touched;
    for (int v : vertices)
        for (int e : h.incident_edges(v)) touched.insert(e);
    std::vector<int> edge_ids(touched.begin(), touched.end());
    std::sort(edge_ids.begin(), edge_ids.end());
    bool weighted = !h.unit_weights();
    for (int e : edge_ids) {
        bool inside = true;
        for (int u : h.edge(e))
            if (!in_s[u]) { inside = false; break; }
        if (!inside) continue;
        std::vector<long long> line;
        for (int u : h.edge(e)) line.push_back(u + 1);  // temp label = inner id + 1
        raw.edges.push_back(std::move(line));
        if (weighted) raw.weights.push_back(h.edge_weight(e));
    }
    InducedSubhypergraph out;
    out.hypergraph = preprocess(raw);
    out.original_ids.reserve(out.hypergraph.vertex_count());
    for (int v = 0; v < out.hypergraph.vertex_count(); ++v)
        out.original_ids.push_back(static_cast<int>(out.hypergraph.label_of(v) - 1));
    return out;
}

}  // namespace dshg
