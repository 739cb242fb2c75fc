#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <vector>

namespace dshg {

/// Capacity value treated as unbounded. Permitted anywhere except on arcs
/// leaving the source.
inline constexpr double kInfiniteCapacity = std::numeric_limits<double>::infinity();

struct FlowStats {
    long long pushes = 0;
    long long relabels = 0;
    long long global_updates = 0;
    long long gap_events = 0;

    FlowStats& operator+=(const FlowStats& o) {
        pushes += o.pushes;
        relabels += o.relabels;
        global_updates += o.global_updates;
        gap_events += o.gap_events;
        return *this;
    }
};

struct CutResult {
    double flow_value = 0.0;
    double cut_value = 0.0;
    std::vector<std::uint8_t> source_side;  // size node_count, source_side[s] == 1
    FlowStats stats;
};

/// Directed capacitated graph with distinguished source/sink. Every add_arc
/// also creates the paired zero-capacity reverse arc for residual
/// bookkeeping. Build then solve; instances are cheap to create and are not
/// shared during a solve.
class FlowNetwork {
public:
    FlowNetwork(int node_count, int source, int sink);

    int add_node();
    void add_arc(int tail, int head, double capacity);

    int node_count() const { return static_cast<int>(adj_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }

    /// Highest-label push-relabel with gap and global relabeling. Returns the
    /// maximum flow value, the min-cut source side (nodes reachable from s in
    /// the final residual graph) and the matching cut value. One shot: a
    /// solved instance cannot be solved again.
    CutResult max_flow_min_cut();

    /// BFS reachability from s over arcs with positive residual capacity.
    /// Before a solve this is plain capacity-graph reachability.
    std::vector<std::uint8_t> residual_source_side() const;

    struct ArcView {
        int tail, head;
        double capacity;  // original
        double flow;
    };
    /// Visits every forward arc (reverse bookkeeping arcs are skipped).
    void for_each_arc(const std::function<void(const ArcView&)>& fn) const;

    /// DIMACS max-flow text dump for differential testing.
    void write_dimacs(std::ostream& os) const;

private:
    struct Arc {
        int head;
        int rev;       // index into adj_[head]
        double cap;    // residual
        double cap0;   // original (0 for reverse arcs)
        bool forward;
    };

    static constexpr double kResidualEps = 1e-12;

    void global_relabel();
    void apply_gap(int emptied_height);
    void discharge(int v);
    void set_height(int v, int h);
    void activate(int v);

    std::vector<std::vector<Arc>> adj_;
    int source_;
    int sink_;

    // solver state
    std::vector<double> excess_;
    std::vector<int> height_;
    std::vector<int> current_;
    std::vector<std::vector<int>> active_;   // stack of active nodes per height
    std::vector<std::uint8_t> in_active_;
    std::vector<int> height_count_;          // nodes per height (heights < n)
    int highest_active_ = -1;
    long long relabels_since_update_ = 0;
    bool solved_ = false;
    FlowStats stats_;
};

}  // namespace dshg
