#include "dshg/maxflow.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <ostream>
#include <stdexcept>

namespace dshg {

// Implementation notes: highest-label push-relabel in a single phase
// (heights up to 2n), so the routine terminates with an actual maximum
// flow rather than a preflow and the min-cut source side can be read off
// as residual reachability from s. Gap relabeling applies to heights
// below n; global relabeling recomputes exact residual distances (to t,
// then to s for nodes that cannot reach t).

FlowNetwork::FlowNetwork(int node_count, int source, int sink)
    : adj_(node_count), source_(source), sink_(sink) {
    if (node_count < 2 || source < 0 || source >= node_count || sink < 0 ||
        sink >= node_count || source == sink)
        throw std::invalid_argument("invalid flow network terminals");
}

int FlowNetwork::add_node() {
    adj_.emplace_back();
    return node_count() - 1;
}

void FlowNetwork::add_arc(int tail, int head, double capacity) {
    if (tail < 0 || tail >= node_count() || head < 0 || head >= node_count())
        throw std::invalid_argument("arc endpoint out of range");
    if (tail == head) throw std::invalid_argument("self-loop arc");
    if (capacity < 0.0 || std::isnan(capacity))
        throw std::invalid_argument("negative arc capacity");
    if (tail == source_ && std::isinf(capacity))
        throw std::invalid_argument("infinite-capacity arc out of the source (unbounded flow)");
    int fwd = static_cast<int>(adj_[tail].size());
    int bwd = static_cast<int>(adj_[head].size());
    adj_[tail].push_back(Arc{head, bwd, capacity, capacity, true});
    adj_[head].push_back(Arc{tail, fwd, 0.0, 0.0, false});
}

void FlowNetwork::set_height(int v, int h) {
    const int n = node_count();
    int old = height_[v];
    if (old < n) --height_count_[old];
    if (h < n) ++height_count_[h];
    height_[v] = h;
}

void FlowNetwork::activate(int v) {
    if (v == source_ || v == sink_) return;
    int h = height_[v];
    active_[h].push_back(v);
    if (h > highest_active_) highest_active_ = h;
}

void FlowNetwork::global_relabel() {
    const int n = node_count();
    ++stats_.global_updates;
    relabels_since_update_ = 0;

    std::vector<int> dist(n, -1);
    std::deque<int> queue;

    auto reverse_bfs = [&](int root, int base) {
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while (!queue.empty()) {
            int w = queue.front();
            queue.pop_front();
            for (const Arc& a : adj_[w]) {
                int u = a.head;
                if (dist[u] >= 0) continue;
                // residual capacity of the arc u -> w
                if (adj_[u][a.rev].cap <= kResidualEps) continue;
                dist[u] = dist[w] + 1;
                height_[u] = base + dist[u];
                queue.push_back(u);
            }
        }
    };

    std::fill(height_count_.begin(), height_count_.end(), 0);
    dist[source_] = 0;  // sentinel: keep s out of the t-side BFS
    height_[source_] = n;
    reverse_bfs(sink_, 0);
    height_[sink_] = 0;
    reverse_bfs(source_, n);
    height_[source_] = n;
    for (int v = 0; v < n; ++v) {
        if (dist[v] < 0) height_[v] = 2 * n;  // unreachable either way; carries no excess
        if (height_[v] < n) ++height_count_[height_[v]];
    }

    for (auto& bucket : active_) bucket.clear();
    highest_active_ = -1;
    for (int v = 0; v < n; ++v)
        if (v != source_ && v != sink_ && excess_[v] > kResidualEps) activate(v);
    std::fill(current_.begin(), current_.end(), 0);
}

void FlowNetwork::apply_gap(int emptied_height) {
    const int n = node_count();
    ++stats_.gap_events;
    for (int v = 0; v < n; ++v) {
        if (v == source_ || v == sink_) continue;
        int h = height_[v];
        if (h > emptied_height && h < n) {
            set_height(v, n + 1);
            if (excess_[v] > kResidualEps) activate(v);
        }
    }
}

void FlowNetwork::discharge(int v) {
    const int n = node_count();
    while (excess_[v] > kResidualEps) {
        auto& arcs = adj_[v];
        bool pushed_or_done = false;
        for (int& i = current_[v]; i < static_cast<int>(arcs.size()); ++i) {
            Arc& a = arcs[i];
            if (a.cap <= kResidualEps) continue;
            if (height_[v] != height_[a.head] + 1) continue;
            double delta = std::min(excess_[v], a.cap);
            a.cap -= delta;
            adj_[a.head][a.rev].cap += delta;
            bool was_inactive = excess_[a.head] <= kResidualEps;
            excess_[a.head] += delta;
            excess_[v] -= delta;
            ++stats_.pushes;
            if (was_inactive && a.head != source_ && a.head != sink_) activate(a.head);
            if (excess_[v] <= kResidualEps) {
                pushed_or_done = true;
                break;
            }
        }
        if (pushed_or_done) break;

        // relabel
        int old_h = height_[v];
        int new_h = 2 * n + 1;
        for (const Arc& a : adj_[v])
            if (a.cap > kResidualEps) new_h = std::min(new_h, height_[a.head] + 1);
        if (new_h > 2 * n) {
            // no residual arc at all; cannot happen for a node holding excess
            set_height(v, 2 * n);
            break;
        }
        ++stats_.relabels;
        ++relabels_since_update_;
        set_height(v, new_h);
        current_[v] = 0;
        if (old_h < n && height_count_[old_h] == 0) apply_gap(old_h);
        if (height_[v] >= 2 * n) break;
    }
}

CutResult FlowNetwork::max_flow_min_cut() {
    if (solved_) throw std::logic_error("network already solved; build a fresh instance");
    solved_ = true;
    const int n = node_count();
    stats_ = FlowStats{};
    excess_.assign(n, 0.0);
    height_.assign(n, 0);
    current_.assign(n, 0);
    active_.assign(2 * n + 2, {});
    height_count_.assign(n + 1, 0);
    highest_active_ = -1;
    relabels_since_update_ = 0;

    double out_of_source = 0.0;
    for (const Arc& a : adj_[source_])
        if (a.forward) out_of_source += a.cap0;
    if (std::isinf(out_of_source))
        throw std::invalid_argument("total capacity out of the source is unbounded");

    // saturate source arcs
    height_[source_] = n;
    for (Arc& a : adj_[source_]) {
        if (!a.forward || a.cap <= 0.0) continue;
        double delta = a.cap;
        a.cap = 0.0;
        adj_[a.head][a.rev].cap += delta;
        excess_[a.head] += delta;
        ++stats_.pushes;
    }
    global_relabel();

    const long long update_frequency = std::max(16, n);
    while (highest_active_ >= 0) {
        auto& bucket = active_[highest_active_];
        if (bucket.empty()) {
            --highest_active_;
            continue;
        }
        int v = bucket.back();
        bucket.pop_back();
        if (v == source_ || v == sink_) continue;
        if (height_[v] != highest_active_ || excess_[v] <= kResidualEps) continue;
        discharge(v);
        if (relabels_since_update_ >= update_frequency) global_relabel();
    }

    CutResult result;
    result.flow_value = excess_[sink_];
    result.source_side = residual_source_side();
    double cut = 0.0;
    for (int u = 0; u < n; ++u) {
        if (!result.source_side[u]) continue;
        for (const Arc& a : adj_[u])
            if (a.forward && !result.source_side[a.head]) cut += a.cap0;
    }
    result.cut_value = cut;
    result.stats = stats_;
    return result;
}

std::vector<std::uint8_t> FlowNetwork::residual_source_side() const {
    std::vector<std::uint8_t> side(node_count(), 0);
    std::deque<int> queue;
    side[source_] = 1;
    queue.push_back(source_);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const Arc& a : adj_[u]) {
            if (a.cap > kResidualEps && !side[a.head]) {
                side[a.head] = 1;
                queue.push_back(a.head);
            }
        }
    }
    return side;
}

void FlowNetwork::for_each_arc(const std::function<void(const ArcView&)>& fn) const {
    for (int u = 0; u < node_count(); ++u)
        for (const Arc& a : adj_[u]) {
            if (!a.forward) continue;
            // flow = residual of the paired reverse arc; stays finite even
            // on infinite-capacity arcs
            fn(ArcView{u, a.head, a.cap0, adj_[a.head][a.rev].cap});
        }
}

void FlowNetwork::write_dimacs(std::ostream& os) const {
    long long arcs = 0;
    for (const auto& list : adj_)
        for (const Arc& a : list)
            if (a.forward) ++arcs;
    os << "p max " << node_count() << ' ' << arcs << '\n';
    os << "n " << source_ + 1 << " s\n";
    os << "n " << sink_ + 1 << " t\n";
    char buf[64];
    for (int u = 0; u < node_count(); ++u) {
        for (const Arc& a : adj_[u]) {
            if (!a.forward) continue;
            std::snprintf(buf, sizeof(buf), "%.17g", a.cap0);
            os << "a " << u + 1 << ' ' << a.head + 1 << ' ' << buf << '\n';
        }
    }
}

}  // namespace dshg
