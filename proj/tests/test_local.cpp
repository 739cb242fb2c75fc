#include <cmath>
#include <sstream>

#include "doctest.h"
#include "dshg/baselines.hpp"
#include "dshg/local.hpp"
#include "dshg/reduction.hpp"
#include "oracles.hpp"

using namespace dshg;
using namespace dshg::testing;

namespace {

Hypergraph cycle3() {
    std::istringstream in("1 2\n2 3\n1 3\n");
    return preprocess(parse_hyperedge_list(in));
}

// medium random instance with a denser pocket for the seeds to latch onto
Hypergraph random_medium(Rng& rng, int n, int m) {
    RawHypergraph raw;
    int pocket = 8 + static_cast<int>(rng.below(8));
    for (int e = 0; e < m; ++e) {
        bool inside = rng.below(3) == 0;
        int lo = inside ? 1 : 1;
        int hi = inside ? pocket : n;
        int size = 2 + static_cast<int>(rng.below(3));
        std::vector<long long> members;
        while (static_cast<int>(members.size()) < size) {
            long long v = lo + static_cast<long long>(rng.below(hi - lo + 1));
            if (std::find(members.begin(), members.end(), v) == members.end())
                members.push_back(v);
        }
        raw.edges.push_back(std::move(members));
    }
    return preprocess(raw);
}

}  // namespace

TEST_CASE("seed set covering V: one growth iteration, matches the global network") {
    Rng rng(12001);
    for (int i = 0; i < 15; ++i) {
        Hypergraph h = random_hypergraph(rng);
        int n = h.vertex_count();
        std::vector<int> everyone(n);
        for (int v = 0; v < n; ++v) everyone[v] = v;
        SeedSet seeds = SeedSet::of(everyone);
        double beta = rng.unit();
        LocalCutResult local =
            local_min_cut(h, seeds, 1.5, beta, std::numeric_limits<double>::infinity());
        CHECK(local.state.iterations <= 2);
        CHECK(static_cast<int>(local.state.local_vertices.size()) == n);

        ReducedNetwork rn = build_anchored_network(h, seeds, 1.5, beta);
        Decision d = decide(rn);
        CHECK(local.min_value == doctest::Approx(-d.margin).epsilon(1e-9));
        CHECK(local.minimizer == d.witness);
    }
}

TEST_CASE("inner cut agrees with the full-network decision on small instances") {
    Hypergraph h = cycle3();
    SeedSet seeds = SeedSet::of({0, 1});
    for (double beta : {0.0, 0.25, 0.5, 1.0}) {
        LocalCutResult local =
            local_min_cut(h, seeds, 1.0, beta, std::numeric_limits<double>::infinity());
        ReducedNetwork rn = build_anchored_network(h, seeds, 1.0, beta);
        Decision d = decide(rn);
        CHECK(local.min_value == doctest::Approx(-d.margin).epsilon(1e-9));
    }
    CHECK_THROWS_AS(local_min_cut(h, seeds, 0.5, 0.1, 100.0), std::invalid_argument);
}

TEST_CASE("local cut explores monotonically and never beats the global minimum") {
    Rng rng(12002);
    for (int i = 0; i < 20; ++i) {
        Hypergraph h = random_medium(rng, 120, 260);
        SeedSet seeds = random_edge_seed(rng, h);
        double eps = 1.0 + rng.unit() * 0.9;
        DegreeStats st = degree_stats(h, seeds.members);
        double beta = 0.1 + rng.unit() * std::max(0.2, st.max_ndeg);
        LocalCutResult local =
            local_min_cut(h, seeds, eps, beta, std::numeric_limits<double>::infinity());

        ReducedNetwork full = build_anchored_network(h, seeds, eps, beta);
        CutResult full_cut = full.net.max_flow_min_cut();
        // local cuts only grow toward the global value, and finish there
        for (double c : local.state.cut_values) CHECK(c <= full_cut.cut_value + 1e-9);
        CHECK(local.state.cut_values.back() ==
              doctest::Approx(full_cut.cut_value).epsilon(1e-9));
        // explored set stays within the flow bound: |X \ R| <= nvol(R)/beta
        if (beta > 0.0) {
            double outside = 0.0;
            for (int v : local.state.explored) outside += seeds.contains(v) ? 0.0 : 1.0;
            CHECK(outside <= st.nvol / beta + 1e-9);
        }
        // X grows strictly across iterations (they stop as soon as nothing is new)
        CHECK(local.state.iterations <= h.vertex_count());
    }
}

TEST_CASE("anchored solve around a seed set matches the global solver") {
    Rng rng(12003);
    for (int i = 0; i < 25; ++i) {
        Hypergraph h = random_medium(rng, 150, 300);
        SeedSet seeds = random_edge_seed(rng, h, 2);
        double eps = 1.0 + rng.unit() * 0.95;
        DegreeStats st = degree_stats(h, seeds.members);
        if (st.edges_inside < 1.0) continue;
        SolveReport local = solve_adsh_local(h, seeds, eps);
        SolveReport global = solve_adsh_fallback(h, seeds, eps);
        REQUIRE(local.best_density == doctest::Approx(global.best_density).epsilon(1e-9));
        CHECK(evaluate_objective(h, ObjectiveSpec::adsh(seeds, eps), local.best_set) ==
              doctest::Approx(local.best_density).epsilon(1e-9));

        // work stays within the seed-set budget: per inner solve,
        // |E_L| <= (nvol(R)+|R|)*delta and |V_L| <= (nvol(R)+|R|)*delta*r
        double d_r = st.edges_inside / seeds.size();
        double delta = clamp_threshold(h, seeds, d_r);
        double edge_budget = (st.nvol + seeds.size()) * delta;
        for (const TraceEntry& entry : local.trace) {
            CHECK(static_cast<double>(entry.local_edges) <= edge_budget);
            CHECK(static_cast<double>(entry.local_vertices) <= edge_budget * h.rank());
        }
    }
}

TEST_CASE("eps >= 2 restricts to the seed set and matches subset enumeration") {
    Rng rng(12004);
    for (int i = 0; i < 20; ++i) {
        Hypergraph h = random_hypergraph(rng, 10, 14, 4);
        const auto& anchor_edge = h.edge(static_cast<int>(rng.below(h.edge_count())));
        std::vector<int> members(anchor_edge.begin(), anchor_edge.end());
        // pad the seed set with random extras, keeping |R| <= 12
        while (members.size() < 6 && static_cast<int>(members.size()) < h.vertex_count())
            members.push_back(static_cast<int>(rng.below(h.vertex_count())));
        SeedSet seeds = SeedSet::of(std::move(members));
        double eps = 2.0 + rng.unit();
        SolveReport report = solve_adsh_local(h, seeds, eps);
        for (int v : report.best_set) CHECK(seeds.contains(v));

        // exhaustive over subsets of R of the true anchored objective
        auto spec = ObjectiveSpec::adsh(seeds, eps);
        double best = -1e300;
        for_each_subset(seeds.size(), [&](const std::vector<int>& idx) {
            if (idx.empty()) return;
            std::vector<int> s;
            for (int j : idx) s.push_back(seeds.members[j]);
            best = std::max(best, evaluate_objective(h, spec, s));
        });
        CHECK(report.best_density == doctest::Approx(best).epsilon(1e-9));
    }
}

TEST_CASE("whole-vertex seed set with eps = 1 equals the unanchored optimum") {
    Rng rng(12005);
    for (int i = 0; i < 10; ++i) {
        Hypergraph h = random_hypergraph(rng);
        std::vector<int> everyone(h.vertex_count());
        for (int v = 0; v < h.vertex_count(); ++v) everyone[v] = v;
        SolveReport local = solve_adsh_local(h, SeedSet::of(everyone), 1.0);
        SolveReport plain = solve(h, ObjectiveSpec::dshg(), SolveMethod::kDensityImprovement);
        CHECK(local.best_density == doctest::Approx(plain.best_density).epsilon(1e-9));
    }
}

TEST_CASE("clamp threshold arithmetic and degeneracy") {
    // 4-clique of size-2 edges: nvol(R)=6, Delta(R)=3, d_R=1.5 -> 56
    std::istringstream in("1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    Hypergraph h = preprocess(parse_hyperedge_list(in));
    SeedSet seeds = SeedSet::of({0, 1, 2, 3});
    CHECK(clamp_threshold(h, seeds, 1.5) == doctest::Approx(56.0));
    CHECK(clamp_threshold(h, seeds, 1.5) >= degree_stats(h, seeds.members).max_deg);
    CHECK_THROWS_AS(clamp_threshold(h, seeds, 0.0), std::invalid_argument);
}

TEST_CASE("degree clamp never changes the answer") {
    Rng rng(12006);
    for (int i = 0; i < 15; ++i) {
        Hypergraph h = random_medium(rng, 150, 300);
        SeedSet seeds = random_edge_seed(rng, h, 2);
        if (degree_stats(h, seeds.members).edges_inside < 1.0) continue;
        double eps = 1.0 + rng.unit() * 0.9;
        LocalOptions with_clamp, without_clamp;
        without_clamp.use_clamp = false;
        SolveReport a = solve_adsh_local(h, seeds, eps, with_clamp);
        SolveReport b = solve_adsh_local(h, seeds, eps, without_clamp);
        CHECK(a.best_density == doctest::Approx(b.best_density).epsilon(1e-9));
    }
}

TEST_CASE("fallback below eps = 1 swallows the far layers of the tiered instance") {
    auto ex = make_locality_counterexample(5, 20, 60);
    SolveReport report = solve_adsh_fallback(ex.h, ex.seeds, 0.5);
    // everything in B and C belongs to the optimum
    std::vector<std::uint8_t> in_set(ex.h.vertex_count(), 0);
    for (int v : report.best_set) in_set[v] = 1;
    for (int v = ex.a; v < ex.a + ex.b + ex.c; ++v) CHECK(in_set[v] == 1);
    CHECK(static_cast<int>(report.best_set.size()) >= ex.b + ex.c);

    // eps = 0 reduces to the plain densest subhypergraph
    SolveReport free_report = solve_adsh_fallback(ex.h, ex.seeds, 0.0);
    SolveReport plain = solve(ex.h, ObjectiveSpec::dshg(), SolveMethod::kDensityImprovement);
    CHECK(free_report.best_density == doctest::Approx(plain.best_density).epsilon(1e-9));
}

TEST_CASE("fallback matches exhaustive search on small instances") {
    Rng rng(12007);
    for (int i = 0; i < 20; ++i) {
        Hypergraph h = random_hypergraph(rng);
        SeedSet seeds = random_edge_seed(rng, h);
        double eps = rng.unit() * 0.9;
        SolveReport report = solve_adsh_fallback(h, seeds, eps);
        BruteBest best = brute_force_best(h, ObjectiveSpec::adsh(seeds, eps));
        CHECK(report.best_density == doctest::Approx(best.density).epsilon(1e-9));
    }
}

TEST_CASE("local solve requires a hyperedge inside the seed set, low eps falls back") {
    std::istringstream in("1 2 3\n3 4\n");
    Hypergraph h = preprocess(parse_hyperedge_list(in));
    CHECK_THROWS_AS(solve_adsh_local(h, SeedSet::of({0, 1}), 1.5), std::invalid_argument);
    SolveReport report = solve_adsh_local(h, SeedSet::of({0, 1, 2}), 0.5);
    REQUIRE(!report.flags.empty());
    CHECK(report.flags.front().find("fallback") != std::string::npos);
}
