#include <cmath>
#include <sstream>

#include "doctest.h"
#include "dshg/synth.hpp"
#include "oracles.hpp"

using namespace dshg;
using namespace dshg::testing;

TEST_CASE("immediate stop forces pair hyperedges") {
    PlantedParams p{.n = 60, .k = 4, .m1 = 40, .m2 = 120, .p_stop = 1.0, .max_size = 12,
                    .seed = 42};
    PlantedInstance instance = generate_planted(p);
    for (int e = 0; e < instance.h.edge_count(); ++e) CHECK(instance.h.edge(e).size() == 2);
}

TEST_CASE("max size caps growth regardless of the stop probability") {
    PlantedParams p{.n = 60, .k = 4, .m1 = 40, .m2 = 120, .p_stop = 0.01, .max_size = 2,
                    .seed = 42};
    PlantedInstance instance = generate_planted(p);
    CHECK(instance.h.rank() == 2);
}

TEST_CASE("hyperedge sizes follow the capped geometric law") {
    // sizes are 2 + min(G, max_size - 2) with G geometric(p); compare the
    // empirical histogram over 10^4 draws against the law by chi-square
    PlantedParams p{.n = 4000, .k = 1, .m1 = 0, .m2 = 10000, .p_stop = 0.2, .max_size = 12,
                    .seed = 99};
    PlantedInstance instance = generate_planted(p);
    // duplicates survive generation only until preprocess; at this density
    // they are rare, so sample sizes stay close to 10^4
    REQUIRE(instance.h.edge_count() > 9900);

    std::vector<double> counts(13, 0.0);
    double mean = 0.0;
    for (int e = 0; e < instance.h.edge_count(); ++e) {
        std::size_t k = instance.h.edge(e).size();
        counts[k] += 1.0;
        mean += static_cast<double>(k);
    }
    mean /= instance.h.edge_count();
    // E[2 + min(G, 10)] = 2 + sum_{k=1..10} 0.8^k = 5.57
    CHECK(std::abs(mean - 5.57) < 0.3);

    double chi2 = 0.0;
    double total = instance.h.edge_count();
    for (int size = 2; size <= 12; ++size) {
        int adds = size - 2;
        double prob = adds < 10 ? 0.2 * std::pow(0.8, adds) : std::pow(0.8, 10);
        double expected = total * prob;
        chi2 += (counts[size] - expected) * (counts[size] - expected) / expected;
    }
    CHECK(chi2 < 40.0);  // 10 degrees of freedom; generous cutoff
}

TEST_CASE("generation matches the frozen reference draw") {
    // pins the whole sampling pipeline: any reordering of the random draws
    // shows up here even if the output is still a valid instance
    PlantedParams p{.n = 30, .k = 3, .m1 = 5, .m2 = 20, .p_stop = 0.4, .max_size = 6,
                    .seed = 12345};
    PlantedInstance inst = generate_planted(p);
    REQUIRE(inst.h.vertex_count() == 30);
    REQUIRE(inst.h.edge_count() == 23);
    std::vector<long long> first_edge;
    for (int v : inst.h.edge(0)) first_edge.push_back(inst.h.label_of(v));
    CHECK(first_edge == std::vector<long long>{3, 5, 12, 14, 29, 30});
    long long digest = 0;
    for (int e = 0; e < inst.h.edge_count(); ++e)
        for (int v : inst.h.edge(e)) digest = digest * 1000003 + inst.h.label_of(v);
    CHECK(digest == 3238109242174363929LL);
}

TEST_CASE("generation is deterministic in the seed") {
    PlantedParams p{.n = 150, .k = 6, .m1 = 50, .m2 = 400, .p_stop = 0.25, .max_size = 8,
                    .seed = 7};
    PlantedInstance a = generate_planted(p);
    PlantedInstance b = generate_planted(p);
    REQUIRE(a.h.edge_count() == b.h.edge_count());
    for (int e = 0; e < a.h.edge_count(); ++e) CHECK(a.h.edge(e) == b.h.edge(e));
    CHECK(a.cluster_of == b.cluster_of);
    p.seed = 8;
    PlantedInstance c = generate_planted(p);
    bool differs = c.h.edge_count() != a.h.edge_count();
    for (int e = 0; !differs && e < a.h.edge_count(); ++e)
        differs = a.h.edge(e) != c.h.edge(e);
    CHECK(differs);
}

TEST_CASE("generation fails cleanly when no cluster can host a hyperedge") {
    // two vertices in two separate singleton clusters (seed 0 splits them)
    PlantedParams p{.n = 2, .k = 2, .m1 = 0, .m2 = 1, .p_stop = 0.5, .max_size = 4, .seed = 0};
    CHECK_THROWS_AS(generate_planted(p), std::runtime_error);
    p.seed = 1;  // both land in one cluster: fine
    CHECK_NOTHROW(generate_planted(p));
}

TEST_CASE("intra-cluster hyperedges stay inside their cluster") {
    PlantedParams p{.n = 200, .k = 8, .m1 = 0, .m2 = 600, .p_stop = 0.3, .max_size = 6,
                    .seed = 3};
    PlantedInstance instance = generate_planted(p);
    for (int e = 0; e < instance.h.edge_count(); ++e) {
        int cluster = instance.cluster_of[instance.h.edge(e)[0]];
        for (int v : instance.h.edge(e)) CHECK(instance.cluster_of[v] == cluster);
    }
}

TEST_CASE("seed sampling: full fraction and unit multiple reproduce the cluster") {
    PlantedParams p{.n = 150, .k = 5, .m1 = 100, .m2 = 500, .p_stop = 0.3, .max_size = 6,
                    .seed = 11};
    PlantedInstance instance = generate_planted(p);
    SeedSample sample = sample_seed_set(instance, 2, 1.0, 1.0, 2, 5);
    CHECK(sample.seeds.members == instance.clusters[2]);
}

TEST_CASE("seed sampling: zero-length walks cannot leave the initial sample") {
    PlantedParams p{.n = 150, .k = 5, .m1 = 100, .m2 = 500, .p_stop = 0.3, .max_size = 6,
                    .seed = 12};
    PlantedInstance instance = generate_planted(p);
    SeedSample sample = sample_seed_set(instance, 1, 0.2, 1.5, 0, 5);
    std::size_t initial = static_cast<std::size_t>(
        std::ceil(0.2 * instance.clusters[1].size()));
    CHECK(sample.seeds.members.size() == initial);
    CHECK_FALSE(sample.reached_target);
    for (int v : sample.seeds.members) CHECK(instance.cluster_of[v] == 1);
}

TEST_CASE("seed sampling: walks grow to the requested multiple") {
    PlantedParams p{.n = 300, .k = 6, .m1 = 300, .m2 = 1500, .p_stop = 0.25, .max_size = 8,
                    .seed = 13};
    PlantedInstance instance = generate_planted(p);
    SeedSample sample = sample_seed_set(instance, 0, 0.05, 1.5, 2, 5);
    if (sample.reached_target) {
        std::size_t target = static_cast<std::size_t>(
            std::llround(1.5 * instance.clusters[0].size()));
        CHECK(sample.seeds.members.size() == target);
    }
    // overlap with the home cluster at least the initial sample
    std::size_t overlap = 0;
    for (int v : sample.seeds.members) overlap += instance.cluster_of[v] == 0;
    CHECK(overlap >= static_cast<std::size_t>(std::ceil(0.05 * instance.clusters[0].size())));
    // deterministic
    SeedSample again = sample_seed_set(instance, 0, 0.05, 1.5, 2, 5);
    CHECK(again.seeds.members == sample.seeds.members);
}

TEST_CASE("seed sampling: isolated clusters cap the sample and set the flag") {
    // no inter-cluster edges: walks cannot leave, so the set tops out at the
    // cluster itself and the target is reported unreachable
    PlantedParams p{.n = 150, .k = 5, .m1 = 0, .m2 = 700, .p_stop = 0.3, .max_size = 6,
                    .seed = 17};
    PlantedInstance instance = generate_planted(p);
    SeedSample sample = sample_seed_set(instance, 3, 0.05, 1.5, 2, 9);
    CHECK_FALSE(sample.reached_target);
    for (int v : sample.seeds.members) CHECK(instance.cluster_of[v] == 3);
    // walks visit essentially the whole (connected) cluster
    CHECK(sample.seeds.members.size() >= instance.clusters[3].size() - 1);
}

TEST_CASE("f1 score") {
    std::vector<int> s{1, 2}, t{2, 3}, u{4, 5};
    CHECK(f1_score(s, s) == doctest::Approx(1.0));
    CHECK(f1_score(s, t) == doctest::Approx(0.5));
    CHECK(f1_score(s, u) == doctest::Approx(0.0));
    CHECK(f1_score({}, t) == doctest::Approx(0.0));
    CHECK_THROWS_AS(f1_score(s, {}), std::invalid_argument);
    // depends only on the three cardinalities
    std::vector<int> s2{7, 8}, t2{8, 9};
    CHECK(f1_score(s2, t2) == doctest::Approx(f1_score(s, t)));
}

TEST_CASE("mini planted benchmark: clean instances are fully recovered") {
    BenchmarkConfig config;
    config.base = PlantedParams{.n = 120, .k = 4, .m1 = 0, .m2 = 900, .p_stop = 0.25,
                                .max_size = 8, .seed = 21};
    config.difficulties = {0};
    config.methods = {"adsh", "adsh-f", "wce-ads", "uce-ads", "peel"};
    config.seeds_per_cluster = 1;
    config.eps = 1.0;
    EvalResult result = run_planted_benchmark(config);
    REQUIRE(result.cells.size() == 20);
    MethodSummary adsh = result.summary.at({"adsh", 0});
    MethodSummary adshf = result.summary.at({"adsh-f", 0});
    MethodSummary peel = result.summary.at({"peel", 0});
    CHECK(adsh.mean_f1 == doctest::Approx(1.0));
    CHECK(adshf.mean_f1 == doctest::Approx(1.0));
    CHECK(adsh.mean_f1 >= peel.mean_f1 - 1e-12);
    CHECK(adshf.mean_f1 >= result.summary.at({"wce-ads", 0}).mean_f1 - 1e-12);
    CHECK(adshf.mean_f1 >= result.summary.at({"uce-ads", 0}).mean_f1 - 1e-12);
    CHECK_THROWS_AS(
        [&] {
            config.methods = {"no-such-method"};
            run_planted_benchmark(config);
        }(),
        std::invalid_argument);
}

TEST_CASE("benchmark output is identical across thread counts") {
    BenchmarkConfig config;
    config.base = PlantedParams{.n = 100, .k = 4, .m1 = 0, .m2 = 500, .p_stop = 0.3,
                                .max_size = 6, .seed = 31};
    config.difficulties = {0, 60};
    config.methods = {"adsh", "peel"};
    config.seeds_per_cluster = 1;
    config.threads = 1;
    EvalResult serial = run_planted_benchmark(config);
    config.threads = 4;
    EvalResult parallel = run_planted_benchmark(config);
    REQUIRE(serial.cells.size() == parallel.cells.size());
    for (std::size_t i = 0; i < serial.cells.size(); ++i) {
        CHECK(serial.cells[i].method == parallel.cells[i].method);
        CHECK(serial.cells[i].f1 == parallel.cells[i].f1);
        CHECK(serial.cells[i].density == parallel.cells[i].density);
        CHECK(serial.cells[i].solver_iters == parallel.cells[i].solver_iters);
    }
}

TEST_CASE("csv schema") {
    EvalResult result;
    result.cells.push_back({"adsh", 0, 100, 1, 0, 1.0, 2.5, 3, 50, 1.25});
    std::ostringstream os;
    write_benchmark_csv(result, os);
    std::string text = os.str();
    CHECK(text.find("method,m1,m2,cluster,seed_idx,f1,density,solver_iters,nodes_explored,"
                    "millis\n") == 0);
    CHECK(text.find("adsh,0,100,1,0,1.000000,2.5,3,50,") != std::string::npos);
}
