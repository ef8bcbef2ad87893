#include "ballvol/hardcore.hpp"

#include <cmath>
#include <vector>

#include "doctest.h"

using namespace ballvol;

namespace {

// oracle: score every vertex subset of a small graph
double scan_partition(const BallGraph& g, double lambda) {
    std::vector<std::uint32_t> nbr(g.n_vertices, 0);
    for (std::uint32_t v = 0; v < g.n_vertices; ++v)
        g.for_each_neighbor(v, [&](std::uint32_t u) { nbr[v] |= 1u << u; });
    double total = 0.0;
    for (std::uint32_t set = 0; set < (1u << g.n_vertices); ++set) {
        bool ok = true;
        int size = 0;
        for (std::uint32_t v = 0; v < g.n_vertices && ok; ++v)
            if (set & (1u << v)) {
                ok = (nbr[v] & set) == 0;
                ++size;
            }
        if (ok) total += std::pow(lambda, size);
    }
    return total;
}

}  // namespace

TEST_SUITE("hardcore") {

TEST_CASE("triangle and path by hand") {
    BallGraph tri = explicit_graph({{1, 2}, {0, 2}, {0, 1}});
    PartitionResult p = count_independent_sets_exact(tri, 1.0);
    CHECK(p.partition_function == doctest::Approx(4.0));
    CHECK(p.occupancy == doctest::Approx(3.0 / 4));
    CHECK(p.log_count == doctest::Approx(std::log(4.0)));

    BallGraph path = explicit_graph({{1}, {0, 2}, {1}});
    PartitionResult q = count_independent_sets_exact(path, 1.0);
    CHECK(q.partition_function == doctest::Approx(5.0));
    // P = 1 + 3x + x^2, occupancy = x P'/P
    CHECK(q.occupancy == doctest::Approx(1.0));
}

TEST_CASE("partition function matches a full subset scan") {
    BallGraph cube = build_ball_graph(SpaceSpec::hamming(2, 3), 1);
    for (double lambda : {0.3, 0.7, 1.0, 2.0}) {
        PartitionResult p = count_independent_sets_exact(cube, lambda);
        CHECK(p.partition_function == doctest::Approx(scan_partition(cube, lambda)).epsilon(1e-12));
    }

    BallGraph q4 = build_ball_graph(SpaceSpec::hamming(2, 4), 1);
    PartitionResult p = count_independent_sets_exact(q4, 1.0);
    CHECK(p.partition_function == doctest::Approx(scan_partition(q4, 1.0)).epsilon(1e-12));
    CHECK(p.partition_function == doctest::Approx(743.0));
}

TEST_CASE("fugacity weights shift the occupancy monotonically") {
    BallGraph q3 = build_ball_graph(SpaceSpec::hamming(2, 3), 1);
    double prev = 0.0;
    for (double lambda : {0.2, 0.5, 1.0, 3.0, 10.0}) {
        double occ = count_independent_sets_exact(q3, lambda).occupancy;
        CHECK(occ > prev);
        prev = occ;
    }
    // lambda -> infinity concentrates on maximum independent sets
    CHECK(count_independent_sets_exact(q3, 1e6).occupancy == doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("argument validation and caps") {
    BallGraph tri = explicit_graph({{1, 2}, {0, 2}, {0, 1}});
    CHECK_THROWS_AS(count_independent_sets_exact(tri, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(count_independent_sets_exact(tri, -1.0), std::invalid_argument);
    BallGraph big = explicit_graph(std::vector<std::vector<std::uint32_t>>(41));
    CHECK_THROWS_AS(count_independent_sets_exact(big, 1.0), BudgetExceeded);
    CHECK_THROWS_AS(hardcore_estimate(tri, 1.0, 100, 1), std::invalid_argument);
}

TEST_CASE("single-site dynamics on trivial graphs") {
    BallGraph lone = explicit_graph({{}});
    HardcoreEstimate est = hardcore_estimate(lone, 1.0, 50'000, 7);
    CHECK(est.batches == 20);
    CHECK(est.burn_in == 5'000);
    CHECK(std::abs(est.mean_occupancy - 0.5) <= 3 * est.std_error);

    BallGraph edgeless = explicit_graph(std::vector<std::vector<std::uint32_t>>(6));
    HardcoreEstimate e6 = hardcore_estimate(edgeless, 1.0, 120'000, 8);
    CHECK(std::abs(e6.mean_occupancy - 3.0) <= 3 * e6.std_error);
}

TEST_CASE("chain is reproducible for a fixed seed") {
    BallGraph q3 = build_ball_graph(SpaceSpec::hamming(2, 3), 1);
    HardcoreEstimate a = hardcore_estimate(q3, 0.8, 100'000, 99);
    HardcoreEstimate b = hardcore_estimate(q3, 0.8, 100'000, 99);
    CHECK(a.mean_occupancy == b.mean_occupancy);
    CHECK(a.std_error == b.std_error);
    HardcoreEstimate c = hardcore_estimate(q3, 0.8, 100'000, 100);
    CHECK(a.mean_occupancy != c.mean_occupancy);
}

TEST_CASE("dynamics agree with the exact occupancy") {
    struct Row {
        BallGraph g;
        double lambda;
        std::uint64_t seed;
    };
    std::vector<Row> rows;
    rows.push_back({explicit_graph({{1, 2}, {0, 2}, {0, 1}}), 1.0, 31});
    rows.push_back({build_ball_graph(SpaceSpec::hamming(2, 3), 1), 0.5, 32});
    rows.push_back({build_ball_graph(SpaceSpec::hamming(2, 4), 1), std::log(4.0) / 4, 33});
    for (const Row& row : rows) {
        double exact = count_independent_sets_exact(row.g, row.lambda).occupancy;
        HardcoreEstimate est = hardcore_estimate(row.g, row.lambda, 400'000, row.seed);
        CAPTURE(row.g.n_vertices);
        CAPTURE(row.lambda);
        CHECK(std::abs(est.mean_occupancy - exact) <= 3 * est.std_error);
    }
}

}  // TEST_SUITE
