#include "ballvol/graph.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

using namespace ballvol;

namespace {

std::vector<std::uint32_t> sorted_neighbors(const BallGraph& g, std::uint32_t v) {
    std::vector<std::uint32_t> out;
    g.for_each_neighbor(v, [&](std::uint32_t u) { out.push_back(u); });
    std::sort(out.begin(), out.end());
    return out;
}

// oracle: edges recomputed from the metric
std::vector<std::uint32_t> metric_neighbors(const SpaceSpec& s, int r, std::uint32_t v,
                                            std::uint32_t n) {
    std::vector<std::uint32_t> out;
    Point p = point_at_rank(s, v);
    for (std::uint32_t u = 0; u < n; ++u) {
        if (u == v) continue;
        int d = distance(s, p, point_at_rank(s, u));
        if (d >= 1 && d <= r) out.push_back(u);
    }
    return out;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("ball graphs reproduce the metric exactly") {
    struct Row {
        SpaceSpec s;
        int r;
    };
    for (const Row& row : {Row{SpaceSpec::hamming(2, 3), 1}, Row{SpaceSpec::johnson(6, 3), 1},
                           Row{SpaceSpec::permutation(4), 2}, Row{SpaceSpec::hamming(3, 3), 2}}) {
        BallGraph g = build_ball_graph(row.s, row.r);
        CHECK(BigCount(g.n_vertices) == row.s.point_count());
        BigCount expect_deg = ball_volume(row.s, row.r).volume - 1;
        CHECK(BigCount(static_cast<unsigned long>(g.max_degree)) == expect_deg);
        CHECK(g.min_degree == g.max_degree);  // vertex-transitive
        CHECK(g.from_space);
        for (std::uint32_t v = 0; v < g.n_vertices; ++v)
            CHECK(sorted_neighbors(g, v) == metric_neighbors(row.s, row.r, v, g.n_vertices));
    }
}

TEST_CASE("implicit storage agrees with materialized adjacency") {
    SpaceSpec s = SpaceSpec::hamming(2, 10);
    BallGraph dense = build_ball_graph(s, 2);
    CHECK(dense.materialized);

    GraphCaps tight;
    tight.max_adjacency_entries = 100;  // force the implicit path
    BallGraph lazy = build_ball_graph(s, 2, tight);
    CHECK_FALSE(lazy.materialized);
    CHECK_FALSE(lazy.masks.empty());  // binary words use xor masks
    CHECK(lazy.max_degree == dense.max_degree);
    for (std::uint32_t v : {0u, 1u, 17u, 1023u}) {
        CHECK(sorted_neighbors(lazy, v) == sorted_neighbors(dense, v));
        CHECK(lazy.degree_of(v) == dense.degree_of(v));
    }

    // non-binary spaces fall back to shell enumeration
    SpaceSpec j = SpaceSpec::johnson(8, 4);
    BallGraph jg = build_ball_graph(j, 1, tight);
    CHECK_FALSE(jg.materialized);
    CHECK(jg.masks.empty());
    BallGraph jd = build_ball_graph(j, 1);
    for (std::uint32_t v = 0; v < jg.n_vertices; ++v) {
        auto got = sorted_neighbors(jg, v);
        CHECK(got == sorted_neighbors(jd, v));
    }
}

TEST_CASE("vertex cap is enforced") {
    CHECK_THROWS_AS(build_ball_graph(SpaceSpec::hamming(2, 30), 1), BudgetExceeded);
    GraphCaps caps;
    caps.max_vertices = 100;
    CHECK_THROWS_AS(build_ball_graph(SpaceSpec::hamming(2, 10), 1, caps), BudgetExceeded);
}

TEST_CASE("hand-built graphs are validated") {
    BallGraph tri = explicit_graph({{1, 2}, {0, 2}, {0, 1}});
    CHECK(tri.n_vertices == 3);
    CHECK(tri.max_degree == 2);
    CHECK_FALSE(tri.from_space);
    CHECK_THROWS(explicit_graph({{1}, {}}));     // asymmetric
    CHECK_THROWS(explicit_graph({{0}}));         // loop
    CHECK_THROWS(explicit_graph({{2}, {}}));     // out of range
}

TEST_CASE("neighborhood audit on the four-cube at radius two") {
    SpaceSpec s = SpaceSpec::hamming(2, 4);
    BallGraph g = build_ball_graph(s, 2);
    SparsityAudit a = audit_sparsity(g, origin_point(s), 1);
    CHECK(a.size_i == 4);  // punctured unit ball: the four weight-1 words
    CHECK(a.size_b == 6);  // weight-2 words
    // every neighborhood vertex sees 6 others within distance 2 (checked by
    // hand for 1100: two weight-1 and four weight-2 words), so 30 edges total
    CHECK(a.max_deg_in_b == 6);
    CHECK(a.implied_k == doctest::Approx(10.0 / 6.0));
    CHECK(a.gamma_edge_count == 30);
}

TEST_CASE("audit identities hold on a denser instance") {
    SpaceSpec s = SpaceSpec::hamming(2, 8);
    BallGraph g = build_ball_graph(s, 3);
    for (int t = 1; t <= 2; ++t) {
        SparsityAudit a = audit_sparsity(g, origin_point(s), t);
        CHECK(a.t == t);
        CHECK(a.size_b + a.size_i == g.max_degree);
        double implied = std::min(
            double(g.max_degree) / std::max<std::uint64_t>(a.max_deg_in_b, 1),
            double(g.max_degree) / std::max<std::uint64_t>(a.size_i, 1));
        CHECK(a.implied_k == doctest::Approx(implied));
        // the proof's quadratic edge budget for the neighborhood graph
        ExactRatio lhs = ExactRatio(2) * ExactRatio(a.gamma_edge_count);
        double rhs = double(a.size_b) * (double(g.max_degree) / a.implied_k) +
                     double(a.size_i) * double(a.size_b + a.size_i);
        CHECK(lhs.get_d() <= rhs + 1e-9);
    }
    CHECK_THROWS(audit_sparsity(g, origin_point(s), -1));
    CHECK_THROWS(audit_sparsity(g, origin_point(s), 3));  // boundary depth must stay below r
}

}  // TEST_SUITE
