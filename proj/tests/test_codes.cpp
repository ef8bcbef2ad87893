#include "ballvol/codes.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"

using namespace ballvol;

namespace {

// independent re-check: decoded codewords are pairwise farther than r
void check_pairwise(const BallGraph& g, const CodeResult& code) {
    std::vector<Point> pts;
    for (std::uint32_t v : code.codewords) pts.push_back(point_at_rank(g.space, v));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            CHECK(distance(g.space, pts[i], pts[j]) > g.r);
}

}  // namespace

TEST_SUITE("codes") {

TEST_CASE("method names") {
    CHECK(std::string(to_string(CodeMethod::greedy_maximal)) == "greedyMaximal");
    CHECK(std::string(to_string(CodeMethod::degeneracy_order)) == "degeneracyOrder");
    CHECK(std::string(to_string(CodeMethod::exact_branch_bound)) == "exactBranchBound");
}

TEST_CASE("even-weight words are the largest distance-2 code on four bits") {
    BallGraph g = build_ball_graph(SpaceSpec::hamming(2, 4), 1);
    CodeResult exact = construct_code(g, CodeMethod::exact_branch_bound);
    CHECK(exact.size == 8);
    CHECK(exact.verified_independent);
    CHECK(exact.sphere_covering_bound == doctest::Approx(16.0 / 5));
    CHECK(exact.improvement_factor == doctest::Approx(8 / (16.0 / 5)));
    check_pairwise(g, exact);
}

TEST_CASE("greedy construction clears the covering floor on every seed") {
    for (const auto& [s, r] : std::vector<std::pair<SpaceSpec, int>>{
             {SpaceSpec::hamming(2, 8), 2},
             {SpaceSpec::hamming(3, 5), 2},
             {SpaceSpec::johnson(10, 5), 2},
             {SpaceSpec::permutation(5), 2}}) {
        BallGraph g = build_ball_graph(s, r);
        for (std::uint64_t seed : {0ull, 1ull, 42ull}) {
            CodeResult code = construct_code(g, CodeMethod::greedy_maximal, seed);
            CAPTURE(s.kind_name());
            CAPTURE(seed);
            CHECK(code.verified_independent);
            CHECK(double(code.size) >= code.sphere_covering_bound);
            CHECK(code.size >= static_cast<std::uint64_t>(std::ceil(code.sphere_covering_bound)));
            check_pairwise(g, code);
        }
    }
}

TEST_CASE("codewords come out sorted and distinct") {
    BallGraph g = build_ball_graph(SpaceSpec::hamming(2, 8), 2);
    CodeResult code = construct_code(g, CodeMethod::degeneracy_order);
    for (size_t i = 1; i < code.codewords.size(); ++i)
        CHECK(code.codewords[i - 1] < code.codewords[i]);
    CHECK(code.size == code.codewords.size());
}

TEST_CASE("sharply two-transitive maps are the largest distance-3 code on S4") {
    BallGraph g = build_ball_graph(SpaceSpec::permutation(4), 2);
    CodeResult exact = construct_code(g, CodeMethod::exact_branch_bound);
    // pairwise distance >= 3 forces distinct (sigma(0), sigma(1)) pairs, so
    // 4*3 is a hard ceiling; the affine maps over F_4 attain it
    CHECK(exact.size == 12);
    check_pairwise(g, exact);
}

TEST_CASE("exact solver matches brute force on small explicit graphs") {
    BallGraph path3 = explicit_graph({{1}, {0, 2}, {1}});
    CHECK(construct_code(path3, CodeMethod::exact_branch_bound).size == 2);
    BallGraph c5 = explicit_graph({{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}});
    CHECK(construct_code(c5, CodeMethod::exact_branch_bound).size == 2);
    BallGraph petersen = explicit_graph({{1, 4, 5},
                                         {0, 2, 6},
                                         {1, 3, 7},
                                         {2, 4, 8},
                                         {3, 0, 9},
                                         {0, 7, 8},
                                         {1, 8, 9},
                                         {2, 9, 5},
                                         {3, 5, 6},
                                         {4, 6, 7}});
    CHECK(construct_code(petersen, CodeMethod::exact_branch_bound).size == 4);
}

TEST_CASE("exact solver refuses big instances") {
    std::vector<std::vector<std::uint32_t>> adj(61);
    BallGraph g = explicit_graph(std::move(adj));
    CHECK_THROWS_AS(construct_code(g, CodeMethod::exact_branch_bound), BudgetExceeded);
    CHECK(construct_code(g, CodeMethod::greedy_maximal).size == 61);
}

TEST_CASE("degeneracy improvement does not fall off as the cube grows") {
    // ratio of achieved size to the covering floor, one dip tolerated
    double prev = 0.0;
    int violations = 0;
    for (int n = 8; n <= 16; n += 2) {
        SpaceSpec s = SpaceSpec::hamming(2, n);
        int r = n / 4;
        BallGraph g = build_ball_graph(s, r);
        CodeResult code = construct_code(g, CodeMethod::degeneracy_order);
        CHECK(double(code.size) >= code.sphere_covering_bound);
        double ratio = code.improvement_factor;
        if (ratio < prev - 1e-12) ++violations;
        prev = ratio;
    }
    CHECK(violations <= 1);
}

}  // TEST_SUITE
