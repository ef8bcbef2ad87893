#include "ballvol/space.hpp"

#include <set>
#include <stdexcept>
#include <vector>

#include "ballvol/sample.hpp"
#include "doctest.h"

using namespace ballvol;

namespace {

// enumeration oracle for shell sizes
BigCount counted_shell(const SpaceSpec& s, const Point& c, int rho) {
    BigCount n = 0;
    for_each_shell_point(s, c, rho, [&](const Point&) { ++n; });
    return n;
}

}  // namespace

TEST_SUITE("space") {

TEST_CASE("spec validation and point counts") {
    CHECK(SpaceSpec::hamming(3, 5).point_count() == 243);
    CHECK(SpaceSpec::johnson(6, 2).point_count() == 15);
    CHECK(SpaceSpec::permutation(5).point_count() == 120);
    CHECK_THROWS_AS(SpaceSpec::hamming(1, 5).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::johnson(4, 0).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::johnson(4, 4).validate(), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::permutation(0).validate(), std::invalid_argument);
}

TEST_CASE("distances on the worked examples") {
    CHECK(distance(SpaceSpec::hamming(2, 4), {0, 0, 1, 1}, {0, 1, 0, 1}) == 2);
    CHECK(distance(SpaceSpec::johnson(4, 2), {0, 1}, {2, 3}) == 2);
    CHECK(distance(SpaceSpec::permutation(3), {0, 1, 2}, {1, 0, 2}) == 2);
    CHECK_THROWS(distance(SpaceSpec::hamming(2, 4), {0, 0, 1}, {0, 1, 0, 1}));
}

TEST_CASE("metric axioms hold on random triples") {
    std::vector<SpaceSpec> specs{SpaceSpec::hamming(3, 6), SpaceSpec::johnson(8, 3),
                                 SpaceSpec::permutation(5)};
    for (const SpaceSpec& s : specs) {
        std::uint64_t total = s.point_count().get_ui();
        SplitMix64 g = SplitMix64::derive(41, 0);
        for (int trial = 0; trial < 200; ++trial) {
            Point x = point_at_rank(s, g.next_below(total));
            Point y = point_at_rank(s, g.next_below(total));
            Point z = point_at_rank(s, g.next_below(total));
            int dxy = distance(s, x, y);
            CHECK(dxy == distance(s, y, x));
            CHECK((dxy == 0) == (x == y));
            CHECK(dxy <= distance(s, x, z) + distance(s, z, y));
            CHECK(dxy <= s.diameter());
        }
    }
}

TEST_CASE("ball volumes on the worked examples") {
    CHECK(ball_volume(SpaceSpec::hamming(2, 4), 2).volume == 11);
    CHECK(ball_volume(SpaceSpec::johnson(4, 2), 1).volume == 5);
    CHECK(ball_volume(SpaceSpec::permutation(3), 2).volume == 4);
}

TEST_CASE("volume profile structure") {
    for (const SpaceSpec& s : {SpaceSpec::hamming(3, 5), SpaceSpec::johnson(7, 3),
                               SpaceSpec::permutation(4)}) {
        int d = s.diameter();
        VolumeProfile prof = ball_volume(s, d);
        CHECK(prof.shell_volumes.size() == static_cast<size_t>(d + 1));
        CHECK(prof.shell_volumes[0] == 1);
        BigCount sum = 0;
        for (const BigCount& sv : prof.shell_volumes) sum += sv;
        CHECK(sum == prof.volume);
        // the full-diameter ball is the whole space
        CHECK(prof.volume == s.point_count());
        CHECK_THROWS(ball_volume(s, d + 1));
        CHECK_THROWS(ball_volume(s, -1));
    }
    // no permutation moves exactly one element
    CHECK(shell_volume(SpaceSpec::permutation(6), 1) == 0);
}

TEST_CASE("closed-form shells match enumeration") {
    SpaceSpec h = SpaceSpec::hamming(3, 5);
    BigCount offsets = 1;  // (q-1)^i
    for (int i = 0; i <= 5; ++i) {
        CHECK(shell_volume(h, i) == binomial(5, i) * offsets);
        CHECK(shell_volume(h, i) == counted_shell(h, origin_point(h), i));
        offsets *= 2;
    }
    SpaceSpec j = SpaceSpec::johnson(9, 4);
    for (int i = 0; i <= j.diameter(); ++i) {
        CHECK(shell_volume(j, i) == binomial(4, i) * binomial(5, i));
        CHECK(shell_volume(j, i) == counted_shell(j, origin_point(j), i));
    }
    SpaceSpec p = SpaceSpec::permutation(6);
    for (int i = 0; i <= 6; ++i) {
        CHECK(shell_volume(p, i) == binomial(6, i) * derangements(i));
        CHECK(shell_volume(p, i) == counted_shell(p, origin_point(p), i));
    }
}

TEST_CASE("shells are center-independent") {
    for (const SpaceSpec& s : {SpaceSpec::hamming(3, 4), SpaceSpec::johnson(7, 3),
                               SpaceSpec::permutation(5)}) {
        std::uint64_t total = s.point_count().get_ui();
        SplitMix64 g = SplitMix64::derive(99, 1);
        for (int trial = 0; trial < 5; ++trial) {
            Point c = point_at_rank(s, g.next_below(total));
            for (int rho = 0; rho <= s.diameter(); ++rho)
                CHECK(counted_shell(s, c, rho) == shell_volume(s, rho));
        }
    }
}

TEST_CASE("shell enumeration emits each point exactly once, at the right distance") {
    for (const SpaceSpec& s : {SpaceSpec::hamming(4, 3), SpaceSpec::johnson(8, 3),
                               SpaceSpec::permutation(5)}) {
        Point c = origin_point(s);
        for (int rho = 0; rho <= s.diameter(); ++rho) {
            std::set<Point> seen;
            for_each_shell_point(s, c, rho, [&](const Point& x) {
                CHECK(distance(s, c, x) == rho);
                CHECK(seen.insert(x).second);
            });
            CHECK(BigCount(static_cast<unsigned long>(seen.size())) == shell_volume(s, rho));
        }
    }
}

TEST_CASE("canonical partner sits at the requested distance") {
    SpaceSpec h = SpaceSpec::hamming(3, 7);
    for (int k = 0; k <= 7; ++k)
        CHECK(distance(h, origin_point(h), canonical_partner(h, k)) == k);
    SpaceSpec j = SpaceSpec::johnson(9, 4);
    for (int k = 0; k <= j.diameter(); ++k)
        CHECK(distance(j, origin_point(j), canonical_partner(j, k)) == k);
    SpaceSpec p = SpaceSpec::permutation(6);
    CHECK(distance(p, origin_point(p), canonical_partner(p, 0)) == 0);
    for (int k = 2; k <= 6; ++k)
        CHECK(distance(p, origin_point(p), canonical_partner(p, k)) == k);
    CHECK_THROWS(canonical_partner(p, 1));
}

TEST_CASE("rank round-trips and follows enumeration order") {
    for (const SpaceSpec& s : {SpaceSpec::hamming(3, 4), SpaceSpec::johnson(7, 3),
                               SpaceSpec::permutation(4)}) {
        std::uint64_t expect = 0;
        for_each_point(s, [&](const Point& x) {
            CHECK(point_rank(s, x) == expect);
            CHECK(point_at_rank(s, expect) == x);
            ++expect;
        });
        CHECK(BigCount(static_cast<unsigned long>(expect)) == s.point_count());
    }
}

TEST_CASE("format and parse round-trip") {
    for (const SpaceSpec& s : {SpaceSpec::hamming(4, 5), SpaceSpec::johnson(8, 3),
                               SpaceSpec::permutation(5)}) {
        std::uint64_t total = s.point_count().get_ui();
        SplitMix64 g = SplitMix64::derive(7, 2);
        for (int trial = 0; trial < 20; ++trial) {
            Point x = point_at_rank(s, g.next_below(total));
            CHECK(parse_point(s, format_point(s, x)) == x);
        }
    }
    CHECK(format_point(SpaceSpec::hamming(2, 4), {1, 0, 1, 1}) == "1011");
}

TEST_CASE("point-count cap is enforced") {
    CHECK(checked_point_count(SpaceSpec::hamming(2, 10), 1 << 10) == 1024);
    CHECK_THROWS_AS(checked_point_count(SpaceSpec::hamming(2, 40), 1'000'000),
                    BudgetExceeded);
    CHECK_THROWS_AS(checked_point_count(SpaceSpec::permutation(30), 1'000'000),
                    BudgetExceeded);
}

}  // TEST_SUITE
