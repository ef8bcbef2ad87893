#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ballvol {

// Kahan-compensated accumulator so shard merges are reassociation-stable.
struct KahanSum {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    long points = 0;
};

// Ordinary least squares y = a + b x. With fewer than two points the slope
// is zero and r_squared is 1 by convention.
LinearFit linear_fit(const std::vector<std::pair<double, double>>& xy);

// Upper tail of the chi-square distribution: P(X >= stat) with dof degrees
// of freedom.
double chi_square_p_value(double stat, long dof);

// sqrt(p(1-p)/n), the binomial standard error of a frequency estimate.
double frequency_stderr(double p, long n);

struct SplitMix64 {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Stream k of a master seed. Streams are decorrelated by mixing seed and
    // stream index separately; sample index j of a sharded run uses
    // derive(seed, j) so results do not depend on thread schedule.
    static SplitMix64 derive(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 g;
        g.state = mix(seed) ^ mix(~stream);
        return g;
    }

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound), unbiased (multiply-shift with rejection).
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t x = next();
        unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t t = -bound % bound;
            while (lo < t) {
                x = next();
                m = static_cast<unsigned __int128>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool next_bernoulli(double p) { return next_unit() < p; }
};

}  // namespace ballvol
