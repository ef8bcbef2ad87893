#pragma once

#include "ballvol/space.hpp"
#include "ballvol/stats.hpp"

namespace ballvol {

struct ShellSampleSpec {
    SpaceSpec space;
    Point a, b;
    int r = 0;
    int i = 0;  // shell offset: samples come from S(a, r-i)
    long sample_count = 1;
    std::uint64_t seed = 0;

    int shell_radius() const { return r - i; }
    void validate() const;
};

// Exactly uniform over S(center, rho). Consumes g; rejection attempts for the
// permutation derangement step are added to *attempts when given.
Point sample_shell_point(const SpaceSpec& s, const Point& center, int rho, SplitMix64& g,
                         std::uint64_t* attempts = nullptr);

struct EllStatistics {
    double mean = 0.0;
    double variance = 0.0;
    int min = 0;
    int max = 0;
    // threshold -> count of samples with |ell - mean| >= threshold,
    // thresholds 1, 2, 4, ... up to 2k
    std::vector<std::pair<int, long>> tail_histogram;
    long sample_count = 0;
    std::uint64_t seed = 0;

    bool operator==(const EllStatistics&) const = default;
};

// Empirical summary of ell(x) = d(x,b) - d(x,a) over independent shell
// samples. Sample j always uses stream j of the seed, so the result is
// byte-identical for every jobs value.
EllStatistics ell_statistics(const ShellSampleSpec& spec, int jobs = 1);

struct EllExpectation {
    double value = 0.0;
    bool lower_bound_only = false;  // permutations: certificate, not equality
    ExactRatio exact;               // the same value as an exact rational
    std::string formula;
};

// Closed-form E ell on S(a, r-i) for centers at distance k. Hamming and
// Johnson are exact; permutations get the certified lower bound
// (1 - r/n)k/2, valid once k >= 6n/(n-r).
EllExpectation exact_ell_expectation(const SpaceSpec& s, int r, int k, int i);

// Mean of ell over the whole shell by enumeration (oracle for the closed
// forms; throws BudgetExceeded past the cap).
ExactRatio enumerated_ell_mean(const SpaceSpec& s, const Point& a, const Point& b, int rho,
                               std::uint64_t enum_cap = 10'000'000);

struct IntersectionEstimate {
    BigCount ball_volume;
    double fraction = 0.0;  // P(x in B(b,r)) for x uniform in B(a,r)
    double fraction_stderr = 0.0;
    double volume_estimate = 0.0;
    double volume_stderr = 0.0;
    long samples = 0;
    std::uint64_t seed = 0;
};

// Monte Carlo intersection volume for spaces too large to enumerate; exact
// shell-weighted ball sampling, so the only error is binomial.
IntersectionEstimate estimate_intersection(const SpaceSpec& s, const Point& a, const Point& b,
                                           int r, long samples, std::uint64_t seed);

// Chi-square goodness-of-fit p-value of `samples` draws against the uniform
// distribution on S(center, rho); the shell must enumerate within the cap.
double shell_uniformity_pvalue(const SpaceSpec& s, const Point& center, int rho, long samples,
                               std::uint64_t seed, std::uint64_t shell_cap = 100'000);

// Uniform BigCount in [0, bound) from 64-bit draws with rejection.
BigCount uniform_big_below(const BigCount& bound, SplitMix64& g);

}  // namespace ballvol
