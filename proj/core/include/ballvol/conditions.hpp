#pragma once

#include "ballvol/sample.hpp"

namespace ballvol {

struct SampleBudget {
    long samples = 100'000;
    std::uint64_t seed = 0;
    std::uint64_t enum_cap = 10'000'000;
    int jobs = 1;
};

struct GrowthPoint {
    int t = 0;
    ExactRatio ratio;  // vol(r-t)/vol(r), exact
    BoundCheck check = BoundCheck::indeterminate;
};

struct GrowthReport {
    SpaceSpec space;
    int r = 0;
    std::vector<GrowthPoint> rate_points;
    double fitted_rate = 0.0;
    double rate_floor = 0.0;
    Verdict verdict = Verdict::indeterminate;
    std::string note;
};

// Exact volume-ratio profile for t = 1..t_max. The rate is fitted from the
// shell quotients, c = min_t (1/t) ln(S(r)/S(r-t)), which is the largest c
// the ratios support up to the factor-2 slack; the 2e^{-ct} comparison per
// point is then certified by interval arithmetic. Pass needs every point
// certified below and c >= rate_floor.
GrowthReport verify_growth(const SpaceSpec& s, int r, int t_max, double rate_floor = 0.01);

enum class MeasureMode { exact, monte_carlo };

struct OffsetMean {
    int i = 0;
    double mean = 0.0;
    double stderr_ = 0.0;  // zero in exact mode
    MeasureMode kind = MeasureMode::exact;
};

struct DispersalReport {
    SpaceSpec space;
    int r = 0, k = 0;
    double alpha = 0.0;
    std::vector<OffsetMean> per_offset_means;
    Verdict verdict = Verdict::indeterminate;
    std::string note;
};

// The alpha each space's drift argument supports: Hamming (1-pq/(q-1))/2,
// Johnson (lam(1-lam)-beta)/2, permutation (1-r/n)/4, with p, beta the
// radius fractions r/n and lam = w/n.
double default_alpha(const SpaceSpec& s, int r);

// Checks E ell >= 2*alpha*k on every shell S(a, r-i) for 0 <= i <= alpha*k
// at the canonical center pair. Exact mode uses the closed forms (Hamming,
// Johnson) or full-shell enumeration (permutation); Monte Carlo mode uses
// ell_statistics with a 3-sigma margin for the verdict.
DispersalReport verify_dispersal(const SpaceSpec& s, int r, int k, double alpha,
                                 MeasureMode mode, const SampleBudget& budget = {});

struct ThresholdCheck {
    int t = 0;
    double frequency = 0.0;
    double bound = 0.0;    // 2 exp(-t^2/claimed_k)
    double stderr_ = 0.0;  // binomial standard error of the frequency
    bool ok = false;
};

struct SubgaussianReport {
    SpaceSpec space;
    int r = 0, k = 0, i = 0;
    double claimed_k = 0.0;
    EllStatistics empirical_tail;
    double fitted_k = 0.0;  // max t^2/ln(2/freq) over nonzero tails
    std::vector<ThresholdCheck> checks;
    Verdict verdict = Verdict::indeterminate;
};

SubgaussianReport verify_subgaussian(const SpaceSpec& s, int r, int k, int i, double claimed_k,
                                     const SampleBudget& budget = {});

struct DecayPoint {
    int k = 0;
    double ratio = 0.0;  // |B(a,r) ∩ B(b,r)| / vol(r)
    double log_ratio = 0.0;
    bool excluded = false;  // zero intersection, left out of the fit
};

struct DecayReport {
    SpaceSpec space;
    int r = 0;
    std::vector<DecayPoint> points;
    double fitted_slope = 0.0;
    double r_squared = 1.0;
    long fitted_points = 0;
    std::string note;
};

// log(intersection/ball) against center distance k with a least-squares
// line. Exact mode uses closed forms or enumeration; Monte Carlo mode uses
// shell-weighted ball sampling.
DecayReport decay_profile(const SpaceSpec& s, int r, const std::vector<int>& k_values,
                          MeasureMode mode, const SampleBudget& budget = {});

// The report's acceptance rule: negative slope with R^2 >= 0.9.
bool decay_pass(const DecayReport& rep);

}  // namespace ballvol
