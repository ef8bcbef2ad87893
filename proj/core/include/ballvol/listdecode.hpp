#pragma once

#include <cstdint>
#include <map>

#include "ballvol/space.hpp"

namespace ballvol {

// Parameter bundle for the random-code witness experiments. Derived fields
// follow from (q, n, p, epsilon) and the ball-growth decay rate c; radius is
// floor(p*n) and message_count is floor(q^{rate*n}). Both L and message_count
// may be overridden after derivation to pin down enumerable instances.
struct ListDecodeParams {
    int q = 2;
    int n = 1;
    double p = 0.0;
    double epsilon = 0.0;
    double c = 0.0;

    double rate = 0.0;   // 1 - h_q(p) - epsilon
    double ell0 = 0.0;   // (1 - h_q(p)) / (2 epsilon)
    double gamma = 0.0;  // (4(q-1)/ln q) * q^{-c * ell0}
    int L = 1;
    int radius = 0;
    BigCount message_count;
};

// Fills in the derived fields. Requires p in (0, (q-1)/q), epsilon > 0, and a
// positive resulting rate; c > 0 is the fitted decay rate the caller brings.
// The auto-derived list size is floor((1 - gamma) / epsilon), clamped to >= 1
// (gamma >= 1 voids the guarantee at these sizes; the clamp keeps the
// experiment runnable and the gap visible in reports).
ListDecodeParams derive_list_params(int q, int n, double p, double epsilon, double c);

// mu = vol(n, floor(p*n)) / q^n, the probability that a uniform word lands in
// a fixed radius-floor(pn) ball. Exact.
ExactRatio compute_mu(int q, int n, double p);

// Exact P(E_ell): two centers drawn uniformly, ell common codewords must land
// in both balls and 2(L - ell) further codewords in one ball each. The sum
// over center pairs collapses to distance classes and the intersection sizes
// come from the closed-form count, so this stays cheap well past n = 100.
ExactRatio event_probability(int q, int n, double p, int L, int ell);

// Same quantity with every intersection size found by full enumeration, as an
// independent oracle for event_probability. Refuses instances where the
// nominal enumeration q^{n(2 + 2L - ell)} is out of reach (practical cap
// around q=2, n=5, L=2).
ExactRatio event_probability_enumerated(int q, int n, double p, int L, int ell);

struct EventBounds {
    double power_bound = 0.0;   // mu^{2L - ell + 1}
    double growth_bound = 0.0;  // q^{-n} mu^{2L-ell} (1 + 2(q-1) q^{-c*ell})^n
    double minimum = 0.0;
};

// The two covariance-lemma upper bounds on P(E_ell) for 1 <= ell <= L.
EventBounds lemma_bounds(const ListDecodeParams& params, int ell);

struct WitnessStats {
    ListDecodeParams params;
    ExactRatio mu;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;

    // W = number of (center, ordered distinct message L-tuple) pairs whose
    // codewords all sit in the radius ball around the center
    std::map<std::uint64_t, std::uint64_t> witness_histogram;
    double mean_witnesses = 0.0;
    double witness_std_error = 0.0;

    // fraction of sampled codes with W >= 1, i.e. some ball holds L codewords
    double prob_not_list_decodable = 0.0;
    double prob_std_error = 0.0;

    ExactRatio expected_witnesses;      // q^n * (M)_L * mu^L
    ExactRatio witness_variance;        // exact Var W via the pair decomposition
    double chebyshev_zero_bound = 0.0;  // min(1, Var / E^2) >= P(W = 0)
};

// Samples `trials` random codes (message_count independent uniform words,
// collisions allowed), counts witnesses exactly per code by walking each
// codeword's ball, and reports the empirical statistics next to the exact
// moments. Needs q^n enumerable and message_count * vol(radius) * trials
// within budget.
WitnessStats witness_experiment(const ListDecodeParams& params, std::uint64_t trials,
                                std::uint64_t seed);

}  // namespace ballvol
