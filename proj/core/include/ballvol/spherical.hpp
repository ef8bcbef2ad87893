#pragma once

#include <cstdint>

#include "ballvol/exact.hpp"

namespace ballvol {

// Spherical cap C_theta(x) on S^{n-1}. Angles are radians; theta is kept
// strictly inside (0, pi/2), the regime the code bounds care about.
struct CapParams {
    int n = 2;
    double theta = 0.0;
    void validate() const;
};

// Normalized cap area s_n(theta): the latitude density sin^{n-2}(phi)
// integrated over [0, theta] against the exact full-sphere normalizer.
// Piecewise Gauss-Kronrod, relative error certified <= 1e-10 or it throws
// (it will throw when the area itself underflows a double).
double cap_area(const CapParams& params);

struct SphericalBounds {
    double s_theta = 0.0;
    double q_theta = 0.0;        // arcsin(sqrt((1-cos t)^2 (1+2 cos t)) / sin t)
    double c_theta = 0.0;        // ln(sin^2 t / sqrt((1-cos t)^2 (1+2 cos t)))
    double gklp_constant = 0.0;  // ln(sin t / (sqrt(2) sin(t/2)))
    double covering_bound = 0.0;  // 1 / s_n(theta)
    double jjp_bound = 0.0;       // c_theta * n / s_n(theta)
    double gklp_bound = 0.0;      // gklp_constant * n / s_n(theta)
};

// Just the three theta-only constants; the area and bound fields stay zero.
SphericalBounds spherical_constants(double theta);

// Constants plus the three code-size lower bounds at dimension n.
SphericalBounds bound_table(int n, double theta);

struct CapIntersectionReport {
    int n = 0;
    double theta = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    double s_theta = 0.0;
    double q_theta = 0.0;
    double bound = 0.0;         // 2 * s_n(q_theta)
    double mean_overlap = 0.0;  // estimate of E_{u in cap} s(C_theta(u) ∩ C_theta(x))
    double std_error = 0.0;
    double acceptance_rate = 0.0;  // latitude rejection sampler diagnostic
    Verdict verdict = Verdict::indeterminate;
};

// Monte Carlo check of the mean intersection bound. Writing the overlap as
// s_n(theta) * P(z in C_theta(u)) with z uniform in the outer cap turns the
// double integral into a single pair-sampling loop; the estimator is exact in
// expectation and every sample contributes, which literal uniform-sphere
// inner sampling would not survive at small s_n(theta).
CapIntersectionReport verify_cap_intersection(int n, double theta, std::uint64_t samples,
                                              std::uint64_t seed);

// s(C_theta(a) ∩ C_theta(b)) for centers at the given angular separation,
// by uniform-in-cap sampling around a. Exact endpoints: separation 0 gives
// s_n(theta), separation >= 2 theta gives 0.
double cap_overlap_mc(int n, double theta, double separation, std::uint64_t samples,
                      std::uint64_t seed);

}  // namespace ballvol
