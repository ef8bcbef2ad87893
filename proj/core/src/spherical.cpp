#include "ballvol/spherical.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ballvol/stats.hpp"

namespace ballvol {

namespace {

constexpr double pi = std::numbers::pi;

double gaussian(SplitMix64& g) {
    // Box-Muller on our own stream; keeps runs byte-identical across stdlibs
    double u = 1.0 - g.next_unit();
    double v = g.next_unit();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * pi * v);
}

// Latitude phi in [0, theta] with density proportional to sin^{n-2}(phi).
// Proposal sin^{n-2}(phi) cos(phi) has the closed inverse CDF
// arcsin(sin(theta) * U^{1/(n-1)}); accept with probability cos(theta)/cos(phi).
// Acceptance is at least cos(theta), so stalls only signal broken parameters.
struct CapLatitudeSampler {
    int n;
    double theta;
    double sin_theta;
    double cos_theta;
    std::uint64_t attempts = 0;
    std::uint64_t draws = 0;

    CapLatitudeSampler(int n_, double theta_)
        : n(n_), theta(theta_), sin_theta(std::sin(theta_)), cos_theta(std::cos(theta_)) {}

    double operator()(SplitMix64& g) {
        for (int tries = 0; tries < 1'000'000; ++tries) {
            ++attempts;
            double u = g.next_unit();
            double phi = std::asin(sin_theta * std::pow(u, 1.0 / (n - 1)));
            if (g.next_unit() * std::cos(phi) <= cos_theta) {
                ++draws;
                return phi;
            }
        }
        throw std::runtime_error("cap latitude sampler stalled");
    }
};

// Unit vector uniform on S^{m-1} via normalized Gaussians.
void unit_vector(SplitMix64& g, std::vector<double>& v) {
    double norm2 = 0.0;
    do {
        norm2 = 0.0;
        for (double& x : v) {
            x = gaussian(g);
            norm2 += x * x;
        }
    } while (norm2 == 0.0);
    double inv = 1.0 / std::sqrt(norm2);
    for (double& x : v) x *= inv;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    KahanSum s;
    for (std::size_t i = 0; i < a.size(); ++i) s.add(a[i] * b[i]);
    return s.value();
}

}  // namespace

void CapParams::validate() const {
    if (n < 2) throw std::invalid_argument("cap: dimension must be >= 2");
    if (!(theta > 0.0) || !(theta < pi / 2))
        throw std::invalid_argument("cap: theta must lie strictly in (0, pi/2)");
}

double cap_area(const CapParams& params) {
    params.validate();
    const double m = params.n - 2.0;
    auto density = [m](double phi) { return std::pow(std::sin(phi), m); };
    using quad = boost::math::quadrature::gauss_kronrod<double, 31>;

    // Fixed-order Kronrod on segments cut at equal log-density decrements.
    // Each piece spans a factor of e^5, which keeps the per-segment error
    // estimate at machine level even when the whole integrand crosses
    // hundreds of decades (adaptive refinement drowns its own estimate
    // there). The head below e^-60 of the peak is bounded by a rectangle
    // and charged to the error budget.
    double numer = 0.0, err = 0.0;
    if (m >= 1.0) {
        double hi = params.theta;
        for (double u = 5.0; u <= 60.0; u += 5.0) {
            double lo = std::asin(std::sin(params.theta) * std::exp(-u / m));
            double e = 0.0;
            numer += quad::integrate(density, lo, hi, 0, 0.0, &e);
            err += e;
            hi = lo;
        }
        err += hi * density(hi);
    } else {
        numer = quad::integrate(density, 0.0, params.theta, 0, 0.0, &err);
    }
    // full-sphere normalizer has the closed form sqrt(pi) G((n-1)/2) / G(n/2)
    double total = std::exp(0.5 * std::log(pi) + std::lgamma((params.n - 1) / 2.0) -
                            std::lgamma(params.n / 2.0));
    if (!(numer > 0.0) || !(err >= 0.0) || err > 1e-10 * numer)
        throw std::runtime_error("cap_area: quadrature did not certify 1e-10 relative error");
    return numer / total;
}

SphericalBounds spherical_constants(double theta) {
    if (!(theta > 0.0) || !(theta < pi / 2))
        throw std::domain_error("spherical_constants: theta must lie in (0, pi/2)");
    const double c = std::cos(theta), s = std::sin(theta);
    const double root = std::sqrt((1.0 - c) * (1.0 - c) * (1.0 + 2.0 * c));

    SphericalBounds out;
    out.q_theta = std::asin(root / s);
    out.c_theta = std::log(s * s / root);
    out.gklp_constant = std::log(s / (std::sqrt(2.0) * std::sin(theta / 2)));
    return out;
}

SphericalBounds bound_table(int n, double theta) {
    SphericalBounds out = spherical_constants(theta);
    out.s_theta = cap_area({n, theta});
    out.covering_bound = 1.0 / out.s_theta;
    out.jjp_bound = out.c_theta * n / out.s_theta;
    out.gklp_bound = out.gklp_constant * n / out.s_theta;
    return out;
}

CapIntersectionReport verify_cap_intersection(int n, double theta, std::uint64_t samples,
                                              std::uint64_t seed) {
    CapParams cap{n, theta};
    cap.validate();
    if (n > 100) throw std::invalid_argument("verify_cap_intersection: n capped at 100");
    if (samples < 10'000)
        throw std::invalid_argument("verify_cap_intersection: need samples >= 10^4");

    CapIntersectionReport rep;
    rep.n = n;
    rep.theta = theta;
    rep.samples = samples;
    rep.seed = seed;
    rep.s_theta = cap_area(cap);
    rep.q_theta = spherical_constants(theta).q_theta;
    rep.bound = 2.0 * cap_area({n, rep.q_theta});

    // s(C(u) ∩ C(x)) = s_theta * P_{z ~ C(x)}(<u,z> >= cos theta), so a pair
    // (u, z) of cap points yields one Bernoulli sample of the mean overlap
    const double cos_theta = std::cos(theta);
    CapLatitudeSampler latitude(n, theta);
    SplitMix64 g = SplitMix64::derive(seed, 0);
    std::vector<double> vu(static_cast<std::size_t>(n - 1)), vz(static_cast<std::size_t>(n - 1));

    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double pu = latitude(g), pz = latitude(g);
        unit_vector(g, vu);
        unit_vector(g, vz);
        double cos_uz =
            std::cos(pu) * std::cos(pz) + std::sin(pu) * std::sin(pz) * dot(vu, vz);
        inside += cos_uz >= cos_theta;
    }

    const double rate = static_cast<double>(inside) / static_cast<double>(samples);
    rep.mean_overlap = rep.s_theta * rate;
    rep.std_error = rep.s_theta * frequency_stderr(rate, static_cast<long>(samples));
    rep.acceptance_rate =
        static_cast<double>(latitude.draws) / static_cast<double>(latitude.attempts);
    rep.verdict = rep.mean_overlap <= rep.bound + 3.0 * rep.std_error ? Verdict::pass
                                                                      : Verdict::fail;
    return rep;
}

double cap_overlap_mc(int n, double theta, double separation, std::uint64_t samples,
                      std::uint64_t seed) {
    CapParams cap{n, theta};
    cap.validate();
    if (samples < 1) throw std::invalid_argument("cap_overlap_mc: need samples >= 1");
    if (!(separation >= 0.0) || !(separation <= pi))
        throw std::invalid_argument("cap_overlap_mc: separation must lie in [0, pi]");

    // z uniform in the cap around a = e1; b sits at the given separation in
    // the (e1, e2) plane, so membership needs only z's first two coordinates
    const double cos_theta = std::cos(theta);
    const double cb = std::cos(separation), sb = std::sin(separation);
    CapLatitudeSampler latitude(n, theta);
    SplitMix64 g = SplitMix64::derive(seed, 1);
    std::vector<double> v(static_cast<std::size_t>(n - 1));

    std::uint64_t inside = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        double phi = latitude(g);
        unit_vector(g, v);
        double dot_b = cb * std::cos(phi) + sb * std::sin(phi) * v[0];
        inside += dot_b >= cos_theta;
    }
    return cap_area(cap) * static_cast<double>(inside) / static_cast<double>(samples);
}

}  // namespace ballvol
