#include "ballvol/listdecode.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

#include "ballvol/comb.hpp"
#include "ballvol/intersect.hpp"
#include "ballvol/stats.hpp"

namespace ballvol {

namespace {

// floor with a tiny forgiveness so p*n landing a hair under an integer
// (binary representation of p) still counts as that integer
int lenient_floor(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

// floor(q^e) for real e via 256-bit evaluation; e stays modest at desk scale
BigCount integer_power_floor(int q, double e) {
    mpfr_t t, ex;
    mpfr_init2(t, 256);
    mpfr_init2(ex, 256);
    mpfr_set_d(ex, e, MPFR_RNDN);
    mpfr_ui_pow(t, static_cast<unsigned long>(q), ex, MPFR_RNDN);
    mpfr_floor(t, t);
    BigCount out;
    mpfr_get_z(out.get_mpz_t(), t, MPFR_RNDN);
    mpfr_clears(t, ex, static_cast<mpfr_ptr>(nullptr));
    return out;
}

BigCount integer_power(int q, int n) {
    BigCount out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(n));
    return out;
}

// (m)_j = m(m-1)...(m-j+1); zero once the factors run out
BigCount falling_factorial(const BigCount& m, int j) {
    BigCount out = 1;
    for (int i = 0; i < j; ++i) {
        BigCount f = m - i;
        if (f <= 0) return BigCount(0);
        out *= f;
    }
    return out;
}

ExactRatio ratio_pow(ExactRatio base, int e) {
    ExactRatio out = 1;
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

// P(E_ell) = sum_k P(dist(a,b) = k) * (I_k / q^n)^ell * mu^{2(L - ell)},
// with I_k the two-ball intersection at center distance k. The distance-class
// sum is exactly the sum over ordered center pairs divided by q^{2n}.
ExactRatio event_probability_exact(int q, int n, int radius, int L, int ell,
                                   bool enumerate_volumes) {
    SpaceSpec s = SpaceSpec::hamming(q, n);
    BigCount qn = integer_power(q, n);
    ExactRatio mu = make_ratio(ball_volume(s, radius).volume, qn);
    ExactRatio tail = ratio_pow(mu, 2 * (L - ell));

    ExactRatio total = 0;
    BigCount offsets = 1;  // (q-1)^k
    for (int k = 0; k <= n; ++k) {
        BigCount ik = enumerate_volumes
                          ? intersection_volume_bruteforce(s, origin_point(s),
                                                           canonical_partner(s, k), radius)
                          : hamming_intersection_volume(q, n, radius, k);
        ExactRatio term = make_ratio(binomial(n, k) * offsets, qn);
        term *= ratio_pow(make_ratio(ik, qn), ell);
        total += term * tail;
        offsets *= q - 1;
    }
    return total;
}

}  // namespace

ListDecodeParams derive_list_params(int q, int n, double p, double epsilon, double c) {
    if (q < 2 || n < 1) throw std::invalid_argument("derive_list_params: need q >= 2, n >= 1");
    if (!(p > 0.0) || !(p < double(q - 1) / q))
        throw std::invalid_argument("derive_list_params: need 0 < p < (q-1)/q");
    if (!(epsilon > 0.0)) throw std::invalid_argument("derive_list_params: need epsilon > 0");
    if (!(c > 0.0)) throw std::invalid_argument("derive_list_params: need decay rate c > 0");

    ListDecodeParams out;
    out.q = q;
    out.n = n;
    out.p = p;
    out.epsilon = epsilon;
    out.c = c;
    const double h = q_ary_entropy(q, p);
    out.rate = 1.0 - h - epsilon;
    if (!(out.rate > 0.0))
        throw std::invalid_argument("derive_list_params: rate 1 - h_q(p) - epsilon must be > 0");
    out.ell0 = (1.0 - h) / (2.0 * epsilon);
    out.gamma = (4.0 * (q - 1) / std::log(double(q))) *
                std::pow(double(q), -c * out.ell0);
    out.L = std::max(1, lenient_floor((1.0 - out.gamma) / epsilon));
    out.radius = lenient_floor(p * n);
    out.message_count = integer_power_floor(q, out.rate * n);
    return out;
}

ExactRatio compute_mu(int q, int n, double p) {
    if (q < 2 || n < 1) throw std::invalid_argument("compute_mu: need q >= 2, n >= 1");
    int radius = lenient_floor(p * n);
    if (radius < 0 || radius > n)
        throw std::invalid_argument("compute_mu: floor(p*n) out of [0, n]");
    SpaceSpec s = SpaceSpec::hamming(q, n);
    return make_ratio(ball_volume(s, radius).volume, integer_power(q, n));
}

ExactRatio event_probability(int q, int n, double p, int L, int ell) {
    if (L < 1) throw std::invalid_argument("event_probability: need L >= 1");
    if (ell < 0 || ell > L) throw std::invalid_argument("event_probability: need 0 <= ell <= L");
    int radius = lenient_floor(p * n);
    if (radius < 0 || radius > n)
        throw std::invalid_argument("event_probability: floor(p*n) out of [0, n]");
    return event_probability_exact(q, n, radius, L, ell, false);
}

ExactRatio event_probability_enumerated(int q, int n, double p, int L, int ell) {
    if (L < 1) throw std::invalid_argument("event_probability_enumerated: need L >= 1");
    if (ell < 0 || ell > L)
        throw std::invalid_argument("event_probability_enumerated: need 0 <= ell <= L");
    int radius = lenient_floor(p * n);
    if (radius < 0 || radius > n)
        throw std::invalid_argument("event_probability_enumerated: floor(p*n) out of [0, n]");

    // the honest cost of enumerating both centers and all 2L - ell points
    const double nominal_bits = n * (2 + 2 * L - ell) * std::log2(double(q));
    if (nominal_bits > 34.0)
        throw BudgetExceeded("event probability enumeration out of reach: q^" +
                             std::to_string(n * (2 + 2 * L - ell)));
    return event_probability_exact(q, n, radius, L, ell, true);
}

EventBounds lemma_bounds(const ListDecodeParams& params, int ell) {
    if (ell < 1 || ell > params.L)
        throw std::invalid_argument("lemma_bounds: need 1 <= ell <= L");
    const double mu = compute_mu(params.q, params.n, params.p).get_d();
    const double q = params.q;

    EventBounds out;
    out.power_bound = std::pow(mu, 2 * params.L - ell + 1);
    out.growth_bound = std::pow(q, -double(params.n)) * std::pow(mu, 2 * params.L - ell) *
                       std::pow(1.0 + 2.0 * (q - 1) * std::pow(q, -params.c * ell),
                                double(params.n));
    out.minimum = std::min(out.power_bound, out.growth_bound);
    return out;
}

WitnessStats witness_experiment(const ListDecodeParams& params, std::uint64_t trials,
                                std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("witness_experiment: need trials >= 1");
    if (params.L < 1) throw std::invalid_argument("witness_experiment: need L >= 1");
    SpaceSpec s = SpaceSpec::hamming(params.q, params.n);
    const std::uint64_t n_points = checked_point_count(s, 1'000'000);

    if (!params.message_count.fits_ulong_p())
        throw BudgetExceeded("witness_experiment: message count too large");
    const std::uint64_t messages = params.message_count.get_ui();
    const BigCount ball = ball_volume(s, params.radius).volume;
    if (BigCount(messages) * ball * BigCount(trials) > BigCount(2'000'000'000))
        throw BudgetExceeded("witness_experiment: messages * vol(radius) * trials over budget");

    WitnessStats stats;
    stats.params = params;
    stats.trials = trials;
    stats.seed = seed;
    stats.mu = make_ratio(ball, integer_power(params.q, params.n));

    // exact first and second moments of the ordered witness count
    const BigCount qn = integer_power(params.q, params.n);
    ExactRatio mu_l = ratio_pow(stats.mu, params.L);
    stats.expected_witnesses = ExactRatio(qn * falling_factorial(params.message_count, params.L));
    stats.expected_witnesses *= mu_l;

    ExactRatio second_moment = 0;
    for (int ell = 0; ell <= params.L; ++ell) {
        // ordered tuple pairs sharing exactly ell messages
        BigCount pairs = falling_factorial(params.message_count, params.L) *
                         binomial(params.L, ell) * binomial(params.L, ell) * factorial(ell) *
                         falling_factorial(params.message_count - params.L, params.L - ell);
        if (pairs == 0) continue;
        ExactRatio p_ell =
            event_probability_exact(params.q, params.n, params.radius, params.L, ell, false);
        second_moment += ExactRatio(pairs * qn * qn) * p_ell;
    }
    stats.witness_variance =
        second_moment - stats.expected_witnesses * stats.expected_witnesses;
    const double ew = stats.expected_witnesses.get_d();
    stats.chebyshev_zero_bound =
        ew > 0.0 ? std::min(1.0, stats.witness_variance.get_d() / (ew * ew)) : 1.0;

    // Monte Carlo over random codes; counts per center live in a dense array
    // and only touched entries are reset between trials
    std::vector<std::uint32_t> hits(n_points, 0);
    std::vector<std::uint64_t> touched;
    touched.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(
        messages * (ball.fits_ulong_p() ? ball.get_ui() : n_points), n_points)));
    Point codeword(static_cast<std::size_t>(params.n));

    KahanSum w_sum, w_sq;
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        SplitMix64 rng = SplitMix64::derive(seed, t);
        touched.clear();
        for (std::uint64_t m = 0; m < messages; ++m) {
            for (int i = 0; i < params.n; ++i)
                codeword[static_cast<std::size_t>(i)] =
                    static_cast<int>(rng.next_below(static_cast<std::uint64_t>(params.q)));
            for (int rho = 0; rho <= params.radius; ++rho)
                for_each_shell_point(s, codeword, rho, [&](const Point& x) {
                    std::uint64_t rank = point_rank(s, x);
                    if (hits[rank]++ == 0) touched.push_back(rank);
                });
        }
        std::uint64_t w = 0;
        bool witnessed = false;
        for (std::uint64_t rank : touched) {
            std::uint32_t cnt = hits[rank];
            hits[rank] = 0;
            if (static_cast<int>(cnt) < params.L) continue;
            witnessed = true;
            std::uint64_t ordered = 1;
            for (int j = 0; j < params.L; ++j) ordered *= cnt - static_cast<std::uint32_t>(j);
            w += ordered;
        }
        ++stats.witness_histogram[w];
        failures += witnessed;
        w_sum.add(static_cast<double>(w));
        w_sq.add(static_cast<double>(w) * static_cast<double>(w));
    }

    const double tn = static_cast<double>(trials);
    stats.mean_witnesses = w_sum.value() / tn;
    if (trials > 1) {
        double var = (w_sq.value() - tn * stats.mean_witnesses * stats.mean_witnesses) /
                     (tn - 1.0);
        stats.witness_std_error = std::sqrt(std::max(0.0, var) / tn);
    }
    stats.prob_not_list_decodable = static_cast<double>(failures) / tn;
    stats.prob_std_error =
        frequency_stderr(stats.prob_not_list_decodable, static_cast<long>(trials));
    return stats;
}

}  // namespace ballvol
