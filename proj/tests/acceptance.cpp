// Release gate: one self-contained check per release criterion, one PASS/FAIL
// line each. Run with no arguments for the full battery or with a list of
// criterion numbers. Exit status is nonzero if anything failed.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <sstream>
#include <string>
#include <vector>

#include "ballvol/codes.hpp"
#include "ballvol/comb.hpp"
#include "ballvol/conditions.hpp"
#include "ballvol/graph.hpp"
#include "ballvol/hardcore.hpp"
#include "ballvol/intersect.hpp"
#include "ballvol/listdecode.hpp"
#include "ballvol/sample.hpp"
#include "ballvol/space.hpp"
#include "ballvol/spherical.hpp"

namespace {

using namespace ballvol;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Closed-form two-ball intersections against exhaustive enumeration for
//    every q in {2,3,4}, n <= 10, and all radius/distance pairs. One sweep
//    over the space per center pair accumulates the joint distance profile,
//    so all radii are read off by prefix sums. Budget: two minutes.
Outcome criterion_intersection_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    long cases = 0, mismatches = 0;
    for (int q : {2, 3, 4}) {
        for (int n = 1; n <= 10; ++n) {
            SpaceSpec s = SpaceSpec::hamming(q, n);
            for (int k = 0; k <= n; ++k) {
                // joint[i][j] = #{x : d(a,x)=i, d(b,x)=j} with a = 0^n and
                // b = 1^k 0^{n-k}
                std::vector<std::uint64_t> joint((n + 1) * (n + 1), 0);
                for_each_point(s, [&](const Point& x) {
                    int da = 0, db = 0;
                    for (int i = 0; i < n; ++i) {
                        da += x[i] != 0;
                        db += x[i] != (i < k ? 1 : 0);
                    }
                    ++joint[da * (n + 1) + db];
                });
                std::vector<std::uint64_t> cum = joint;
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n; ++j) {
                        std::uint64_t v = cum[i * (n + 1) + j];
                        if (i > 0) v += cum[(i - 1) * (n + 1) + j];
                        if (j > 0) v += cum[i * (n + 1) + j - 1];
                        if (i > 0 && j > 0) v -= cum[(i - 1) * (n + 1) + j - 1];
                        cum[i * (n + 1) + j] = v;
                    }
                for (int r = 0; r <= n; ++r) {
                    BigCount closed = hamming_intersection_volume(q, n, r, k);
                    BigCount counted(static_cast<unsigned long>(cum[r * (n + 1) + r]));
                    ++cases;
                    if (closed != counted) ++mismatches;
                }
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << cases << " cases, " << mismatches << " mismatches, " << secs << "s";
    return {mismatches == 0 && secs < 120.0, d.str()};
}

// 2. Log intersection ratios at n = 300 drop linearly in the center distance
//    (slope <= -0.01, R^2 >= 0.9) for q in {2,3} at three ball radii, and at
//    the entropy-maximizing radius the fitted shell growth rate collapses
//    below 0.01. Budget: five minutes.
Outcome criterion_decay_slopes() {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<int> ks;
    for (int k = 10; k <= 150; k += 5) ks.push_back(k);
    std::ostringstream d;
    bool ok = true;
    for (int q : {2, 3}) {
        SpaceSpec s = SpaceSpec::hamming(q, 300);
        for (double p : {0.1, 0.25, 0.4 * (q - 1) / q}) {
            int r = static_cast<int>(p * 300);
            DecayReport rep = decay_profile(s, r, ks, MeasureMode::exact);
            bool here = rep.fitted_slope <= -0.01 && rep.r_squared >= 0.9 &&
                        rep.fitted_points >= 2;
            ok = ok && here;
            d << "q" << q << " r" << r << " slope " << rep.fitted_slope << " R2 "
              << rep.r_squared << (here ? "; " : " BAD; ");
        }
        int r_max = (q - 1) * 300 / q;
        GrowthReport g = verify_growth(s, r_max, 20);
        bool collapsed = g.fitted_rate <= 0.01;
        ok = ok && collapsed;
        d << "q" << q << " rate@" << r_max << " " << g.fitted_rate
          << (collapsed ? "; " : " NOT COLLAPSED; ");
    }
    double secs = seconds_since(t0);
    d << secs << "s";
    return {ok && secs < 300.0, d.str()};
}

// 3. Closed-form shell drift expectations equal whole-shell enumeration on a
//    50-point grid at n <= 12, and match Monte Carlo within three sigma at
//    n = 200 with 1e5 samples per point.
Outcome criterion_dispersal_exactness() {
    long points = 0, wrong = 0;
    auto check_exact = [&](const SpaceSpec& s, int r, int k, int i) {
        Point a = origin_point(s);
        Point b = canonical_partner(s, k);
        EllExpectation e = exact_ell_expectation(s, r, k, i);
        ExactRatio brute = enumerated_ell_mean(s, a, b, r - i);
        ++points;
        if (e.lower_bound_only || e.exact != brute) ++wrong;
    };
    for (int q : {2, 3}) {
        for (int n : {8, 10, 12}) {
            for (int k : {n / 2, 3 * n / 4}) {
                for (int i : {0, 1}) check_exact(SpaceSpec::hamming(q, n), n / 4, k, i);
            }
        }
    }
    for (int n : {8, 10, 12})
        for (int i : {0, 1}) check_exact(SpaceSpec::hamming(4, n), n / 4, n / 2, i);
    for (int n : {8, 10, 12}) {
        for (int k : {2, 3}) {
            for (int i : {0, 1}) check_exact(SpaceSpec::johnson(n, n / 2), n / 4, k, i);
        }
    }
    for (int k : {2, 3, 4})
        for (int i : {0, 1}) check_exact(SpaceSpec::johnson(12, 4), 2, k, i);
    for (int i : {0, 1}) check_exact(SpaceSpec::hamming(2, 12), 3, 12 / 3, i);

    double worst_z = 0.0;
    struct McPoint {
        SpaceSpec s;
        int r, k, i;
        std::uint64_t seed;
    };
    std::vector<McPoint> mc = {
        {SpaceSpec::hamming(2, 200), 50, 60, 0, 311},
        {SpaceSpec::hamming(3, 200), 50, 80, 1, 312},
        {SpaceSpec::johnson(200, 100), 40, 30, 0, 313},
        {SpaceSpec::johnson(200, 100), 40, 30, 1, 314},
    };
    for (const auto& m : mc) {
        EllExpectation e = exact_ell_expectation(m.s, m.r, m.k, m.i);
        ShellSampleSpec spec;
        spec.space = m.s;
        spec.a = origin_point(m.s);
        spec.b = canonical_partner(m.s, m.k);
        spec.r = m.r;
        spec.i = m.i;
        spec.sample_count = 100'000;
        spec.seed = m.seed;
        EllStatistics st = ell_statistics(spec);
        double se = std::sqrt(st.variance / static_cast<double>(st.sample_count));
        double z = se > 0 ? std::fabs(st.mean - e.value) / se : 0.0;
        worst_z = std::max(worst_z, z);
    }
    std::ostringstream d;
    d << points << " exact points, " << wrong << " wrong; mc worst z " << worst_z;
    return {points == 50 && wrong == 0 && worst_z <= 3.0, d.str()};
}

// 4. Empirical drift tails at n = 200 stay under the claimed subgaussian
//    envelopes (400k Hamming, 8r Johnson, 72r permutation) at every histogram
//    threshold, 1e6 samples each. Budget: ten minutes for the trio.
Outcome criterion_subgaussian_tails() {
    auto t0 = std::chrono::steady_clock::now();
    struct Inst {
        SpaceSpec s;
        int r, k;
        double claimed;
        std::uint64_t seed;
    };
    std::vector<Inst> instances = {
        {SpaceSpec::hamming(3, 200), 100, 50, 400.0 * 50, 401},
        {SpaceSpec::johnson(200, 100), 40, 30, 8.0 * 40, 402},
        {SpaceSpec::permutation(200), 150, 60, 72.0 * 150, 403},
    };
    std::ostringstream d;
    bool ok = true;
    for (const auto& in : instances) {
        SampleBudget budget;
        budget.samples = 1'000'000;
        budget.seed = in.seed;
        SubgaussianReport rep = verify_subgaussian(in.s, in.r, in.k, 0, in.claimed, budget);
        bool here = rep.verdict == Verdict::pass;
        for (const auto& chk : rep.checks) here = here && chk.ok;
        ok = ok && here;
        d << in.s.kind_name() << " fitted " << rep.fitted_k << "/" << in.claimed
          << (here ? "; " : " EXCEEDED; ");
    }
    double secs = seconds_since(t0);
    d << secs << "s";
    return {ok && secs < 600.0, d.str()};
}

// 5. Chi-square uniformity of the shell sampler on every shell of size 2..1e4
//    across the three space families (the nine-point derangement shell of S_4
//    included), 1e6 samples per shell, p >= 1e-3.
Outcome criterion_sampler_uniformity() {
    std::vector<SpaceSpec> spaces = {
        SpaceSpec::hamming(2, 10),  SpaceSpec::hamming(3, 6), SpaceSpec::hamming(4, 5),
        SpaceSpec::johnson(10, 5),  SpaceSpec::johnson(12, 4), SpaceSpec::permutation(4),
        SpaceSpec::permutation(5),  SpaceSpec::permutation(6),
    };
    double min_p = 1.0;
    long shells = 0, failed = 0;
    std::uint64_t seed = 0x5ee1;
    for (const auto& s : spaces) {
        Point c = origin_point(s);
        for (int rho = 1; rho <= s.diameter(); ++rho) {
            BigCount size = shell_volume(s, rho);
            if (size < 2 || size > 10'000) continue;
            double p = shell_uniformity_pvalue(s, c, rho, 1'000'000, ++seed);
            ++shells;
            min_p = std::min(min_p, p);
            if (p < 1e-3) ++failed;
        }
    }
    std::ostringstream d;
    d << shells << " shells, min p " << min_p << ", " << failed << " below 1e-3";
    return {shells > 0 && failed == 0, d.str()};
}

// 6. Constructed codes clear the sphere-covering floor ceil(|X|/vol) on
//    binary Hamming n = 8..16 with r = n/4; the exact independence number of
//    the 16-word radius-1 instance is 8; and a permutation code at r = 2 is
//    re-verified pairwise at distance >= 3.
Outcome criterion_code_construction() {
    std::ostringstream d;
    bool ok = true;
    for (int n = 8; n <= 16; ++n) {
        int r = n / 4;
        SpaceSpec s = SpaceSpec::hamming(2, n);
        BallGraph g = build_ball_graph(s, r);
        CodeResult code = construct_code(g, CodeMethod::greedy_maximal);
        BigCount vol = ball_volume(s, r).volume;
        BigCount floor_size = (s.point_count() + vol - 1) / vol;
        bool here = code.verified_independent && BigCount(code.size) >= floor_size;
        ok = ok && here;
        if (n == 8 || n == 16 || !here)
            d << "n" << n << " size " << code.size << " floor " << floor_size.get_str()
              << (here ? "; " : " BELOW; ");
    }
    BallGraph q4 = build_ball_graph(SpaceSpec::hamming(2, 4), 1);
    CodeResult exact = construct_code(q4, CodeMethod::exact_branch_bound);
    ok = ok && exact.size == 8;
    d << "exact16 " << exact.size << "; ";

    SpaceSpec perm = SpaceSpec::permutation(5);
    BallGraph pg = build_ball_graph(perm, 2);
    CodeResult pcode = construct_code(pg, CodeMethod::greedy_maximal);
    bool pairwise = pcode.verified_independent && pcode.size >= 2;
    for (std::size_t i = 0; i < pcode.codewords.size() && pairwise; ++i) {
        Point pi = point_at_rank(perm, pcode.codewords[i]);
        for (std::size_t j = i + 1; j < pcode.codewords.size(); ++j) {
            Point pj = point_at_rank(perm, pcode.codewords[j]);
            if (distance(perm, pi, pj) < 3) {
                pairwise = false;
                break;
            }
        }
    }
    ok = ok && pairwise;
    d << "perm5 size " << pcode.size << (pairwise ? " pairwise>=3" : " TOO CLOSE");
    return {ok, d.str()};
}

// 7. Glauber occupancy agrees with the exact partition-function occupancy
//    within three sigma on every graph here with at most 20 vertices:
//    triangle, two paths, the 3-cube, and the 16-word radius-1 graph.
Outcome criterion_hardcore_agreement() {
    struct Case {
        std::string name;
        BallGraph g;
        double lambda;
        std::uint64_t seed;
    };
    auto path = [](int len) {
        std::vector<std::vector<std::uint32_t>> adj(len);
        for (int v = 0; v + 1 < len; ++v) {
            adj[v].push_back(v + 1);
            adj[v + 1].push_back(v);
        }
        return explicit_graph(std::move(adj));
    };
    BallGraph triangle = explicit_graph({{1, 2}, {0, 2}, {0, 1}});
    BallGraph q3 = build_ball_graph(SpaceSpec::hamming(2, 3), 1);
    BallGraph q4 = build_ball_graph(SpaceSpec::hamming(2, 4), 1);
    std::vector<Case> cases;
    cases.push_back({"triangle", triangle, 1.0, 701});
    cases.push_back({"path3", path(3), 1.0, 702});
    cases.push_back({"path5", path(5), 1.5, 703});
    cases.push_back({"cube", q3, 1.0, 704});
    cases.push_back({"cube", q3, 0.5, 705});
    cases.push_back({"hamming16", q4, 1.0, 706});
    cases.push_back({"hamming16", q4, std::log(4.0) / 4.0, 707});
    double worst_z = 0.0;
    std::string worst_name = "-";
    for (const auto& c : cases) {
        PartitionResult exact = count_independent_sets_exact(c.g, c.lambda);
        HardcoreEstimate est = hardcore_estimate(c.g, c.lambda, 400'000, c.seed);
        double z = est.std_error > 0
                       ? std::fabs(est.mean_occupancy - exact.occupancy) / est.std_error
                       : 0.0;
        if (z > worst_z) {
            worst_z = z;
            worst_name = c.name;
        }
    }
    std::ostringstream d;
    d << cases.size() << " chains, worst z " << worst_z << " (" << worst_name << ")";
    return {worst_z <= 3.0, d.str()};
}

// 8. Exact enumerated collision-event probabilities sit under the mu-power
//    bound as rationals at (q=2, n=4, p=1/2, L=2), and the mean witness count
//    over 1e3 random codes at (q=2, n=10, L=2, M=8) matches the closed-form
//    falling-factorial moment within three sigma.
Outcome criterion_witness_moments() {
    ExactRatio mu = compute_mu(2, 4, 0.5);
    std::ostringstream d;
    bool ok = true;
    for (int ell : {1, 2}) {
        ExactRatio p = event_probability_enumerated(2, 4, 0.5, 2, ell);
        ExactRatio bound = 1;
        for (int j = 0; j < 2 * 2 - ell + 1; ++j) bound *= mu;
        bool here = p <= bound;
        ok = ok && here;
        d << "P(E" << ell << ") " << p.get_str() << " <= mu^" << (4 - ell + 1)
          << (here ? "; " : " VIOLATED; ");
    }
    ListDecodeParams params = derive_list_params(2, 10, 0.3, 0.05, 1.0);
    params.L = 2;
    params.message_count = 8;
    WitnessStats w = witness_experiment(params, 1000, 801);
    bool moment_exact = w.expected_witnesses == ExactRatio(1694);
    double z = w.witness_std_error > 0
                   ? std::fabs(w.mean_witnesses - 1694.0) / w.witness_std_error
                   : 0.0;
    ok = ok && moment_exact && z <= 3.0;
    d << "E[W] 1694" << (moment_exact ? "" : " WRONG") << ", sampled "
      << w.mean_witnesses << ", z " << z;
    return {ok, d.str()};
}

// 9. Cap areas hit the n = 2,3 closed forms to 1e-10 relative, the large-n
//    asymptotic to 10% at n = 400, the two pi/3 constants to four decimals
//    against independent formulas, and the mean-overlap bound holds within
//    three sigma across the whole (n, theta) grid.
Outcome criterion_spherical_numerics() {
    const double pi = std::acos(-1.0);
    std::ostringstream d;
    bool ok = true;

    double worst_rel = 0.0;
    std::vector<double> thetas = {0.1, 0.3, 0.5, 0.7, 0.9, 1.1,
                                  1.3, 1.5, pi / 6, pi / 4, pi / 3};
    for (double t : thetas) {
        double s2 = cap_area({2, t});
        double s3 = cap_area({3, t});
        worst_rel = std::max(worst_rel, std::fabs(s2 - t / pi) / (t / pi));
        double exact3 = (1.0 - std::cos(t)) / 2.0;
        worst_rel = std::max(worst_rel, std::fabs(s3 - exact3) / exact3);
    }
    ok = ok && worst_rel <= 1e-10;
    d << "closed-form rel " << worst_rel << "; ";

    double worst_asym = 0.0;
    for (double t : {pi / 6, pi / 4, pi / 3}) {
        double s = cap_area({400, t});
        double asym = std::pow(std::sin(t), 399) /
                      (std::sqrt(2.0 * pi * 400.0) * std::cos(t));
        worst_asym = std::max(worst_asym, std::fabs(s / asym - 1.0));
    }
    ok = ok && worst_asym <= 0.10;
    d << "asym dev " << worst_asym << "; ";

    SphericalBounds b = spherical_constants(pi / 3);
    double q_ind = std::asin(std::sqrt(2.0 / 3.0));
    double c_ind = std::log(std::sin(pi / 3) / std::sin(q_ind));
    double g_ind = std::log(std::sqrt(2.0) * std::cos(pi / 6));
    bool consts = std::fabs(b.q_theta - q_ind) <= 1e-12 &&
                  std::fabs(b.c_theta - c_ind) <= 1e-12 &&
                  std::fabs(b.gklp_constant - g_ind) <= 1e-12 &&
                  std::fabs(b.c_theta - 0.0589) <= 5e-5 &&
                  std::fabs(b.gklp_constant - 0.2027) <= 5e-5;
    ok = ok && consts;
    d << "c " << b.c_theta << " gklp " << b.gklp_constant << (consts ? "; " : " OFF; ");

    std::uint64_t seed = 901;
    int grid_fail = 0;
    for (int n : {10, 20, 40})
        for (double t : {pi / 6, pi / 4, pi / 3}) {
            CapIntersectionReport rep = verify_cap_intersection(n, t, 40'000, seed++);
            if (rep.verdict != Verdict::pass) ++grid_fail;
        }
    ok = ok && grid_fail == 0;
    d << "grid fails " << grid_fail << "/9";
    return {ok, d.str()};
}

struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "closed-form intersections match enumeration", criterion_intersection_oracle},
    {2, "intersection ratios decay log-linearly at n=300", criterion_decay_slopes},
    {3, "drift expectations: closed form = enumeration = MC", criterion_dispersal_exactness},
    {4, "drift tails stay under subgaussian envelopes", criterion_subgaussian_tails},
    {5, "shell sampler is chi-square uniform", criterion_sampler_uniformity},
    {6, "codes beat the sphere-covering floor", criterion_code_construction},
    {7, "Glauber matches exact hard-core occupancy", criterion_hardcore_agreement},
    {8, "witness moments and collision-event bounds", criterion_witness_moments},
    {9, "spherical caps: areas, constants, overlap bound", criterion_spherical_numerics},
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        try {
            selected.push_back(std::stoi(argv[i]));
        } catch (const std::exception&) {
            std::fprintf(stderr, "usage: %s [criterion numbers 1..9]\n", argv[0]);
            return 2;
        }
    }
    if (selected.empty())
        for (const auto& c : kCriteria) selected.push_back(c.id);

    int failures = 0;
    for (int id : selected) {
        const Criterion* crit = nullptr;
        for (const auto& c : kCriteria)
            if (c.id == id) crit = &c;
        if (!crit) {
            std::fprintf(stderr, "no criterion %d\n", id);
            return 2;
        }
        Outcome out;
        try {
            out = crit->run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d %s (%s)\n", out.pass ? "PASS" : "FAIL", crit->id, crit->name,
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
