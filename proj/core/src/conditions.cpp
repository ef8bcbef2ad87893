#include "ballvol/conditions.hpp"

#include "ballvol/intersect.hpp"

#include <cmath>

namespace ballvol {

GrowthReport verify_growth(const SpaceSpec& s, int r, int t_max, double rate_floor) {
    s.validate();
    if (r < 1 || r > s.diameter()) throw std::invalid_argument("verify_growth: need 0 < r <= diameter");
    if (t_max < 1 || t_max >= r) throw std::invalid_argument("verify_growth: need 1 <= t_max < r");

    GrowthReport rep;
    rep.space = s;
    rep.r = r;
    rep.rate_floor = rate_floor;

    VolumeProfile vp = ball_volume(s, r);
    std::vector<BigCount> cum(static_cast<size_t>(r + 1));
    BigCount acc = 0;
    for (int d = 0; d <= r; ++d) {
        acc += vp.shell_volumes[static_cast<size_t>(d)];
        cum[static_cast<size_t>(d)] = acc;
    }

    const BigCount& top_shell = vp.shell_volumes[static_cast<size_t>(r)];
    double c = std::numeric_limits<double>::infinity();
    for (int t = 1; t <= t_max; ++t) {
        const BigCount& low_shell = vp.shell_volumes[static_cast<size_t>(r - t)];
        if (top_shell == 0 || low_shell == 0) continue;  // permutation shell 1
        double rate = log_exact(make_ratio(top_shell, low_shell)) / t;
        c = std::min(c, rate);
    }
    if (!std::isfinite(c)) {
        rep.fitted_rate = 0.0;
        rep.verdict = Verdict::fail;
        rep.note = "no nonempty shell pair to fit a rate";
        return rep;
    }
    rep.fitted_rate = std::max(c, 0.0);

    bool any_above = false, any_indet = false;
    for (int t = 1; t <= t_max; ++t) {
        GrowthPoint pt;
        pt.t = t;
        pt.ratio = make_ratio(cum[static_cast<size_t>(r - t)], cum[static_cast<size_t>(r)]);
        pt.check = compare_to_exp_bound(pt.ratio, 2.0, -rep.fitted_rate * t);
        any_above |= pt.check == BoundCheck::above;
        any_indet |= pt.check == BoundCheck::indeterminate;
        rep.rate_points.push_back(std::move(pt));
    }

    if (any_above) {
        rep.verdict = Verdict::fail;
        rep.note = "a volume ratio exceeds 2e^{-ct}";
    } else if (rep.fitted_rate < rate_floor) {
        rep.verdict = Verdict::fail;
        rep.note = "fitted rate below the floor (growth hypothesis not met)";
    } else if (any_indet) {
        rep.verdict = Verdict::indeterminate;
        rep.note = "interval comparison could not separate a ratio from its bound";
    } else {
        rep.verdict = Verdict::pass;
    }
    return rep;
}

double default_alpha(const SpaceSpec& s, int r) {
    s.validate();
    double n = s.n;
    switch (s.kind) {
        case SpaceKind::hamming:
            return 0.5 * (1.0 - (r / n) * s.q / (s.q - 1.0));
        case SpaceKind::johnson: {
            double lam = s.w / n;
            return 0.5 * (lam * (1.0 - lam) - r / n);
        }
        default:
            return 0.25 * (1.0 - r / n);
    }
}

DispersalReport verify_dispersal(const SpaceSpec& s, int r, int k, double alpha,
                                 MeasureMode mode, const SampleBudget& budget) {
    s.validate();
    if (r < 0 || r > s.diameter())
        throw std::invalid_argument("verify_dispersal: radius out of range");
    if (k < 1 || k > s.diameter())
        throw std::invalid_argument("verify_dispersal: distance out of range");

    DispersalReport rep;
    rep.space = s;
    rep.r = r;
    rep.k = k;
    rep.alpha = alpha;

    Point a = origin_point(s);
    Point b = canonical_partner(s, k);  // rejects unreachable k (permutation k=1)
    double target = 2.0 * alpha * k;
    int i_max = std::max(0, std::min(r, static_cast<int>(std::floor(alpha * k))));

    Verdict worst = Verdict::pass;
    for (int i = 0; i <= i_max; ++i) {
        OffsetMean om;
        om.i = i;
        if (mode == MeasureMode::exact) {
            om.kind = MeasureMode::exact;
            if (s.kind == SpaceKind::permutation)
                om.mean = enumerated_ell_mean(s, a, b, r - i, budget.enum_cap).get_d();
            else
                om.mean = exact_ell_expectation(s, r, k, i).value;
            if (om.mean < target) worst = Verdict::fail;
        } else {
            om.kind = MeasureMode::monte_carlo;
            ShellSampleSpec spec{s, a, b, r, i, budget.samples,
                                 SplitMix64::mix(budget.seed + static_cast<std::uint64_t>(i))};
            EllStatistics st = ell_statistics(spec, budget.jobs);
            om.mean = st.mean;
            om.stderr_ = std::sqrt(st.variance / static_cast<double>(st.sample_count));
            if (om.mean < target) {
                if (om.mean + 3.0 * om.stderr_ >= target) {
                    if (worst == Verdict::pass) worst = Verdict::indeterminate;
                } else {
                    worst = Verdict::fail;
                }
            }
        }
        rep.per_offset_means.push_back(om);
    }
    rep.verdict = worst;
    return rep;
}

SubgaussianReport verify_subgaussian(const SpaceSpec& s, int r, int k, int i, double claimed_k,
                                     const SampleBudget& budget) {
    if (claimed_k <= 0) throw std::invalid_argument("verify_subgaussian: claimed K must be positive");
    if (budget.samples < 10'000)
        throw std::invalid_argument("verify_subgaussian: need at least 10^4 samples");

    SubgaussianReport rep;
    rep.space = s;
    rep.r = r;
    rep.k = k;
    rep.i = i;
    rep.claimed_k = claimed_k;

    ShellSampleSpec spec{s, origin_point(s), canonical_partner(s, k), r, i, budget.samples,
                         budget.seed};
    rep.empirical_tail = ell_statistics(spec, budget.jobs);

    bool all_ok = true;
    rep.fitted_k = 0.0;
    double n = static_cast<double>(rep.empirical_tail.sample_count);
    for (auto& [t, count] : rep.empirical_tail.tail_histogram) {
        ThresholdCheck chk;
        chk.t = t;
        chk.frequency = static_cast<double>(count) / n;
        chk.bound = 2.0 * std::exp(-static_cast<double>(t) * t / claimed_k);
        chk.stderr_ = frequency_stderr(chk.frequency, rep.empirical_tail.sample_count);
        chk.ok = chk.frequency <= chk.bound + 3.0 * chk.stderr_;
        all_ok &= chk.ok;
        if (count > 0)
            rep.fitted_k = std::max(rep.fitted_k,
                                    static_cast<double>(t) * t / std::log(2.0 / chk.frequency));
        rep.checks.push_back(chk);
    }
    rep.verdict = all_ok ? Verdict::pass : Verdict::fail;
    return rep;
}

DecayReport decay_profile(const SpaceSpec& s, int r, const std::vector<int>& k_values,
                          MeasureMode mode, const SampleBudget& budget) {
    s.validate();
    if (r < 0 || r > s.diameter()) throw std::invalid_argument("decay_profile: radius out of range");

    DecayReport rep;
    rep.space = s;
    rep.r = r;

    BigCount vol = ball_volume(s, r).volume;
    std::vector<std::pair<double, double>> fit_points;
    for (int k : k_values) {
        DecayPoint pt;
        pt.k = k;
        if (mode == MeasureMode::exact) {
            BigCount inter = intersection_volume(s, r, k, budget.enum_cap);
            if (inter == 0) {
                pt.excluded = true;
                rep.note = "zero-intersection points excluded from the fit";
            } else {
                ExactRatio ratio = make_ratio(inter, vol);
                pt.ratio = ratio.get_d();
                pt.log_ratio = log_exact(ratio);
            }
        } else {
            IntersectionEstimate est =
                estimate_intersection(s, origin_point(s), canonical_partner(s, k), r,
                                      budget.samples,
                                      SplitMix64::mix(budget.seed + static_cast<std::uint64_t>(k)));
            if (est.fraction == 0.0) {
                pt.excluded = true;
                rep.note = "zero-hit Monte Carlo points excluded from the fit";
            } else {
                pt.ratio = est.fraction;
                pt.log_ratio = std::log(est.fraction);
            }
        }
        if (!pt.excluded) fit_points.emplace_back(static_cast<double>(k), pt.log_ratio);
        rep.points.push_back(pt);
    }

    LinearFit fit = linear_fit(fit_points);
    rep.fitted_slope = fit.slope;
    rep.r_squared = fit.r_squared;
    rep.fitted_points = fit.points;
    return rep;
}

bool decay_pass(const DecayReport& rep) {
    return rep.fitted_points >= 2 && rep.fitted_slope < 0.0 && rep.r_squared >= 0.9;
}

}  // namespace ballvol
