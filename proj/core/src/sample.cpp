#include "ballvol/sample.hpp"

#include <cmath>
#include <thread>
#include <unordered_map>

namespace ballvol {

void ShellSampleSpec::validate() const {
    space.validate();
    check_point(space, a);
    check_point(space, b);
    if (a == b) throw std::invalid_argument("shell sample: centers must differ");
    if (i < 0 || i > r) throw std::invalid_argument("shell sample: need 0 <= i <= r");
    if (sample_count < 1) throw std::invalid_argument("shell sample: need sample_count >= 1");
    int rho = r - i;
    if (rho > space.diameter() || shell_volume(space, rho) == 0)
        throw std::invalid_argument("shell sample: empty shell at radius " + std::to_string(rho));
}

namespace {

// Random rho-subset of {0..n-1} by partial Fisher-Yates; unsorted.
std::vector<int> random_subset(int n, int rho, SplitMix64& g) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    for (int j = 0; j < rho; ++j) {
        int pick = j + static_cast<int>(g.next_below(static_cast<std::uint64_t>(n - j)));
        std::swap(idx[j], idx[pick]);
    }
    idx.resize(rho);
    return idx;
}

}  // namespace

Point sample_shell_point(const SpaceSpec& s, const Point& center, int rho, SplitMix64& g,
                         std::uint64_t* attempts) {
    if (rho == 0) return center;
    switch (s.kind) {
        case SpaceKind::hamming: {
            Point x = center;
            std::vector<int> support = random_subset(s.n, rho, g);
            for (int pos : support) {
                int off = 1 + static_cast<int>(g.next_below(static_cast<std::uint64_t>(s.q - 1)));
                x[pos] = (center[pos] + off) % s.q;
            }
            return x;
        }
        case SpaceKind::johnson: {
            if (rho > std::min(s.w, s.n - s.w))
                throw std::invalid_argument("sample_shell_point: empty shell");
            std::vector<int> drop = random_subset(s.w, rho, g);
            std::vector<int> outside = complement_sorted(center, s.n);
            std::vector<int> add = random_subset(s.n - s.w, rho, g);
            std::vector<char> dropped(s.w, 0);
            for (int d : drop) dropped[d] = 1;
            Point x;
            x.reserve(s.w);
            for (int j = 0; j < s.w; ++j)
                if (!dropped[j]) x.push_back(center[j]);
            for (int a : add) x.push_back(outside[a]);
            std::sort(x.begin(), x.end());
            return x;
        }
        case SpaceKind::permutation: {
            if (rho == 1)
                throw std::invalid_argument(
                    "sample_shell_point: no permutation lies at distance 1");
            std::vector<int> supp = random_subset(s.n, rho, g);
            std::vector<int> vals(rho);
            for (;;) {
                if (attempts) ++*attempts;
                // uniform permutation of the support values
                for (int j = 0; j < rho; ++j) vals[j] = supp[j];
                for (int j = rho - 1; j > 0; --j) {
                    int pick = static_cast<int>(g.next_below(static_cast<std::uint64_t>(j + 1)));
                    std::swap(vals[j], vals[pick]);
                }
                bool deranged = true;
                for (int j = 0; j < rho; ++j)
                    if (vals[j] == supp[j]) {
                        deranged = false;
                        break;
                    }
                if (deranged) break;
            }
            Point x = center;
            for (int j = 0; j < rho; ++j) x[supp[j]] = center[vals[j]];
            return x;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

// ell histogram over one index range, bucket v = ell + 2k
void ell_histogram_range(const ShellSampleSpec& spec, int k, long begin, long end,
                         std::vector<long>& hist) {
    int rho = spec.shell_radius();
    for (long idx = begin; idx < end; ++idx) {
        SplitMix64 g = SplitMix64::derive(spec.seed, static_cast<std::uint64_t>(idx));
        Point x = sample_shell_point(spec.space, spec.a, rho, g);
        int ell = distance(spec.space, x, spec.b) - rho;
        hist[static_cast<size_t>(ell + 2 * k)] += 1;
    }
}

}  // namespace

EllStatistics ell_statistics(const ShellSampleSpec& spec, int jobs) {
    spec.validate();
    int k = distance(spec.space, spec.a, spec.b);
    std::vector<long> hist(static_cast<size_t>(4 * k + 1), 0);
    long n = spec.sample_count;

    if (jobs <= 1) {
        ell_histogram_range(spec, k, 0, n, hist);
    } else {
        long shards = std::min<long>(jobs, n);
        std::vector<std::vector<long>> parts(static_cast<size_t>(shards), hist);
        std::vector<std::thread> threads;
        for (long t = 0; t < shards; ++t) {
            long begin = n * t / shards, end = n * (t + 1) / shards;
            threads.emplace_back([&, t, begin, end] {
                ell_histogram_range(spec, k, begin, end, parts[static_cast<size_t>(t)]);
            });
        }
        for (auto& th : threads) th.join();
        for (auto& part : parts)
            for (size_t v = 0; v < hist.size(); ++v) hist[v] += part[v];
    }

    EllStatistics st;
    st.sample_count = n;
    st.seed = spec.seed;
    st.min = 2 * k;
    st.max = -2 * k;
    double sum = 0.0;
    for (size_t v = 0; v < hist.size(); ++v) {
        if (!hist[v]) continue;
        int ell = static_cast<int>(v) - 2 * k;
        st.min = std::min(st.min, ell);
        st.max = std::max(st.max, ell);
        sum += static_cast<double>(hist[v]) * ell;
    }
    st.mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (size_t v = 0; v < hist.size(); ++v) {
        if (!hist[v]) continue;
        double d = (static_cast<int>(v) - 2 * k) - st.mean;
        ss += static_cast<double>(hist[v]) * d * d;
    }
    st.variance = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
    for (int t = 1; t <= 2 * k; t *= 2) {
        long count = 0;
        for (size_t v = 0; v < hist.size(); ++v) {
            if (!hist[v]) continue;
            if (std::abs((static_cast<int>(v) - 2 * k) - st.mean) >= static_cast<double>(t))
                count += hist[v];
        }
        st.tail_histogram.emplace_back(t, count);
    }
    return st;
}

EllExpectation exact_ell_expectation(const SpaceSpec& s, int r, int k, int i) {
    s.validate();
    if (i < 0 || i > r) throw std::invalid_argument("exact_ell_expectation: need 0 <= i <= r");
    int rho = r - i;
    if (rho > s.diameter())
        throw std::invalid_argument("exact_ell_expectation: shell radius out of range");
    EllExpectation e;
    switch (s.kind) {
        case SpaceKind::hamming: {
            // E ell = k(gamma - delta), delta = rho/n, (q-1)gamma + delta = q-1
            e.exact = make_ratio(BigCount(k) * (BigCount(s.n) * (s.q - 1) - BigCount(rho) * s.q),
                                 BigCount(s.n) * (s.q - 1));
            e.formula = "k(gamma-delta), delta=rho/n, gamma=1-delta/(q-1)";
            break;
        }
        case SpaceKind::johnson: {
            if (rho > std::min(s.w, s.n - s.w))
                throw std::invalid_argument("exact_ell_expectation: empty shell");
            // E ell = k((w-rho)/w - rho/(n-w)) by linearity over b's symmetric
            // difference with a
            e.exact = make_ratio(
                BigCount(k) * (BigCount(s.w - rho) * (s.n - s.w) - BigCount(rho) * s.w),
                BigCount(s.w) * (s.n - s.w));
            e.formula = "k((w-rho)/w - rho/(n-w))";
            break;
        }
        case SpaceKind::permutation: {
            if (r >= s.n)
                throw std::invalid_argument("exact_ell_expectation: need r < n for the bound");
            // certificate (1-r/n)k/2; the derivation loses an additive 3,
            // so it needs (1-r/n)k >= 6
            if (BigCount(k) * (s.n - r) < BigCount(6) * s.n)
                throw std::invalid_argument(
                    "exact_ell_expectation: k too small for the permutation bound (need "
                    "k(n-r)/n >= 6)");
            e.exact = make_ratio(BigCount(k) * (s.n - r), BigCount(2) * s.n);
            e.lower_bound_only = true;
            e.formula = "(1-r/n)k/2 lower bound";
            break;
        }
    }
    e.value = e.exact.get_d();
    return e;
}

ExactRatio enumerated_ell_mean(const SpaceSpec& s, const Point& a, const Point& b, int rho,
                               std::uint64_t enum_cap) {
    BigCount size = shell_volume(s, rho);
    if (size == 0) throw std::invalid_argument("enumerated_ell_mean: empty shell");
    if (size > BigCount(static_cast<unsigned long>(enum_cap)))
        throw BudgetExceeded("shell too large to enumerate: " + size.get_str());
    BigCount total = 0;
    for_each_shell_point(s, a, rho, [&](const Point& x) {
        total += distance(s, x, b) - rho;
    });
    return make_ratio(total, size);
}

BigCount uniform_big_below(const BigCount& bound, SplitMix64& g) {
    if (bound <= 0) throw std::invalid_argument("uniform_big_below: bound must be positive");
    size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
    size_t words = (bits + 63) / 64;
    // keeping only `bits` low bits caps the rejection rate at 1/2
    BigCount mask = (BigCount(1) << bits) - 1;
    for (;;) {
        BigCount x = 0;
        for (size_t wd = 0; wd < words; ++wd) {
            x <<= 64;
            x |= BigCount(static_cast<unsigned long>(g.next()));
        }
        x &= mask;
        if (x < bound) return x;
    }
}

IntersectionEstimate estimate_intersection(const SpaceSpec& s, const Point& a, const Point& b,
                                           int r, long samples, std::uint64_t seed) {
    check_point(s, a);
    check_point(s, b);
    if (r < 0 || r > s.diameter())
        throw std::invalid_argument("estimate_intersection: radius out of range");
    if (samples < 1) throw std::invalid_argument("estimate_intersection: need samples >= 1");

    VolumeProfile vp = ball_volume(s, r);
    std::vector<BigCount> prefix(static_cast<size_t>(r + 1));
    BigCount acc = 0;
    for (int rho = 0; rho <= r; ++rho) {
        acc += vp.shell_volumes[static_cast<size_t>(rho)];
        prefix[static_cast<size_t>(rho)] = acc;
    }

    long hits = 0;
    for (long idx = 0; idx < samples; ++idx) {
        SplitMix64 g = SplitMix64::derive(seed, static_cast<std::uint64_t>(idx));
        BigCount u = uniform_big_below(vp.volume, g);
        int rho = 0;
        while (u >= prefix[static_cast<size_t>(rho)]) ++rho;
        Point x = sample_shell_point(s, a, rho, g);
        hits += distance(s, x, b) <= r;
    }

    IntersectionEstimate est;
    est.ball_volume = vp.volume;
    est.samples = samples;
    est.seed = seed;
    est.fraction = static_cast<double>(hits) / static_cast<double>(samples);
    est.fraction_stderr = frequency_stderr(est.fraction, samples);
    double vol_d = vp.volume.get_d();
    est.volume_estimate = est.fraction * vol_d;
    est.volume_stderr = est.fraction_stderr * vol_d;
    return est;
}

double shell_uniformity_pvalue(const SpaceSpec& s, const Point& center, int rho, long samples,
                               std::uint64_t seed, std::uint64_t shell_cap) {
    BigCount size = shell_volume(s, rho);
    if (size == 0) throw std::invalid_argument("shell_uniformity_pvalue: empty shell");
    if (size > BigCount(static_cast<unsigned long>(shell_cap)))
        throw BudgetExceeded("shell too large to enumerate: " + size.get_str());

    std::unordered_map<std::uint64_t, long> counts;
    counts.reserve(static_cast<size_t>(size.get_ui()) * 2);
    for_each_shell_point(s, center, rho, [&](const Point& x) {
        counts.emplace(point_rank(s, x), 0);
    });
    for (long idx = 0; idx < samples; ++idx) {
        SplitMix64 g = SplitMix64::derive(seed, static_cast<std::uint64_t>(idx));
        Point x = sample_shell_point(s, center, rho, g);
        auto it = counts.find(point_rank(s, x));
        if (it == counts.end()) throw std::logic_error("sampled point not on the shell");
        it->second += 1;
    }
    double cells = static_cast<double>(counts.size());
    double expect = static_cast<double>(samples) / cells;
    double stat = 0.0;
    for (auto& [rank, c] : counts) {
        double d = static_cast<double>(c) - expect;
        stat += d * d / expect;
    }
    return chi_square_p_value(stat, static_cast<long>(counts.size()) - 1);
}

}  // namespace ballvol
