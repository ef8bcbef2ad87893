#include "ballvol/intersect.hpp"

namespace ballvol {

BigCount hamming_intersection_volume(int q, int n, int r, int k) {
    if (q < 2) throw std::invalid_argument("hamming_intersection_volume: q must be >= 2");
    if (r < 0 || r > n || k < 0 || k > n)
        throw std::invalid_argument("hamming_intersection_volume: parameter out of range");

    // prefix[t+1] = sum_{s<=t} C(n-k,s)(q-1)^s over the n-k coordinates where
    // the centers agree
    int m = n - k;
    std::vector<BigCount> prefix(m + 2);
    prefix[0] = 0;
    BigCount pw = 1;
    for (int s = 0; s <= m; ++s) {
        prefix[s + 1] = prefix[s] + binomial(m, s) * pw;
        pw *= q - 1;
    }

    // Split the k disagreeing coordinates into i positions matching a, j
    // matching b, and k-i-j matching neither (q-2 choices each).
    BigCount total = 0;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j + i <= k; ++j) {
            int rest = k - i - j;
            if (q == 2 && rest > 0) continue;  // no third symbol exists
            int tm = std::min({m, r - k + i, r - k + j});
            if (tm < 0) continue;
            BigCount coef = binomial(k, i) * binomial(k - i, j);
            if (rest > 0) {
                BigCount p;
                mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q - 2),
                              static_cast<unsigned long>(rest));
                coef *= p;
            }
            total += coef * prefix[tm + 1];
        }
    }
    return total;
}

BigCount johnson_intersection_volume(int n, int w, int r, int k) {
    SpaceSpec s = SpaceSpec::johnson(n, w);
    if (r < 0 || r > s.diameter())
        throw std::invalid_argument("johnson_intersection_volume: radius out of range");
    if (k < 0 || k > s.diameter())
        throw std::invalid_argument("johnson_intersection_volume: distance out of range");

    // Blocks: a∩b (w-k), a\b (k), b\a (k), outside both (n-w-k). A point at
    // Johnson distance <= r from a needs |y∩a| >= w-r, and likewise for b.
    int common = w - k, rest = n - w - k;
    BigCount total = 0;
    for (int s1 = 0; s1 <= common; ++s1) {
        for (int s2 = 0; s2 <= k; ++s2) {
            if (s1 + s2 < w - r) continue;
            for (int s3 = 0; s3 <= k; ++s3) {
                if (s1 + s3 < w - r) continue;
                int s4 = w - s1 - s2 - s3;
                if (s4 < 0 || s4 > rest) continue;
                total += binomial(common, s1) * binomial(k, s2) * binomial(k, s3) *
                         binomial(rest, s4);
            }
        }
    }
    return total;
}

BigCount intersection_volume_bruteforce(const SpaceSpec& s, const Point& a, const Point& b,
                                        int r, std::uint64_t enum_cap) {
    check_point(s, a);
    check_point(s, b);
    if (r < 0 || r > s.diameter())
        throw std::invalid_argument("intersection_volume_bruteforce: radius out of range");
    checked_point_count(s, enum_cap);
    BigCount count = 0;
    for (int rho = 0; rho <= r; ++rho) {
        for_each_shell_point(s, a, rho, [&](const Point& x) {
            if (distance(s, x, b) <= r) ++count;
        });
    }
    return count;
}

BigCount intersection_volume(const SpaceSpec& s, int r, int k, std::uint64_t enum_cap) {
    switch (s.kind) {
        case SpaceKind::hamming:
            return hamming_intersection_volume(s.q, s.n, r, k);
        case SpaceKind::johnson:
            return johnson_intersection_volume(s.n, s.w, r, k);
        default:
            return intersection_volume_bruteforce(s, origin_point(s), canonical_partner(s, k),
                                                  r, enum_cap);
    }
}

}  // namespace ballvol
