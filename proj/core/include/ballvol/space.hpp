#pragma once

#include "ballvol/comb.hpp"
#include "ballvol/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <string>
#include <vector>

namespace ballvol {

enum class SpaceKind { hamming, johnson, permutation };

// A point is a vector<int> whose meaning depends on the space: a word of n
// symbols in {0..q-1}, a sorted list of w distinct indices in {0..n-1}, or a
// permutation of {0..n-1} stored as an image array.
using Point = std::vector<int>;

struct SpaceSpec {
    SpaceKind kind = SpaceKind::hamming;
    int q = 2;
    int n = 0;
    int w = 0;

    static SpaceSpec hamming(int q, int n);
    static SpaceSpec johnson(int n, int w);
    static SpaceSpec permutation(int n);

    void validate() const;
    BigCount point_count() const;
    // Largest distance the metric attains.
    int diameter() const;
    const char* kind_name() const;

    bool operator==(const SpaceSpec&) const = default;
};

void check_point(const SpaceSpec& s, const Point& p);
int distance(const SpaceSpec& s, const Point& x, const Point& y);

struct VolumeProfile {
    SpaceSpec space;
    int radius = 0;
    BigCount volume;
    std::vector<BigCount> shell_volumes;  // indexed 0..radius
};

// Exact ball volume with per-shell counts; center-independent.
VolumeProfile ball_volume(const SpaceSpec& s, int r);
BigCount shell_volume(const SpaceSpec& s, int rho);

// Canonical center a: all-zero word / first w indices / identity.
Point origin_point(const SpaceSpec& s);
// Canonical partner b at distance k from the origin: 1^k 0^{n-k} for words;
// drop the last k indices and add the first k outside ones for subsets; the
// k-cycle on the first k elements for permutations (k = 0 or k >= 2).
Point canonical_partner(const SpaceSpec& s, int k);

std::uint64_t point_rank(const SpaceSpec& s, const Point& p);
Point point_at_rank(const SpaceSpec& s, std::uint64_t rank);
// Point count clamped for array indexing; throws BudgetExceeded above cap.
std::uint64_t checked_point_count(const SpaceSpec& s, std::uint64_t cap);

std::string format_point(const SpaceSpec& s, const Point& p);
Point parse_point(const SpaceSpec& s, const std::string& text);

// Sorted complement of a sorted index subset within {0..n-1}.
std::vector<int> complement_sorted(const std::vector<int>& subset, int n);

// Lexicographic enumeration of sorted w-subsets of {0..n-1}.
template <class F>
void for_each_combination(int n, int w, F&& f) {
    if (w < 0 || w > n) return;
    std::vector<int> c(w);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        f(std::as_const(c));
        int i = w - 1;
        while (i >= 0 && c[i] == n - w + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < w; ++j) c[j] = c[j - 1] + 1;
    }
}

// All points of the space in lexicographic order.
template <class F>
void for_each_point(const SpaceSpec& s, F&& f) {
    s.validate();
    switch (s.kind) {
        case SpaceKind::hamming: {
            Point p(s.n, 0);
            for (;;) {
                f(std::as_const(p));
                int i = s.n - 1;
                while (i >= 0 && p[i] == s.q - 1) p[i--] = 0;
                if (i < 0) return;
                ++p[i];
            }
        }
        case SpaceKind::johnson:
            for_each_combination(s.n, s.w, f);
            return;
        case SpaceKind::permutation: {
            Point p(s.n);
            std::iota(p.begin(), p.end(), 0);
            do {
                f(std::as_const(p));
            } while (std::next_permutation(p.begin(), p.end()));
            return;
        }
    }
}

// Every point at distance exactly rho from center, each exactly once.
template <class F>
void for_each_shell_point(const SpaceSpec& s, const Point& center, int rho, F&& f) {
    check_point(s, center);
    if (rho < 0 || rho > s.diameter())
        throw std::invalid_argument("for_each_shell_point: radius out of range");
    if (rho == 0) {
        f(center);
        return;
    }
    switch (s.kind) {
        case SpaceKind::hamming: {
            Point p = center;
            for_each_combination(s.n, rho, [&](const std::vector<int>& support) {
                std::vector<int> off(rho, 1);  // symbol offsets, each in 1..q-1
                for (;;) {
                    for (int j = 0; j < rho; ++j)
                        p[support[j]] = (center[support[j]] + off[j]) % s.q;
                    f(std::as_const(p));
                    int i = rho - 1;
                    while (i >= 0 && off[i] == s.q - 1) off[i--] = 1;
                    if (i < 0) break;
                    ++off[i];
                }
                for (int j = 0; j < rho; ++j) p[support[j]] = center[support[j]];
            });
            return;
        }
        case SpaceKind::johnson: {
            if (rho > std::min(s.w, s.n - s.w)) return;  // empty shell
            std::vector<int> outside = complement_sorted(center, s.n);
            for_each_combination(s.w, rho, [&](const std::vector<int>& drop) {
                for_each_combination(s.n - s.w, rho, [&](const std::vector<int>& add) {
                    Point p;
                    p.reserve(s.w);
                    int di = 0;
                    for (int j = 0; j < s.w; ++j) {
                        if (di < rho && drop[di] == j) {
                            ++di;
                            continue;
                        }
                        p.push_back(center[j]);
                    }
                    for (int j = 0; j < rho; ++j) p.push_back(outside[add[j]]);
                    std::sort(p.begin(), p.end());
                    f(std::as_const(p));
                });
            });
            return;
        }
        case SpaceKind::permutation: {
            // x = center∘pi with pi deranged on a rho-element support
            for_each_combination(s.n, rho, [&](const std::vector<int>& supp) {
                std::vector<int> vals = supp;
                do {
                    bool deranged = true;
                    for (int j = 0; j < rho; ++j)
                        if (vals[j] == supp[j]) {
                            deranged = false;
                            break;
                        }
                    if (!deranged) continue;
                    Point p = center;
                    for (int j = 0; j < rho; ++j) p[supp[j]] = center[vals[j]];
                    f(std::as_const(p));
                } while (std::next_permutation(vals.begin(), vals.end()));
            });
            return;
        }
    }
}

}  // namespace ballvol
