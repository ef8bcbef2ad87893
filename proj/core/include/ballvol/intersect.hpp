#pragma once

#include "ballvol/space.hpp"

namespace ballvol {

// |B(a,r) ∩ B(b,r)| in {0..q-1}^n for any centers at Hamming distance k,
// by the closed-form double sum over the split of b's disagreement block.
BigCount hamming_intersection_volume(int q, int n, int r, int k);

// Same quantity on the weight-w slice with Johnson distance; counts points
// by their overlap with the four coordinate blocks induced by the centers.
// Validated against brute force (see tests) before being relied on.
BigCount johnson_intersection_volume(int n, int w, int r, int k);

// Full-enumeration oracle: counts points within distance r of both centers.
// Walks the shells around a, so cost is vol(r), but the documented cap is on
// the whole space size.
BigCount intersection_volume_bruteforce(const SpaceSpec& s, const Point& a, const Point& b,
                                        int r, std::uint64_t enum_cap = 10'000'000);

// Exact intersection volume at the canonical center pair for distance k.
// Hamming and Johnson use the closed forms; permutations fall back to
// enumeration under the cap.
BigCount intersection_volume(const SpaceSpec& s, int r, int k,
                             std::uint64_t enum_cap = 10'000'000);

}  // namespace ballvol
