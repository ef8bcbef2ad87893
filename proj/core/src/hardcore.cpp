#include "ballvol/hardcore.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "ballvol/exact.hpp"
#include "ballvol/stats.hpp"

namespace ballvol {

namespace {

// P and dP/dlambda for the induced subgraph on `mask`, memoized. Both are
// sums of positive terms (the empty set contributes 1), so P >= 1 always and
// dividing by component values is safe.
struct PartitionSolver {
    std::vector<std::uint64_t> nbr;  // open neighborhoods as masks
    double lambda = 1.0;
    std::unordered_map<std::uint64_t, std::pair<double, double>> memo;

    std::pair<double, double> eval(std::uint64_t mask) {
        if (mask == 0) return {1.0, 0.0};
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;

        // peel off the component containing the lowest vertex
        std::uint64_t comp = 0, frontier = mask & (~mask + 1);
        while (frontier) {
            comp |= frontier;
            std::uint64_t grow = 0;
            for (std::uint64_t m = frontier; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                grow |= nbr[static_cast<std::size_t>(v)];
            }
            frontier = grow & mask & ~comp;
        }

        std::pair<double, double> out;
        if (comp != mask) {
            auto [pa, da] = eval(comp);
            auto [pb, db] = eval(mask & ~comp);
            out = {pa * pb, da * pb + pa * db};
        } else {
            // branch on a max-degree vertex: P = P(G-v) + lambda * P(G-N[v])
            int v = -1, vd = -1;
            for (std::uint64_t m = mask; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                int ud = std::popcount(nbr[static_cast<std::size_t>(u)] & mask);
                if (ud > vd) {
                    vd = ud;
                    v = u;
                }
            }
            std::uint64_t vbit = 1ull << v;
            auto [p0, d0] = eval(mask & ~vbit);
            auto [p1, d1] = eval(mask & ~vbit & ~nbr[static_cast<std::size_t>(v)]);
            out = {p0 + lambda * p1, d0 + p1 + lambda * d1};
        }
        memo.emplace(mask, out);
        return out;
    }
};

std::vector<std::uint64_t> neighborhood_masks(const BallGraph& g) {
    std::vector<std::uint64_t> nbr(g.n_vertices, 0);
    for (std::uint32_t v = 0; v < g.n_vertices; ++v)
        g.for_each_neighbor(v, [&](std::uint32_t u) { nbr[v] |= 1ull << u; });
    return nbr;
}

bool neighbor_occupied(const BallGraph& g, std::uint32_t v, const std::vector<char>& occ) {
    if (g.materialized) {
        for (std::uint32_t u : g.adj[v])
            if (occ[u]) return true;
        return false;
    }
    if (!g.masks.empty()) {
        std::uint64_t vb = v;
        for (std::uint64_t m : g.masks)
            if (occ[static_cast<std::size_t>(vb ^ m)]) return true;
        return false;
    }
    bool hit = false;
    g.for_each_neighbor(v, [&](std::uint32_t u) { hit = hit || occ[u] != 0; });
    return hit;
}

}  // namespace

PartitionResult count_independent_sets_exact(const BallGraph& g, double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("count_independent_sets_exact: lambda > 0");
    if (g.n_vertices > 40)
        throw BudgetExceeded("exact partition function limited to 40 vertices");

    auto nbr = neighborhood_masks(g);
    std::uint64_t full =
        g.n_vertices == 64 ? ~0ull : (1ull << g.n_vertices) - 1;

    PartitionSolver at_lambda{nbr, lambda, {}};
    auto [p, dp] = at_lambda.eval(full);

    PartitionResult res;
    res.partition_function = p;
    res.occupancy = lambda * dp / p;
    if (lambda == 1.0) {
        res.log_count = std::log(p);
    } else {
        PartitionSolver at_one{std::move(nbr), 1.0, {}};
        res.log_count = std::log(at_one.eval(full).first);
    }
    return res;
}

HardcoreEstimate hardcore_estimate(const BallGraph& g, double lambda, std::uint64_t steps,
                                   std::uint64_t seed) {
    if (lambda <= 0.0) throw std::invalid_argument("hardcore_estimate: lambda > 0");
    if (g.n_vertices == 0) throw std::invalid_argument("hardcore_estimate: empty graph");
    if (steps < 100ull * g.n_vertices)
        throw std::invalid_argument("hardcore_estimate: need steps >= 100 * N");

    const double p_occupy = lambda / (1.0 + lambda);
    HardcoreEstimate est;
    est.steps = steps;
    est.burn_in = steps / 10;
    est.batches = 20;

    SplitMix64 rng = SplitMix64::derive(seed, 0x9c0de);
    std::vector<char> occ(g.n_vertices, 0);
    std::uint64_t cur_size = 0;

    const std::uint64_t measured = steps - est.burn_in;
    const std::uint64_t batch_len = measured / 20;
    std::vector<double> batch_mean;
    batch_mean.reserve(20);
    KahanSum batch_acc;
    std::uint64_t in_batch = 0;

    for (std::uint64_t step = 0; step < steps; ++step) {
        std::uint32_t v = static_cast<std::uint32_t>(rng.next_below(g.n_vertices));
        // heat-bath update: resample v from its conditional distribution
        if (neighbor_occupied(g, v, occ)) {
            if (occ[v]) --cur_size;
            occ[v] = 0;
        } else {
            bool on = rng.next_unit() < p_occupy;
            if (on && !occ[v]) ++cur_size;
            if (!on && occ[v]) --cur_size;
            occ[v] = on ? 1 : 0;
        }
        if (step < est.burn_in) continue;
        batch_acc.add(static_cast<double>(cur_size));
        if (++in_batch == batch_len && batch_mean.size() < 19) {
            batch_mean.push_back(batch_acc.value() / static_cast<double>(in_batch));
            batch_acc = KahanSum{};
            in_batch = 0;
        }
    }
    batch_mean.push_back(batch_acc.value() / static_cast<double>(in_batch));

    KahanSum total;
    for (double m : batch_mean) total.add(m);
    const double mean = total.value() / static_cast<double>(batch_mean.size());
    KahanSum sq;
    double lo = batch_mean.front(), hi = batch_mean.front();
    for (double m : batch_mean) {
        sq.add((m - mean) * (m - mean));
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    const double k = static_cast<double>(batch_mean.size());
    est.mean_occupancy = mean;
    est.std_error = std::sqrt(sq.value() / (k - 1.0) / k);
    est.batch_spread = mean != 0.0 ? (hi - lo) / mean : hi - lo;
    return est;
}

}  // namespace ballvol
