#include "ballvol/codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ballvol/exact.hpp"

namespace ballvol {

const char* to_string(CodeMethod m) {
    switch (m) {
        case CodeMethod::greedy_maximal: return "greedyMaximal";
        case CodeMethod::degeneracy_order: return "degeneracyOrder";
        default: return "exactBranchBound";
    }
}

namespace {

std::vector<std::uint32_t> greedy_min_degree(const BallGraph& g, std::uint64_t seed) {
    const std::uint32_t n = g.n_vertices;
    std::vector<std::uint32_t> deg(n);
    for (std::uint32_t v = 0; v < n; ++v)
        deg[v] = static_cast<std::uint32_t>(g.materialized ? g.adj[v].size() : g.max_degree);
    std::vector<char> alive(n, 1);
    std::uint32_t remaining = n;
    SplitMix64 rng = SplitMix64::derive(seed, 0);

    std::vector<std::uint32_t> code;
    std::vector<std::uint32_t> doomed;
    while (remaining > 0) {
        // linear scan beats a priority queue here: picks are rare compared
        // with degree decrements
        std::uint32_t best = n;
        std::uint64_t ties = 0;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (best == n || deg[v] < deg[best]) {
                best = v;
                ties = 1;
            } else if (seed != 0 && deg[v] == deg[best]) {
                // reservoir pick among ties for the seeded variant
                ++ties;
                if (rng.next_below(ties) == 0) best = v;
            }
        }
        code.push_back(best);

        doomed.clear();
        doomed.push_back(best);
        g.for_each_neighbor(best, [&](std::uint32_t u) {
            if (alive[u]) doomed.push_back(u);
        });
        for (std::uint32_t u : doomed) alive[u] = 0;
        remaining -= static_cast<std::uint32_t>(doomed.size());
        for (std::uint32_t u : doomed)
            g.for_each_neighbor(u, [&](std::uint32_t w) {
                if (alive[w]) --deg[w];
            });
    }
    return code;
}

std::vector<std::uint32_t> degeneracy_greedy(const BallGraph& g) {
    const std::uint32_t n = g.n_vertices;
    std::vector<std::uint32_t> deg(n);
    std::uint32_t maxdeg = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        deg[v] = static_cast<std::uint32_t>(g.materialized ? g.adj[v].size() : g.max_degree);
        maxdeg = std::max(maxdeg, deg[v]);
    }

    // classic bin-sorted core decomposition
    std::vector<std::uint32_t> bin(maxdeg + 2, 0), pos(n), vert(n);
    for (std::uint32_t v = 0; v < n; ++v) ++bin[deg[v] + 1];
    for (std::uint32_t d = 1; d <= maxdeg + 1; ++d) bin[d] += bin[d - 1];
    {
        std::vector<std::uint32_t> fill = bin;
        for (std::uint32_t v = 0; v < n; ++v) {
            pos[v] = fill[deg[v]]++;
            vert[pos[v]] = v;
        }
    }

    std::vector<std::uint32_t> order(n);
    std::vector<char> removed(n, 0);
    for (std::uint32_t idx = 0; idx < n; ++idx) {
        std::uint32_t v = vert[idx];
        order[idx] = v;
        removed[v] = 1;
        g.for_each_neighbor(v, [&](std::uint32_t u) {
            if (removed[u] || deg[u] <= deg[v]) return;
            // swap u to the front of its bin, then shrink its degree
            std::uint32_t du = deg[u], pu = pos[u];
            std::uint32_t pw = bin[du], w = vert[pw];
            if (u != w) {
                pos[u] = pw;
                vert[pw] = u;
                pos[w] = pu;
                vert[pu] = w;
            }
            ++bin[du];
            --deg[u];
        });
    }

    // greedy independent set over the reverse order
    std::vector<char> blocked(n, 0);
    std::vector<std::uint32_t> code;
    for (std::uint32_t idx = n; idx-- > 0;) {
        std::uint32_t v = order[idx];
        if (blocked[v]) continue;
        code.push_back(v);
        g.for_each_neighbor(v, [&](std::uint32_t u) { blocked[u] = 1; });
    }
    return code;
}

struct ExactMis {
    std::vector<std::uint64_t> closed;  // N[v] bitmasks
    int n = 0;
    int best = 0;
    std::uint64_t best_set = 0;

    void expand(std::uint64_t p, std::uint64_t cur_set, int cur) {
        if (cur + std::popcount(p) <= best) return;
        if (!p) {
            best = cur;
            best_set = cur_set;
            return;
        }
        // branch on a highest-degree candidate
        int v = -1, vd = -1;
        for (std::uint64_t m = p; m;) {
            int u = std::countr_zero(m);
            m &= m - 1;
            int ud = std::popcount(closed[u] & p);
            if (ud > vd) {
                vd = ud;
                v = u;
            }
        }
        expand(p & ~closed[v], cur_set | (1ull << v), cur + 1);
        expand(p & ~(1ull << v), cur_set, cur);
    }
};

std::vector<std::uint32_t> exact_mis(const BallGraph& g) {
    if (g.n_vertices > 60)
        throw BudgetExceeded("exact independence number limited to 60 vertices");
    ExactMis solver;
    solver.n = static_cast<int>(g.n_vertices);
    solver.closed.assign(g.n_vertices, 0);
    for (std::uint32_t v = 0; v < g.n_vertices; ++v) {
        solver.closed[v] = 1ull << v;
        g.for_each_neighbor(v, [&](std::uint32_t u) { solver.closed[v] |= 1ull << u; });
    }
    solver.expand((g.n_vertices == 64 ? ~0ull : (1ull << g.n_vertices) - 1), 0, 0);
    std::vector<std::uint32_t> code;
    for (std::uint64_t m = solver.best_set; m;) {
        code.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return code;
}

}  // namespace

CodeResult construct_code(const BallGraph& g, CodeMethod method, std::uint64_t seed) {
    CodeResult res;
    res.method = method;
    switch (method) {
        case CodeMethod::greedy_maximal: res.codewords = greedy_min_degree(g, seed); break;
        case CodeMethod::degeneracy_order: res.codewords = degeneracy_greedy(g); break;
        case CodeMethod::exact_branch_bound: res.codewords = exact_mis(g); break;
    }
    std::sort(res.codewords.begin(), res.codewords.end());
    res.size = res.codewords.size();

    // independent post-hoc verification, O(size^2)
    if (g.from_space) {
        std::vector<Point> pts;
        pts.reserve(res.codewords.size());
        for (std::uint32_t v : res.codewords) pts.push_back(point_at_rank(g.space, v));
        for (size_t x = 0; x < pts.size(); ++x)
            for (size_t y = x + 1; y < pts.size(); ++y)
                if (distance(g.space, pts[x], pts[y]) <= g.r)
                    throw std::logic_error("construct_code: output is not a code");
        double vol = ball_volume(g.space, g.r).volume.get_d();
        res.sphere_covering_bound = static_cast<double>(g.n_vertices) / vol;
        res.improvement_factor = static_cast<double>(res.size) / res.sphere_covering_bound;
    } else {
        for (size_t x = 0; x < res.codewords.size(); ++x)
            for (size_t y = x + 1; y < res.codewords.size(); ++y)
                if (std::binary_search(g.adj[res.codewords[x]].begin(),
                                       g.adj[res.codewords[x]].end(), res.codewords[y]))
                    throw std::logic_error("construct_code: output is not independent");
    }
    res.verified_independent = true;
    return res;
}

}  // namespace ballvol
