#pragma once

#include "ballvol/space.hpp"

namespace ballvol {

struct GraphCaps {
    std::uint64_t max_vertices = 1'000'000;
    // materialize adjacency lists only when N * degree stays under this
    std::uint64_t max_adjacency_entries = 1ull << 26;
};

// Graph on the points of a space with edges at distance <= r. Vertices are
// enumeration ranks. Large instances stay implicit: neighbors are generated
// from the metric on demand (XOR masks for binary words, shell enumeration
// otherwise).
struct BallGraph {
    SpaceSpec space;
    int r = 0;
    bool from_space = true;  // false for explicit_graph instances
    std::uint32_t n_vertices = 0;
    std::uint64_t max_degree = 0;
    std::uint64_t min_degree = 0;
    bool materialized = false;
    std::vector<std::vector<std::uint32_t>> adj;  // when materialized
    std::vector<std::uint64_t> masks;             // hamming q=2 implicit fast path

    template <class F>
    void for_each_neighbor(std::uint32_t v, F&& f) const {
        if (materialized) {
            for (std::uint32_t u : adj[v]) f(u);
            return;
        }
        if (!masks.empty()) {
            std::uint64_t vb = v;
            for (std::uint64_t m : masks) f(static_cast<std::uint32_t>(vb ^ m));
            return;
        }
        Point p = point_at_rank(space, v);
        for (int rho = 1; rho <= r; ++rho)
            for_each_shell_point(space, p, rho, [&](const Point& x) {
                f(static_cast<std::uint32_t>(point_rank(space, x)));
            });
    }

    std::uint64_t degree_of(std::uint32_t v) const {
        if (materialized) return adj[v].size();
        std::uint64_t d = 0;
        for_each_neighbor(v, [&](std::uint32_t) { ++d; });
        return d;
    }
};

BallGraph build_ball_graph(const SpaceSpec& s, int r, const GraphCaps& caps = {});

// Wraps a hand-built adjacency structure (must be symmetric, no loops) so the
// independent-set machinery can run on arbitrary small graphs.
BallGraph explicit_graph(std::vector<std::vector<std::uint32_t>> adjacency);

struct SparsityAudit {
    Point vertex;
    int t = 0;
    std::uint64_t size_b = 0;        // neighbors at distance in (r-t, r]
    std::uint64_t size_i = 0;        // punctured ball of radius r-t
    std::uint64_t max_deg_in_b = 0;  // max degree of a B-vertex inside the neighborhood
    double implied_k = 0.0;          // min(D/maxDegInB, D/|I|)
    BigCount gamma_edge_count;       // edges inside the neighborhood graph
};

// Exact B/I partition of the vertex's neighborhood and the edge counts the
// local-sparsity argument needs. Quadratic in the degree; keep r small.
SparsityAudit audit_sparsity(const BallGraph& g, const Point& vertex, int t);

}  // namespace ballvol
