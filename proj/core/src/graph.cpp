#include "ballvol/graph.hpp"

namespace ballvol {

BallGraph build_ball_graph(const SpaceSpec& s, int r, const GraphCaps& caps) {
    s.validate();
    if (r < 0 || r > s.diameter())
        throw std::invalid_argument("build_ball_graph: radius out of range");

    BallGraph g;
    g.space = s;
    g.r = r;
    g.n_vertices = static_cast<std::uint32_t>(checked_point_count(s, caps.max_vertices));

    BigCount vol = ball_volume(s, r).volume;
    std::uint64_t degree = vol.get_ui() - 1;  // vol <= N, already cap-checked

    if (s.kind == SpaceKind::hamming && s.q == 2 && s.n <= 63) {
        g.masks.reserve(degree);
        for (int i = 1; i <= r; ++i)
            for_each_combination(s.n, i, [&](const std::vector<int>& supp) {
                std::uint64_t m = 0;
                // bit j of the mask flips symbol j counted from the right,
                // matching the base-2 enumeration rank
                for (int pos : supp) m |= 1ull << (s.n - 1 - pos);
                g.masks.push_back(m);
            });
    }

    std::uint64_t entries = static_cast<std::uint64_t>(g.n_vertices) * degree;
    if (entries <= caps.max_adjacency_entries) {
        g.adj.resize(g.n_vertices);
        for (std::uint32_t v = 0; v < g.n_vertices; ++v) {
            auto& list = g.adj[v];
            list.reserve(degree);
            g.for_each_neighbor(v, [&](std::uint32_t u) { list.push_back(u); });
            std::sort(list.begin(), list.end());
        }
        g.materialized = true;
        std::uint64_t dmin = degree, dmax = 0;
        for (auto& list : g.adj) {
            dmin = std::min<std::uint64_t>(dmin, list.size());
            dmax = std::max<std::uint64_t>(dmax, list.size());
        }
        g.min_degree = dmin;
        g.max_degree = dmax;
    } else {
        // homogeneous by construction; still spot-check one vertex
        if (g.degree_of(0) != degree)
            throw std::logic_error("build_ball_graph: degree disagrees with ball volume");
        g.min_degree = g.max_degree = degree;
    }
    return g;
}

BallGraph explicit_graph(std::vector<std::vector<std::uint32_t>> adjacency) {
    BallGraph g;
    g.from_space = false;
    g.materialized = true;
    g.n_vertices = static_cast<std::uint32_t>(adjacency.size());
    g.adj = std::move(adjacency);
    for (auto& list : g.adj) std::sort(list.begin(), list.end());
    std::uint64_t dmin = ~0ull, dmax = 0;
    for (std::uint32_t v = 0; v < g.n_vertices; ++v) {
        auto& list = g.adj[v];
        for (size_t j = 0; j < list.size(); ++j) {
            std::uint32_t u = list[j];
            if (u >= g.n_vertices || u == v || (j > 0 && list[j - 1] == u))
                throw std::invalid_argument("explicit_graph: bad neighbor entry");
            if (!std::binary_search(g.adj[u].begin(), g.adj[u].end(), v))
                throw std::invalid_argument("explicit_graph: adjacency not symmetric");
        }
        dmin = std::min<std::uint64_t>(dmin, list.size());
        dmax = std::max<std::uint64_t>(dmax, list.size());
    }
    g.min_degree = g.n_vertices ? dmin : 0;
    g.max_degree = dmax;
    return g;
}

SparsityAudit audit_sparsity(const BallGraph& g, const Point& vertex, int t) {
    if (!g.from_space)
        throw std::invalid_argument("audit_sparsity: needs a metric-backed graph");
    if (t < 0 || t >= g.r) throw std::invalid_argument("audit_sparsity: need 0 <= t < r");
    check_point(g.space, vertex);

    SparsityAudit a;
    a.vertex = vertex;
    a.t = t;

    // gather the whole neighborhood with its distance-to-center
    std::vector<Point> nbr;
    std::vector<int> dist;
    for (int rho = 1; rho <= g.r; ++rho)
        for_each_shell_point(g.space, vertex, rho, [&](const Point& x) {
            nbr.push_back(x);
            dist.push_back(rho);
        });

    int cut = g.r - t;
    for (int d : dist) (d <= cut ? a.size_i : a.size_b) += 1;

    // induced-subgraph degrees and edge count
    std::uint64_t edges = 0;
    std::vector<std::uint64_t> deg(nbr.size(), 0);
    for (size_t x = 0; x < nbr.size(); ++x)
        for (size_t y = x + 1; y < nbr.size(); ++y)
            if (distance(g.space, nbr[x], nbr[y]) <= g.r) {
                ++edges;
                ++deg[x];
                ++deg[y];
            }
    for (size_t x = 0; x < nbr.size(); ++x)
        if (dist[x] > cut) a.max_deg_in_b = std::max(a.max_deg_in_b, deg[x]);

    double D = static_cast<double>(g.max_degree);
    a.implied_k = std::min(D / static_cast<double>(std::max<std::uint64_t>(a.max_deg_in_b, 1)),
                           D / static_cast<double>(std::max<std::uint64_t>(a.size_i, 1)));
    a.gamma_edge_count = BigCount(static_cast<unsigned long>(edges));
    return a;
}

}  // namespace ballvol
