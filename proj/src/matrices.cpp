#include "signed_spectra/matrices.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace signed_spectra {

IntMatrix adjacency_matrix(const SignedGraph& g) {
    IntMatrix a = IntMatrix::Zero(g.order(), g.order());
    for (const auto& e : g.edges()) {
        a(e.u, e.v) = e.sign;
        a(e.v, e.u) = e.sign;
    }
    return a;
}

PathSignTable::PathSignTable(IntMatrix dist, std::vector<std::uint8_t> masks)
    : dist_(std::move(dist)), masks_(std::move(masks)) {}

PathSignTable path_sign_table(const SignedGraph& g) {
    const int n = g.order();
    IntMatrix dist = IntMatrix::Zero(n, n);
    std::vector<std::uint8_t> masks(static_cast<std::size_t>(n) * n, 0);

    std::vector<int> d(n), order(n);
    for (int src = 0; src < n; ++src) {
        std::fill(d.begin(), d.end(), -1);
        d[src] = 0;
        std::queue<int> q;
        q.push(src);
        int idx = 0;
        order[idx++] = src;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (auto [w, s] : g.neighbors(u)) {
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    order[idx++] = w;
                    q.push(w);
                }
            }
        }
        if (idx != n) throw std::invalid_argument("path_sign_table: graph must be connected");

        // BFS order is nondecreasing in level, so predecessors are final.
        auto row = masks.begin() + static_cast<std::size_t>(src) * n;
        row[src] = 1;
        for (int k = 1; k < n; ++k) {
            int v = order[k];
            std::uint8_t m = 0;
            for (auto [w, s] : g.neighbors(v)) {
                if (d[w] == d[v] - 1) {
                    std::uint8_t mw = row[w];
                    m |= (s == 1) ? mw : static_cast<std::uint8_t>(((mw & 1) << 1) | ((mw & 2) >> 1));
                }
            }
            row[v] = m;
        }
        for (int v = 0; v < n; ++v) dist(src, v) = d[v];
    }
    return PathSignTable(std::move(dist), std::move(masks));
}

std::pair<IntMatrix, IntMatrix> distance_matrices(const SignedGraph& g) {
    PathSignTable t = path_sign_table(g);
    const int n = t.order();
    IntMatrix dmax(n, n), dmin(n, n);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            dmax(u, v) = t.sigma_max(u, v) * t.distance(u, v);
            dmin(u, v) = t.sigma_min(u, v) * t.distance(u, v);
        }
    }
    return {std::move(dmax), std::move(dmin)};
}

CompatibilityResult compatible_distance_matrix(const SignedGraph& g) {
    PathSignTable t = path_sign_table(g);
    const int n = t.order();
    CompatibilityResult res;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!t.compatible(u, v)) res.incompatible.emplace_back(u, v);
    if (res.incompatible.empty()) {
        IntMatrix dpm(n, n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) dpm(u, v) = t.sigma_max(u, v) * t.distance(u, v);
        res.dpm = std::move(dpm);
    }
    return res;
}

}  // namespace signed_spectra
