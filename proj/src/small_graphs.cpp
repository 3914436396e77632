#include "signed_spectra/small_graphs.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace signed_spectra {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

std::vector<std::pair<int, int>> mask_edges(int n, std::uint64_t mask) {
    auto pairs = all_pairs(n);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1u) edges.push_back(pairs[i]);
    return edges;
}

namespace {

std::vector<std::uint32_t> adjacency_bits(int n, std::uint64_t mask) {
    std::vector<std::uint32_t> adj(n, 0);
    auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1u) {
            adj[pairs[i].first] |= 1u << pairs[i].second;
            adj[pairs[i].second] |= 1u << pairs[i].first;
        }
    }
    return adj;
}

}  // namespace

bool mask_connected(int n, std::uint64_t mask) {
    auto adj = adjacency_bits(n, mask);
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint32_t next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier >> v & 1u) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    if (n > 8) throw std::invalid_argument("canonical_mask: n <= 8 required");
    auto pairs = all_pairs(n);
    std::vector<std::vector<int>> pair_index(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < pairs.size(); ++i)
        pair_index[pairs[i].first][pairs[i].second] = pair_index[pairs[i].second][pairs[i].first] =
            static_cast<int>(i);
    std::array<int, 8> perm{};
    std::iota(perm.begin(), perm.begin() + n, 0);
    std::uint64_t best = ~0ull;
    do {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u) m |= 1ull << pair_index[perm[pairs[i].first]][perm[pairs[i].second]];
        best = std::min(best, m);
    } while (std::next_permutation(perm.begin(), perm.begin() + n));
    return best;
}

std::vector<SmallGraph> connected_graph_classes(int n) {
    const int m = n * (n - 1) / 2;
    if (m >= 31) throw std::invalid_argument("connected_graph_classes: n too large to enumerate");
    std::unordered_set<std::uint64_t> seen;
    std::vector<SmallGraph> out;
    for (std::uint64_t mask = 0; mask < (1ull << m); ++mask) {
        if (!mask_connected(n, mask)) continue;
        std::uint64_t c = canonical_mask(n, mask);
        if (seen.insert(c).second) out.push_back({n, c});
    }
    return out;
}

int graph_diameter(int n, std::uint64_t mask) {
    auto adj = adjacency_bits(n, mask);
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> d(n, -1);
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v = 0; v < n; ++v)
                if ((adj[u] >> v & 1u) && d[v] < 0) {
                    d[v] = d[u] + 1;
                    q.push(v);
                }
        }
        for (int v = 0; v < n; ++v) {
            if (d[v] < 0) return -1;  // disconnected
            diam = std::max(diam, d[v]);
        }
    }
    return diam;
}

std::optional<int> complete_multipartite_parts(int n, std::uint64_t mask) {
    auto adj = adjacency_bits(n, mask);
    // parts = connected components of the complement; vertices in a part must
    // be pairwise nonadjacent and share the same part member set
    std::vector<int> part(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v) {
        if (part[v] >= 0) continue;
        std::uint32_t comp_adj_v = ~adj[v] & ~(1u << v) & ((1u << n) - 1);
        part[v] = k;
        std::uint32_t members = (1u << v) | comp_adj_v;
        for (int w = 0; w < n; ++w) {
            if (!(comp_adj_v >> w & 1u)) continue;
            std::uint32_t comp_adj_w = ~adj[w] & ~(1u << w) & ((1u << n) - 1);
            if (((1u << w) | comp_adj_w) != members) return std::nullopt;
            part[w] = k;
        }
        ++k;
    }
    auto pairs = all_pairs(n);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        bool edge = mask >> i & 1u;
        bool cross = part[pairs[i].first] != part[pairs[i].second];
        if (edge != cross) return std::nullopt;
    }
    return k;
}

SignedGraph signed_from_masks(int n, std::uint64_t mask, std::uint64_t sign_mask) {
    auto edges = mask_edges(n, mask);
    std::vector<SignedEdge> se;
    se.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        se.push_back({edges[i].first, edges[i].second, (sign_mask >> i & 1u) ? -1 : 1});
    return SignedGraph(n, std::move(se));
}

}  // namespace signed_spectra
