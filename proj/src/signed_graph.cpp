#include "signed_spectra/signed_graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace signed_spectra {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
    }
}

}  // namespace

SignedGraph::SignedGraph(int n, std::vector<SignedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("SignedGraph: need at least one vertex");
    for (auto& e : edges_) {
        check_vertex(e.u, n_, "SignedGraph");
        check_vertex(e.v, n_, "SignedGraph");
        if (e.u == e.v) throw std::invalid_argument("SignedGraph: self-loop at " + std::to_string(e.u));
        if (e.sign != 1 && e.sign != -1) throw std::invalid_argument("SignedGraph: sign must be +1 or -1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const SignedEdge& a, const SignedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v) {
            throw std::invalid_argument("SignedGraph: duplicate edge {" + std::to_string(edges_[i].u) +
                                        "," + std::to_string(edges_[i].v) + "}");
        }
    }
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.u];
        ++deg[e.v];
    }
    adj_start_.assign(n_ + 1, 0);
    for (int v = 0; v < n_; ++v) adj_start_[v + 1] = adj_start_[v] + deg[v];
    adj_flat_.resize(2 * edges_.size());
    std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
    for (const auto& e : edges_) {
        adj_flat_[fill[e.u]++] = {e.v, e.sign};
        adj_flat_[fill[e.v]++] = {e.u, e.sign};
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(adj_flat_.begin() + adj_start_[v], adj_flat_.begin() + adj_start_[v + 1]);
    }
}

std::span<const std::pair<int, int>> SignedGraph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    return {adj_flat_.data() + adj_start_[v],
            static_cast<std::size_t>(adj_start_[v + 1] - adj_start_[v])};
}

int SignedGraph::edge_sign(int u, int v) const {
    check_vertex(u, n_, "edge_sign");
    check_vertex(v, n_, "edge_sign");
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), std::pair<int, int>{v, -2});
    if (it != nb.end() && it->first == v) return it->second;
    return 0;
}

bool SignedGraph::connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [w, s] : neighbors(u)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n_;
}

LabeledTree LabeledTree::checked(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("LabeledTree: need at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1) {
        throw std::invalid_argument("LabeledTree: expected n-1 edges");
    }
    std::vector<SignedEdge> se;
    se.reserve(edges.size());
    for (auto [u, v] : edges) se.push_back({u, v, 1});
    SignedGraph g(n, se);  // validates simplicity / ranges
    if (!g.connected()) throw std::invalid_argument("LabeledTree: edge set is not connected");
    LabeledTree t;
    t.n = n;
    for (const auto& e : g.edges()) t.edges.emplace_back(e.u, e.v);
    return t;
}

std::vector<int> LabeledTree::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

SignedGraph complete_with_negative_subgraph(int n, const std::vector<std::pair<int, int>>& h_edges) {
    if (n < 2) throw std::invalid_argument("complete_with_negative_subgraph: n >= 2 required");
    std::vector<std::vector<char>> neg(n, std::vector<char>(n, 0));
    for (auto [u, v] : h_edges) {
        check_vertex(u, n, "complete_with_negative_subgraph");
        check_vertex(v, n, "complete_with_negative_subgraph");
        if (u == v) throw std::invalid_argument("complete_with_negative_subgraph: loop in H");
        if (neg[u][v]) throw std::invalid_argument("complete_with_negative_subgraph: duplicate edge in H");
        neg[u][v] = neg[v][u] = 1;
    }
    std::vector<SignedEdge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, neg[u][v] ? -1 : 1});
    return SignedGraph(n, std::move(edges));
}

LabeledTree double_star(int s, int t) {
    if (s < 0 || t < 0) throw std::invalid_argument("double_star: s,t >= 0 required");
    std::vector<std::pair<int, int>> e{{0, 1}};
    for (int i = 0; i < s; ++i) e.emplace_back(0, 2 + i);
    for (int j = 0; j < t; ++j) e.emplace_back(1, s + 2 + j);
    return LabeledTree::checked(s + t + 2, std::move(e));
}

LabeledTree linked_stars(int a, int b) {
    if (a < 2 || b < 2) throw std::invalid_argument("linked_stars: a,b >= 2 required");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < a; ++i) e.emplace_back(0, i);
    for (int j = 1; j < b; ++j) e.emplace_back(a, a + j);
    e.emplace_back(1, a + 1);
    return LabeledTree::checked(a + b, std::move(e));
}

SignedGraph s_plus_graph(int n, int tri_sign, std::uint64_t signature_seed) {
    if (n < 5) throw std::invalid_argument("s_plus_graph: n >= 5 required");
    if (tri_sign != 1 && tri_sign != -1) throw std::invalid_argument("s_plus_graph: tri_sign must be +1 or -1");
    auto bit = [&](int k) { return (signature_seed >> (k % 64)) & 1u ? 1 : -1; };
    int s01 = bit(0), s12 = bit(1), s23 = bit(2);
    std::vector<SignedEdge> edges{{0, 1, s01}, {1, 2, s12}, {2, 3, s23}};
    for (int i = 4; i < n; ++i) {
        int s1i = bit(3 + (i - 4));
        int s2i = tri_sign * s12 * s1i;  // forces sigma(12)*sigma(1i)*sigma(2i) = tri_sign
        edges.push_back({1, i, s1i});
        edges.push_back({2, i, s2i});
    }
    return SignedGraph(n, std::move(edges));
}

SignedGraph all_negative_complete_multipartite(const std::vector<int>& parts) {
    if (parts.size() < 2) throw std::invalid_argument("all_negative_complete_multipartite: need >= 2 parts");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("all_negative_complete_multipartite: part sizes >= 1");
        n += p;
    }
    std::vector<int> part_of(n);
    int v = 0;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int j = 0; j < parts[i]; ++j) part_of[v++] = static_cast<int>(i);
    std::vector<SignedEdge> edges;
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part_of[u] != part_of[w]) edges.push_back({u, w, -1});
    return SignedGraph(n, std::move(edges));
}

SwitchingCertificate is_balanced(const SignedGraph& g) {
    if (!g.connected()) throw std::invalid_argument("is_balanced: graph must be connected");
    const int n = g.order();
    std::vector<int> theta(n, 0), parent(n, -1);
    theta[0] = 1;
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [w, s] : g.neighbors(u)) {
            if (theta[w] == 0) {
                theta[w] = theta[u] * s;
                parent[w] = u;
                q.push(w);
            }
        }
    }
    for (const auto& e : g.edges()) {
        if (e.sign != theta[e.u] * theta[e.v]) {
            // fundamental cycle: e plus the two tree paths up to the meeting point
            std::vector<int> up_u{e.u}, up_v{e.v};
            auto depth = [&](int x) {
                int d = 0;
                for (int y = x; parent[y] != -1; y = parent[y]) ++d;
                return d;
            };
            int du = depth(e.u), dv = depth(e.v);
            int a = e.u, b = e.v;
            while (du > dv) { a = parent[a]; up_u.push_back(a); --du; }
            while (dv > du) { b = parent[b]; up_v.push_back(b); --dv; }
            while (a != b) {
                a = parent[a]; up_u.push_back(a);
                b = parent[b]; up_v.push_back(b);
            }
            SwitchingCertificate cert;
            cert.balanced = false;
            cert.negative_cycle.assign(up_u.begin(), up_u.end());
            cert.negative_cycle.insert(cert.negative_cycle.end(), up_v.rbegin() + 1, up_v.rend());
            return cert;
        }
    }
    SwitchingCertificate cert;
    cert.balanced = true;
    cert.theta = std::move(theta);
    return cert;
}

SignedGraph switch_at(const SignedGraph& g, const std::vector<int>& u_set) {
    std::vector<char> in_u(g.order(), 0);
    for (int v : u_set) {
        check_vertex(v, g.order(), "switch_at");
        in_u[v] = 1;
    }
    std::vector<SignedEdge> edges = g.edges();
    for (auto& e : edges)
        if (in_u[e.u] != in_u[e.v]) e.sign = -e.sign;
    return SignedGraph(g.order(), std::move(edges));
}

SignedGraph reverse_sign_pair(const SignedGraph& g, std::pair<int, int> pos_edge,
                              std::pair<int, int> neg_edge) {
    if (g.edge_sign(pos_edge.first, pos_edge.second) != 1)
        throw std::invalid_argument("reverse_sign_pair: pos_edge is not a positive edge of g");
    if (g.edge_sign(neg_edge.first, neg_edge.second) != -1)
        throw std::invalid_argument("reverse_sign_pair: neg_edge is not a negative edge of g");
    std::vector<SignedEdge> edges = g.edges();
    auto flip = [&](std::pair<int, int> p) {
        int u = std::min(p.first, p.second), v = std::max(p.first, p.second);
        for (auto& e : edges)
            if (e.u == u && e.v == v) e.sign = -e.sign;
    };
    flip(pos_edge);
    flip(neg_edge);
    return SignedGraph(g.order(), std::move(edges));
}

int cycle_sign(const SignedGraph& g, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle_sign: cycle needs >= 3 vertices");
    std::vector<char> seen(g.order(), 0);
    int prod = 1;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
        check_vertex(u, g.order(), "cycle_sign");
        if (seen[u]) throw std::invalid_argument("cycle_sign: repeated vertex " + std::to_string(u));
        seen[u] = 1;
        int s = g.edge_sign(u, v);
        if (s == 0)
            throw std::invalid_argument("cycle_sign: {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} is not an edge");
        prod *= s;
    }
    return prod;
}

}  // namespace signed_spectra
