#include "signed_spectra/trees.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace signed_spectra {

LabeledTree prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 2) throw std::invalid_argument("prufer_decode: n >= 2 required");
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer_decode: sequence length must be n-2");
    for (int x : seq)
        if (x < 0 || x >= n) throw std::invalid_argument("prufer_decode: entry out of range");

    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int x : seq) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--deg[x] == 1) leaves.push(x);
    }
    int u = leaves.top();
    leaves.pop();
    int v = leaves.top();
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return LabeledTree::checked(n, std::move(edges));
}

std::vector<int> prufer_encode(const LabeledTree& t) {
    const int n = t.n;
    if (n < 2) throw std::invalid_argument("prufer_encode: n >= 2 required");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<char> removed(n, 0);
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    std::vector<int> seq;
    seq.reserve(n - 2);
    for (int step = 0; step < n - 2; ++step) {
        int leaf = leaves.top();
        leaves.pop();
        removed[leaf] = 1;
        for (int w : adj[leaf]) {
            if (!removed[w]) {
                seq.push_back(w);
                if (--deg[w] == 1) leaves.push(w);
                break;
            }
        }
    }
    return seq;
}

std::vector<int> tree_centers(const LabeledTree& t) {
    const int n = t.n;
    if (n == 1) return {0};
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> deg(n);
    std::queue<int> q;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) q.push(v);
    }
    int remaining = n;
    std::vector<int> layer;
    while (remaining > 2) {
        int sz = static_cast<int>(q.size());
        remaining -= sz;
        for (int i = 0; i < sz; ++i) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (--deg[w] == 1) q.push(w);
        }
    }
    std::vector<int> centers;
    while (!q.empty()) {
        centers.push_back(q.front());
        q.pop();
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

namespace {

std::string ahu_encode(int root, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> child;
    for (int w : adj[root])
        if (w != parent) child.push_back(ahu_encode(w, root, adj));
    std::sort(child.begin(), child.end());
    std::string out = "(";
    for (const auto& c : child) out += c;
    out += ")";
    return out;
}

}  // namespace

std::string tree_canonical_form(const LabeledTree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::string best;
    for (int c : tree_centers(t)) {
        std::string enc = ahu_encode(c, -1, adj);
        if (best.empty() || enc < best) best = enc;
    }
    return best;
}

int tree_diameter(const LabeledTree& t) {
    std::vector<std::vector<int>> adj(t.n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    auto far = [&](int s) {
        std::vector<int> d(t.n, -1);
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        int best = s;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (d[u] > d[best]) best = u;
            for (int w : adj[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
        }
        return std::pair{best, d[best]};
    };
    auto [a, _] = far(0);
    return far(a).second;
}

}  // namespace signed_spectra
