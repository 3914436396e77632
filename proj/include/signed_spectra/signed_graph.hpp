#ifndef SIGNED_SPECTRA_SIGNED_GRAPH_HPP
#define SIGNED_SPECTRA_SIGNED_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace signed_spectra {

/// An undirected edge {u,v} carrying a sign in {+1,-1}. Stored with u < v.
struct SignedEdge {
    int u = 0;
    int v = 0;
    int sign = 1;

    friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

/// A signed simple graph: n vertices (0..n-1) and a set of signed edges.
/// Immutable after construction; construction validates simplicity.
class SignedGraph {
  public:
    SignedGraph(int n, std::vector<SignedEdge> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<SignedEdge>& edges() const { return edges_; }

    /// Neighbors of v as (neighbor, sign) pairs, ascending by neighbor.
    std::span<const std::pair<int, int>> neighbors(int v) const;

    bool has_edge(int u, int v) const { return edge_sign(u, v) != 0; }
    /// Sign of edge {u,v}, or 0 when the edge is absent.
    int edge_sign(int u, int v) const;

    bool connected() const;

  private:
    int n_;
    std::vector<SignedEdge> edges_;
    std::vector<std::pair<int, int>> adj_flat_;
    std::vector<int> adj_start_;
};

/// A labeled tree on n vertices (exactly n-1 edges, connected).
struct LabeledTree {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    static LabeledTree checked(int n, std::vector<std::pair<int, int>> edges);
    std::vector<int> degrees() const;
};

/// Witness for balance (vertex signs theta with sigma(uv) = theta_u*theta_v)
/// or imbalance (a cycle whose edge-sign product is -1).
struct SwitchingCertificate {
    bool balanced = false;
    std::vector<int> theta;           // size n when balanced
    std::vector<int> negative_cycle;  // vertex sequence when unbalanced
};

// --- constructions ---------------------------------------------------------

/// (K_n, H^-): complete graph with the edges of H negative, the rest positive.
SignedGraph complete_with_negative_subgraph(int n, const std::vector<std::pair<int, int>>& h_edges);

/// Double star T_{s,t}: edge {0,1}, s pendants 2..s+1 on 0, t pendants s+2..s+t+1 on 1.
LabeledTree double_star(int s, int t);

/// Linked stars on a+b vertices: K_{1,a-1} with center 0 and pendants 1..a-1,
/// K_{1,b-1} with center a and pendants a+1..a+b-1, plus the edge {1, a+1}.
/// Requires a, b >= 2.
LabeledTree linked_stars(int a, int b);

/// S+_{2,n-2} of the distance-extremal family, vertices 0..n-1 mirroring the
/// v_1..v_n labels: pendant 0 on 1, pendant 3 on 2, edge {1,2}, and 4..n-1
/// joined to both 1 and 2. Every triangle {1,2,i} gets sign tri_sign; the
/// remaining sign freedom (sigma_01, sigma_12, sigma_23 and sigma(1,i)) is
/// drawn from the seed bits, so distinct seeds give switching-equivalent
/// signatures. Requires n >= 5.
SignedGraph s_plus_graph(int n, int tri_sign, std::uint64_t signature_seed);

/// Complete multipartite graph with the given part sizes, every edge negative.
SignedGraph all_negative_complete_multipartite(const std::vector<int>& parts);

// --- operations ------------------------------------------------------------

/// BFS balance test on a connected graph. Returns theta when balanced,
/// otherwise the fundamental cycle of a violating non-tree edge.
SwitchingCertificate is_balanced(const SignedGraph& g);

/// Switch at U: flip the sign of every edge with exactly one endpoint in U.
SignedGraph switch_at(const SignedGraph& g, const std::vector<int>& u_set);

/// Flip the signs of one existing positive edge and one existing negative edge.
SignedGraph reverse_sign_pair(const SignedGraph& g, std::pair<int, int> pos_edge,
                              std::pair<int, int> neg_edge);

/// Sign product along a closed vertex sequence (consecutive vertices adjacent,
/// vertices distinct).
int cycle_sign(const SignedGraph& g, const std::vector<int>& cycle);

}  // namespace signed_spectra

#endif
