#ifndef SIGNED_SPECTRA_SMALL_GRAPHS_HPP
#define SIGNED_SPECTRA_SMALL_GRAPHS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Unsigned graph on n <= 10 vertices as an edge bitmask over all_pairs(n).
struct SmallGraph {
    int n = 0;
    std::uint64_t mask = 0;
};

/// Vertex pairs (u,v), u < v, in lexicographic order; bit i of a mask is pair i.
std::vector<std::pair<int, int>> all_pairs(int n);

std::vector<std::pair<int, int>> mask_edges(int n, std::uint64_t mask);

bool mask_connected(int n, std::uint64_t mask);

/// Minimum mask over all vertex relabelings (isomorphism-class key).
std::uint64_t canonical_mask(int n, std::uint64_t mask);

/// One representative per isomorphism class of connected graphs on exactly n
/// vertices (every vertex has degree >= 1 and the graph is connected).
std::vector<SmallGraph> connected_graph_classes(int n);

int graph_diameter(int n, std::uint64_t mask);

/// Part count when the graph is complete multipartite, nullopt otherwise.
std::optional<int> complete_multipartite_parts(int n, std::uint64_t mask);

/// Signed graph from an underlying mask plus a per-edge sign mask
/// (bit i of sign_mask set = edge i negative, ordered as mask_edges).
SignedGraph signed_from_masks(int n, std::uint64_t mask, std::uint64_t sign_mask);

}  // namespace signed_spectra

#endif
