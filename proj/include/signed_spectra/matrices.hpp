#ifndef SIGNED_SPECTRA_MATRICES_HPP
#define SIGNED_SPECTRA_MATRICES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

/// Dense integer matrix; adjacency and signed distance matrices live here
/// (symmetric, zero diagonal by construction).
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

inline bool same_matrix(const IntMatrix& a, const IntMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

IntMatrix adjacency_matrix(const SignedGraph& g);

/// Per ordered pair: BFS distance and the set of signs achievable by shortest
/// paths, encoded as a bitmask (bit 0: +1 achievable, bit 1: -1 achievable).
class PathSignTable {
  public:
    PathSignTable(IntMatrix dist, std::vector<std::uint8_t> masks);

    int order() const { return static_cast<int>(dist_.rows()); }
    std::int64_t distance(int u, int v) const { return dist_(u, v); }
    bool plus_achievable(int u, int v) const { return mask(u, v) & 1; }
    bool minus_achievable(int u, int v) const { return mask(u, v) & 2; }
    int sigma_max(int u, int v) const { return plus_achievable(u, v) ? 1 : -1; }
    int sigma_min(int u, int v) const { return minus_achievable(u, v) ? -1 : 1; }
    bool compatible(int u, int v) const { return sigma_max(u, v) == sigma_min(u, v); }

  private:
    std::uint8_t mask(int u, int v) const { return masks_[static_cast<std::size_t>(u) * order() + v]; }
    IntMatrix dist_;
    std::vector<std::uint8_t> masks_;
};

/// Layered BFS sign propagation; exact (equals all-shortest-path enumeration).
/// Throws on disconnected input.
PathSignTable path_sign_table(const SignedGraph& g);

/// (D^max, D^min) built from the path-sign table.
std::pair<IntMatrix, IntMatrix> distance_matrices(const SignedGraph& g);

struct CompatibilityResult {
    std::optional<IntMatrix> dpm;                     // D^+- when compatible
    std::vector<std::pair<int, int>> incompatible;    // offending pairs otherwise
    bool compatible() const { return dpm.has_value(); }
};

CompatibilityResult compatible_distance_matrix(const SignedGraph& g);

}  // namespace signed_spectra

#endif
