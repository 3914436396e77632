#ifndef SIGNED_SPECTRA_SEARCH_HPP
#define SIGNED_SPECTRA_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "signed_spectra/report.hpp"
#include "signed_spectra/signed_graph.hpp"

namespace signed_spectra {

enum class Objective { max_lambda1, min_lambda_n, max_rho };

std::string to_string(Objective o);
Objective objective_from_string(const std::string& s);

/// Optimum over all unbalanced (K_n, T^-) plus every witness tree attaining it
/// within the tie tolerance, deduplicated up to isomorphism.
struct ExtremalResult {
    Objective objective = Objective::max_rho;
    int n = 0;
    double optimum = 0;
    std::vector<std::string> witnesses;  // canonical tree encodings, sorted
    std::uint64_t trees_scanned = 0;
};

struct SearchOptions {
    int cap = 9;              // n^(n-2) trees; 9 keeps the run at desk scale
    bool cap_override = false;
    int jobs = 1;
    double tie_tol = 1e-7;
};

/// Exhaustive over labeled spanning trees of K_n via Prüfer sequences. The
/// star K_{1,n-1} is skipped: it is the one tree whose negative set leaves the
/// complete graph balanced, and the objectives quantify over unbalanced
/// signings.
ExtremalResult extremal_tree_search(int n, Objective objective, const SearchOptions& opts = {});

struct SignatureSearchOptions {
    int cap_edges = 20;
    bool cap_override = false;
    bool dedupe_switching = false;
};

/// All sign assignments (bit i = edge i negative, edges sorted as in
/// SignedGraph::edges) of the underlying graph satisfying the predicate.
std::vector<std::uint32_t> signature_search(int n, const std::vector<std::pair<int, int>>& edges,
                                            const std::function<bool(const SignedGraph&)>& predicate,
                                            const SignatureSearchOptions& opts = {});

struct DiameterScanOptions {
    int samples = 1000;           // per n, for d >= 4
    std::uint64_t seed = 20250810;
};

/// d in {2,3}: exhaustive over all connected signed graphs with n <= n_max of
/// that diameter; checks the least-eigenvalue bound and classifies every
/// equality case. d >= 4: seeded sampling of diameter-d graphs with random and
/// balanced signatures against -4(d-1)/3 and -2d+3.
VerificationReport diameter_bound_scan(int n_max, int d, const DiameterScanOptions& opts = {});

/// True when every triangle of g has positive sign product.
bool all_triangles_positive(const SignedGraph& g);

}  // namespace signed_spectra

#endif
