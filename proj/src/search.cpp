#include "signed_spectra/search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "signed_spectra/formulas.hpp"
#include "signed_spectra/linalg.hpp"
#include "signed_spectra/matrices.hpp"
#include "signed_spectra/small_graphs.hpp"
#include "signed_spectra/trees.hpp"

namespace signed_spectra {

std::string to_string(Objective o) {
    switch (o) {
        case Objective::max_lambda1: return "max-lambda1";
        case Objective::min_lambda_n: return "min-lambdan";
        case Objective::max_rho: return "max-rho";
    }
    return "unknown";
}

Objective objective_from_string(const std::string& s) {
    if (s == "max-lambda1") return Objective::max_lambda1;
    if (s == "min-lambdan") return Objective::min_lambda_n;
    if (s == "max-rho") return Objective::max_rho;
    throw std::invalid_argument("unknown objective: " + s);
}

namespace {

// Prüfer sequence of the given integer index, base-n digits.
void index_to_seq(std::uint64_t idx, int n, std::vector<int>& seq) {
    for (int k = 0; k < n - 2; ++k) {
        seq[k] = static_cast<int>(idx % n);
        idx /= n;
    }
}

// maximized score per objective; min-lambda_n is fed as -lambda_n
double objective_score(Objective obj, double l1, double ln) {
    switch (obj) {
        case Objective::max_lambda1: return l1;
        case Objective::min_lambda_n: return -ln;
        case Objective::max_rho: return std::max(l1, -ln);
    }
    return 0;
}

}  // namespace

ExtremalResult extremal_tree_search(int n, Objective objective, const SearchOptions& opts) {
    if (n < 4) throw std::invalid_argument("extremal_tree_search: n >= 4 required");
    if (n > opts.cap && !opts.cap_override)
        throw std::invalid_argument("extremal_tree_search: n above cap " + std::to_string(opts.cap) +
                                    " (set cap_override)");
    std::uint64_t total = 1;
    for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);

    const int jobs = std::max(1, opts.jobs);
    auto run_chunk = [&](std::uint64_t lo, std::uint64_t hi, bool collect, double optimum,
                         double* out_best, std::set<std::string>* out_wit, std::uint64_t* scanned) {
        std::vector<int> seq(n - 2);
        Eigen::MatrixXd a(n, n);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
        std::vector<int> deg(n);
        double best = -std::numeric_limits<double>::infinity();
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            index_to_seq(idx, n, seq);
            LabeledTree t = prufer_decode(seq, n);
            deg = t.degrees();
            if (*std::max_element(deg.begin(), deg.end()) == n - 1) continue;  // star: balanced
            if (scanned) ++*scanned;
            a.setOnes();
            a.diagonal().setZero();
            for (auto [u, v] : t.edges) a(u, v) = a(v, u) = -1.0;
            solver.compute(a, Eigen::EigenvaluesOnly);
            double score = objective_score(objective, solver.eigenvalues()(n - 1),
                                           solver.eigenvalues()(0));
            if (!collect) {
                best = std::max(best, score);
            } else if (score > optimum - opts.tie_tol) {
                out_wit->insert(tree_canonical_form(t));
            }
        }
        if (out_best) *out_best = best;
    };

    auto chunked = [&](auto&& fn) {
        if (jobs == 1 || total < 4096) {
            fn(0, 0, total);
            return;
        }
        std::vector<std::thread> threads;
        std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::uint64_t lo = j * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            threads.emplace_back(fn, j, lo, hi);
        }
        for (auto& th : threads) th.join();
    };

    // pass 1: optimum
    std::vector<double> bests(jobs, -std::numeric_limits<double>::infinity());
    std::vector<std::uint64_t> counts(jobs, 0);
    chunked([&](int j, std::uint64_t lo, std::uint64_t hi) {
        run_chunk(lo, hi, false, 0, &bests[j], nullptr, &counts[j]);
    });
    double optimum = *std::max_element(bests.begin(), bests.end());

    // pass 2: witnesses within tie tolerance
    std::vector<std::set<std::string>> wits(jobs);
    chunked([&](int j, std::uint64_t lo, std::uint64_t hi) {
        run_chunk(lo, hi, true, optimum, nullptr, &wits[j], nullptr);
    });

    ExtremalResult res;
    res.objective = objective;
    res.n = n;
    res.optimum = objective == Objective::min_lambda_n ? -optimum : optimum;
    std::set<std::string> merged;
    for (auto& w : wits) merged.insert(w.begin(), w.end());
    res.witnesses.assign(merged.begin(), merged.end());
    for (auto c : counts) res.trees_scanned += c;
    return res;
}

std::vector<std::uint32_t> signature_search(int n, const std::vector<std::pair<int, int>>& edges,
                                            const std::function<bool(const SignedGraph&)>& predicate,
                                            const SignatureSearchOptions& opts) {
    const int m = static_cast<int>(edges.size());
    if (m > opts.cap_edges && !opts.cap_override)
        throw std::invalid_argument("signature_search: edge count above cap (set cap_override)");
    if (m >= 32) throw std::invalid_argument("signature_search: edge count must be < 32");

    // normalized edge order must match SignedGraph::edges for mask semantics
    std::vector<std::pair<int, int>> sorted_edges;
    sorted_edges.reserve(edges.size());
    for (auto [u, v] : edges) sorted_edges.emplace_back(std::min(u, v), std::max(u, v));
    std::sort(sorted_edges.begin(), sorted_edges.end());

    // switching orbit minimum, used when deduplicating
    auto orbit_min = [&](std::uint32_t sig) {
        std::uint32_t best = sig;
        for (std::uint32_t u_mask = 0; u_mask < (1u << (n - 1)); ++u_mask) {
            std::uint32_t sw = sig;
            for (int i = 0; i < m; ++i) {
                auto [a, b] = sorted_edges[i];
                bool ina = a != 0 && (u_mask >> (a - 1) & 1u);
                bool inb = b != 0 && (u_mask >> (b - 1) & 1u);
                if (ina != inb) sw ^= 1u << i;
            }
            best = std::min(best, sw);
        }
        return best;
    };

    std::vector<std::uint32_t> hits;
    for (std::uint32_t sig = 0; sig < (1u << m); ++sig) {
        if (opts.dedupe_switching && orbit_min(sig) != sig) continue;
        std::vector<SignedEdge> se;
        se.reserve(m);
        for (int i = 0; i < m; ++i)
            se.push_back({sorted_edges[i].first, sorted_edges[i].second, (sig >> i & 1u) ? -1 : 1});
        SignedGraph g(n, std::move(se));
        if (predicate(g)) hits.push_back(sig);
    }
    return hits;
}

bool all_triangles_positive(const SignedGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int sab = g.edge_sign(a, b);
            if (sab == 0) continue;
            for (int c = b + 1; c < n; ++c) {
                int sac = g.edge_sign(a, c), sbc = g.edge_sign(b, c);
                if (sac != 0 && sbc != 0 && sab * sac * sbc < 0) return false;
            }
        }
    return true;
}

namespace {

bool all_triangles_negative(const SignedGraph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int sab = g.edge_sign(a, b);
            if (sab == 0) continue;
            for (int c = b + 1; c < n; ++c) {
                int sac = g.edge_sign(a, c), sbc = g.edge_sign(b, c);
                if (sac != 0 && sbc != 0 && sab * sac * sbc > 0) return false;
            }
        }
    return true;
}

constexpr double kEqTol = 1e-9;

double max_least_eigenvalue(const SignedGraph& g) {
    auto [dmax, dmin] = distance_matrices(g);
    return std::max(eigenvalues_symmetric(dmax).lambda_n(),
                    eigenvalues_symmetric(dmin).lambda_n());
}

// canonical masks of the d = 3 equality catalog at order n
std::vector<std::uint64_t> d3_equality_catalog(int n) {
    std::vector<std::uint64_t> catalog;
    auto to_mask = [&](const std::vector<std::pair<int, int>>& edges) {
        auto pairs = all_pairs(n);
        std::uint64_t mask = 0;
        for (auto [u, v] : edges) {
            auto key = std::minmax(u, v);
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (pairs[i] == std::pair{key.first, key.second}) mask |= 1ull << i;
        }
        return canonical_mask(n, mask);
    };
    // S+_{2,n-2}; n = 4 degenerates to P4
    std::vector<std::pair<int, int>> splus{{0, 1}, {1, 2}, {2, 3}};
    for (int i = 4; i < n; ++i) {
        splus.emplace_back(1, i);
        splus.emplace_back(2, i);
    }
    catalog.push_back(to_mask(splus));
    if (n == 6) {
        // net: triangle with a pendant on each vertex
        catalog.push_back(to_mask({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}}));
        // K4 plus two pendants on distinct vertices
        catalog.push_back(to_mask(
            {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}}));
    }
    return catalog;
}

void scan_exhaustive(VerificationReport& rep, int n_max, int d) {
    const double bound = distance_bound(d);
    const char* anchor = d == 2 ? "diameter-2 least-eigenvalue bound"
                                : "diameter-3 least-eigenvalue bound";
    std::uint64_t instances = 0, equality = 0;
    std::uint64_t eq_balanced_cmp = 0, eq_unbalanced_tripartite = 0, eq_splus = 0, eq_extra = 0;
    std::string violation;

    for (int n = 3; n <= n_max; ++n) {
        for (const auto& cls : connected_graph_classes(n)) {
            if (graph_diameter(n, cls.mask) != d) continue;
            auto parts = complete_multipartite_parts(n, cls.mask);
            auto catalog = d == 3 ? d3_equality_catalog(n) : std::vector<std::uint64_t>{};
            bool in_catalog = d == 3 && std::find(catalog.begin(), catalog.end(),
                                                  canonical_mask(n, cls.mask)) != catalog.end();
            const int m = static_cast<int>(mask_edges(n, cls.mask).size());
            for (std::uint64_t sig = 0; sig < (1ull << m); ++sig) {
                SignedGraph g = signed_from_masks(n, cls.mask, sig);
                double val = max_least_eigenvalue(g);
                ++instances;
                if (val > bound + kEqTol) {
                    violation = "bound violated: n=" + std::to_string(n) + " mask=" +
                                std::to_string(cls.mask) + " sig=" + std::to_string(sig) +
                                " value=" + std::to_string(val);
                    break;
                }
                bool eq = val > bound - kEqTol;
                bool predicted;
                if (d == 2) {
                    bool balanced = is_balanced(g).balanced;
                    bool cmp = parts.has_value();
                    bool lemma53 = !balanced && cmp && *parts == 3 &&
                                   compatible_distance_matrix(g).compatible() &&
                                   all_triangles_negative(g);
                    predicted = (balanced && cmp) || lemma53;
                    if (eq && balanced && cmp) ++eq_balanced_cmp;
                    if (eq && lemma53) ++eq_unbalanced_tripartite;
                } else {
                    predicted = in_catalog && all_triangles_positive(g);
                    if (eq && predicted) ++eq_splus;
                }
                if (eq != predicted) {
                    ++eq_extra;
                    violation = "equality classification mismatch: n=" + std::to_string(n) +
                                " mask=" + std::to_string(cls.mask) + " sig=" +
                                std::to_string(sig) + " value=" + std::to_string(val);
                    break;
                }
                if (eq) ++equality;
            }
            if (!violation.empty()) break;
        }
        if (!violation.empty()) break;
    }

    if (!violation.empty()) {
        rep.add("d" + std::to_string(d) + "-scan", anchor, ClaimStatus::violated, violation);
        return;
    }
    std::ostringstream det;
    det << instances << " signed graphs, " << equality << " equality cases";
    if (d == 2) {
        det << " (" << eq_balanced_cmp << " balanced complete multipartite, "
            << eq_unbalanced_tripartite
            << " unbalanced complete 3-partite with aligned 2-paths and negative triangles;"
            << " the statement names only the balanced class)";
        rep.add("d2-bound", anchor, ClaimStatus::verified,
                std::to_string(instances) + " instances <= -2");
        rep.add("d2-equality", "diameter-2 equality characterization",
                eq_unbalanced_tripartite > 0 ? ClaimStatus::resolved_discrepancy
                                             : ClaimStatus::verified,
                det.str());
    } else {
        det << " (all on the S+ family";
        if (n_max >= 6) det << " plus the net and K4-with-two-pendants classes at n=6";
        det << ", each with every triangle positive)";
        rep.add("d3-bound", anchor, ClaimStatus::verified,
                std::to_string(instances) + " instances <= -2-sqrt(2)");
        rep.add("d3-equality", "diameter-3 equality characterization",
                n_max >= 6 ? ClaimStatus::resolved_discrepancy : ClaimStatus::verified,
                det.str());
    }
}

std::uint64_t random_tree_with_diameter(int n, int d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> vert(0, n - 1);
    std::vector<int> seq(n - 2);
    auto pairs = all_pairs(n);
    for (;;) {
        for (auto& x : seq) x = vert(rng);
        LabeledTree t = prufer_decode(seq, n);
        if (tree_diameter(t) != d) continue;
        std::uint64_t mask = 0;
        for (auto [u, v] : t.edges)
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if (pairs[i] == std::pair{u, v}) mask |= 1ull << i;
        return mask;
    }
}

void scan_sampled(VerificationReport& rep, int n_max, int d, const DiameterScanOptions& opts) {
    const double bound = distance_bound(d);
    const double bal_bound = balanced_distance_bound(d);
    std::uint64_t checked = 0;
    double worst = -std::numeric_limits<double>::infinity();
    double worst_bal = -std::numeric_limits<double>::infinity();
    std::string violation;

    for (int n = d + 1; n <= n_max && violation.empty(); ++n) {
        std::mt19937_64 rng(opts.seed ^ (static_cast<std::uint64_t>(n) << 32 | d));
        auto pairs = all_pairs(n);
        for (int s = 0; s < opts.samples && violation.empty(); ++s) {
            std::uint64_t mask = random_tree_with_diameter(n, d, rng);
            // random chords that keep the diameter
            std::uniform_int_distribution<int> coin(0, 3);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if (mask >> i & 1u) continue;
                if (coin(rng) != 0) continue;
                std::uint64_t with = mask | (1ull << i);
                if (graph_diameter(n, with) == d) mask = with;
            }
            const int m = static_cast<int>(mask_edges(n, mask).size());
            std::uniform_int_distribution<std::uint64_t> sig_dist(0, (1ull << m) - 1);
            SignedGraph g = signed_from_masks(n, mask, sig_dist(rng));
            double val = max_least_eigenvalue(g);
            worst = std::max(worst, val);
            ++checked;
            if (val > bound + kEqTol)
                violation = "sampled bound violated: n=" + std::to_string(n) + " mask=" +
                            std::to_string(mask) + " value=" + std::to_string(val);

            // balanced companion signature from random vertex signs
            std::uniform_int_distribution<std::uint32_t> theta_dist(0, (1u << n) - 1);
            std::uint32_t theta = theta_dist(rng);
            std::uint64_t bal_sig = 0;
            auto edges = mask_edges(n, mask);
            for (std::size_t i = 0; i < edges.size(); ++i) {
                bool tu = theta >> edges[i].first & 1u, tv = theta >> edges[i].second & 1u;
                if (tu != tv) bal_sig |= 1ull << i;
            }
            SignedGraph gb = signed_from_masks(n, mask, bal_sig);
            double bval = max_least_eigenvalue(gb);
            worst_bal = std::max(worst_bal, bval);
            if (bval > std::min(bound, bal_bound) + kEqTol)
                violation = "balanced sampled bound violated: n=" + std::to_string(n) +
                            " mask=" + std::to_string(mask) + " value=" + std::to_string(bval);
        }
    }

    std::ostringstream det;
    det << checked << " sampled graphs per signature kind, worst=" << worst
        << ", balanced worst=" << worst_bal << " vs -4(d-1)/3=" << bound
        << " and -2d+3=" << bal_bound;
    rep.add("d" + std::to_string(d) + "-sampled-bound", "diameter >= 4 least-eigenvalue bound",
            violation.empty() ? ClaimStatus::verified : ClaimStatus::violated,
            violation.empty() ? det.str() : violation);
}

}  // namespace

VerificationReport diameter_bound_scan(int n_max, int d, const DiameterScanOptions& opts) {
    if (d < 2) throw std::invalid_argument("diameter_bound_scan: d >= 2 required");
    VerificationReport rep;
    rep.suite = "diameter-d" + std::to_string(d);
    rep.seed = opts.seed;
    if (d <= 3) {
        if (n_max > 6) throw std::invalid_argument("diameter_bound_scan: exhaustive scan capped at n_max = 6");
        scan_exhaustive(rep, n_max, d);
    } else {
        scan_sampled(rep, n_max, d, opts);
    }
    return rep;
}

}  // namespace signed_spectra
