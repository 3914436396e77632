#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signed_spectra/formulas.hpp"
#include "signed_spectra/linalg.hpp"
#include "signed_spectra/matrices.hpp"
#include "signed_spectra/search.hpp"
#include "signed_spectra/trees.hpp"

using namespace signed_spectra;

TEST_CASE("n=5 searches reproduce the stated extremal trees") {
    ExtremalResult l1 = extremal_tree_search(5, Objective::max_lambda1);
    CHECK(std::abs(l1.optimum - 3.0) < 1e-9);
    CHECK(l1.witnesses == std::vector<std::string>{tree_canonical_form(double_star(1, 2))});

    ExtremalResult ln = extremal_tree_search(5, Objective::min_lambda_n);
    CHECK(std::abs(ln.optimum + 3.0) < 1e-9);
    // the n=5 minimizer is the linked stars tree, which is P5 itself
    CHECK(ln.witnesses == std::vector<std::string>{tree_canonical_form(linked_stars(3, 2))});
    CHECK(tree_canonical_form(linked_stars(3, 2)) ==
          tree_canonical_form(LabeledTree::checked(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));

    ExtremalResult rho = extremal_tree_search(5, Objective::max_rho);
    CHECK(std::abs(rho.optimum - 3.0) < 1e-9);
    std::vector<std::string> want{tree_canonical_form(double_star(1, 2)),
                                  tree_canonical_form(LabeledTree::checked(
                                      5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}))};
    std::sort(want.begin(), want.end());
    CHECK(rho.witnesses == want);
}

TEST_CASE("n=6 searches match the double-star and linked-stars winners") {
    ExtremalResult l1 = extremal_tree_search(6, Objective::max_lambda1);
    CHECK(l1.witnesses == std::vector<std::string>{tree_canonical_form(double_star(1, 3))});
    ExtremalResult ln = extremal_tree_search(6, Objective::min_lambda_n);
    CHECK(ln.witnesses == std::vector<std::string>{tree_canonical_form(linked_stars(3, 3))});
    ExtremalResult rho = extremal_tree_search(6, Objective::max_rho);
    CHECK(rho.witnesses == std::vector<std::string>{tree_canonical_form(double_star(1, 3))});
    // trees scanned excludes the 6 stars
    CHECK(l1.trees_scanned == 1296 - 6);
}

TEST_CASE("search is deterministic across worker counts") {
    SearchOptions one;
    one.jobs = 1;
    SearchOptions four;
    four.jobs = 4;
    ExtremalResult a = extremal_tree_search(6, Objective::max_rho, one);
    ExtremalResult b = extremal_tree_search(6, Objective::max_rho, four);
    CHECK(a.optimum == b.optimum);
    CHECK(a.witnesses == b.witnesses);
    CHECK(a.trees_scanned == b.trees_scanned);
}

TEST_CASE("search respects the cap") {
    SearchOptions opts;
    opts.cap = 5;
    CHECK_THROWS_AS(extremal_tree_search(6, Objective::max_rho, opts), std::invalid_argument);
    opts.cap_override = true;
    CHECK_NOTHROW(extremal_tree_search(6, Objective::max_rho, opts));
}

TEST_CASE("rho agrees between spectrum and exact charpoly roots") {
    for (int n = 4; n <= 7; ++n) {
        // spot-check a spread of trees rather than all of them
        for (std::uint64_t idx = 0; idx < 40; ++idx) {
            std::vector<int> seq(n - 2);
            std::uint64_t x = idx * 2654435761u;
            for (int k = 0; k < n - 2; ++k) {
                seq[k] = static_cast<int>(x % n);
                x /= n;
            }
            LabeledTree t = prufer_decode(seq, n);
            IntMatrix a = adjacency_matrix(complete_with_negative_subgraph(n, t.edges));
            Spectrum s = eigenvalues_symmetric(a);
            std::vector<double> roots = real_roots(char_poly_exact(a));
            double rho_spec = spectral_radius(s);
            double rho_poly = std::max(roots.back(), -roots.front());
            CHECK(std::abs(rho_spec - rho_poly) < 1e-7);
        }
    }
}

TEST_CASE("signature_search examples") {
    // balanced signatures of K3: the four with an even number of negatives
    auto k3 = std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}};
    auto balanced = signature_search(3, k3, [](const SignedGraph& g) {
        return is_balanced(g).balanced;
    });
    CHECK(balanced.size() == 4);
    for (std::uint32_t sig : balanced) CHECK(__builtin_popcount(sig) % 2 == 0);

    // unbalanced without a negative triangle: impossible on K4
    auto k4 = std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto impossible = signature_search(4, k4, [](const SignedGraph& g) {
        return !is_balanced(g).balanced && all_triangles_positive(g);
    });
    CHECK(impossible.empty());

    SignatureSearchOptions dedupe;
    dedupe.dedupe_switching = true;
    auto classes = signature_search(3, k3, [](const SignedGraph&) { return true; }, dedupe);
    CHECK(classes.size() == 2);  // balanced and unbalanced triangle

    SignatureSearchOptions strict;
    strict.cap_edges = 2;
    CHECK_THROWS_AS(signature_search(3, k3, [](const SignedGraph&) { return true; }, strict),
                    std::invalid_argument);
}

TEST_CASE("diameter scans: exhaustive d=2 and d=3 at small n") {
    VerificationReport d2 = diameter_bound_scan(5, 2);
    CHECK(!d2.any_violated());
    VerificationReport d3 = diameter_bound_scan(5, 3);
    CHECK(!d3.any_violated());
    // at n <= 5 the d=3 equality classes are exactly the S+ family
    for (const auto& c : d3.claims)
        if (c.id == "d3-equality") CHECK(c.status == ClaimStatus::verified);
}

TEST_CASE("diameter scans: sampled d=4") {
    DiameterScanOptions opts;
    opts.samples = 40;
    VerificationReport rep = diameter_bound_scan(7, 4, opts);
    CHECK(!rep.any_violated());
}

TEST_CASE("all_triangles_positive") {
    CHECK(all_triangles_positive(complete_with_negative_subgraph(4, {})));
    CHECK(!all_triangles_positive(complete_with_negative_subgraph(4, {{0, 1}})));
    // negative edge on a triangle-free graph is fine
    SignedGraph c4(4, {{0, 1, -1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
    CHECK(all_triangles_positive(c4));
}
