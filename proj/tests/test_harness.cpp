#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "signed_spectra/harness.hpp"
#include "signed_spectra/linalg.hpp"
#include "signed_spectra/matrices.hpp"
#include "signed_spectra/signed_graph.hpp"
#include "signed_spectra/report.hpp"
#include "signed_spectra/search.hpp"

using namespace signed_spectra;

namespace {

const ClaimResult* find_claim(const VerificationReport& rep, const std::string& id) {
    for (const auto& c : rep.claims)
        if (c.id == id) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("proof-matrix suite") {
    VerificationReport rep = verify_proof_matrices();
    CHECK(!rep.any_violated());
    REQUIRE(find_claim(rep, "pm-p4-family"));
    CHECK(find_claim(rep, "pm-p4-family")->status == ClaimStatus::resolved_discrepancy);
    REQUIRE(find_claim(rep, "pm-a2b2-family"));
    CHECK(find_claim(rep, "pm-a2b2-family")->status == ClaimStatus::resolved_discrepancy);
    CHECK(find_claim(rep, "pm-2path-families")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "pm-unbalanced-k4")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "pm-unbalanced-k3")->status == ClaimStatus::verified);
}

TEST_CASE("forbidden-subgraph suite") {
    VerificationReport rep = verify_forbidden_subgraphs();
    CHECK(!rep.any_violated());
    CHECK(find_claim(rep, "fs-transcription")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "fs-P4")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "fs-H5")->status == ClaimStatus::resolved_discrepancy);
    CHECK(find_claim(rep, "fs-H6")->status == ClaimStatus::verified);
}

TEST_CASE("classification suite at n <= 5") {
    VerificationReport rep = verify_classification(false);
    CHECK(!rep.any_violated());
    CHECK(find_claim(rep, "cls-neg1")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "cls-gap")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "cls-neg2")->status == ClaimStatus::resolved_discrepancy);
    CHECK(find_claim(rep, "cls-cospectral")->status == ClaimStatus::verified);
    CHECK(find_claim(rep, "cls-allneg-multipartite")->status == ClaimStatus::verified);
}

TEST_CASE("monotonicity suite") {
    VerificationReport rep = verify_monotonicity_lemmas(60, 424242);
    CHECK(!rep.any_violated());
    // both strict and degenerate instances were exercised
    for (const auto& c : rep.claims) CHECK(c.details.find("0 strict") == std::string::npos);
}

TEST_CASE("named sign-reversal instances move the extreme eigenvalues the right way") {
    // (K4, P4^-) is the n=4 lambda_n minimizer: no shared-vertex tuple can
    // satisfy x_r(x_s-x_t) >= 0 there, or the reversal would push lambda_n
    // below the minimum
    {
        SignedGraph g = complete_with_negative_subgraph(4, {{0, 1}, {1, 2}, {2, 3}});
        EigenSystem es = eigen_system(adjacency_matrix(g));
        Eigen::VectorXd x = es.vectors.col(3);
        for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s)
                for (int t = 0; t < 4; ++t) {
                    if (r == s || r == t || s == t) continue;
                    if (g.edge_sign(r, s) != 1 || g.edge_sign(r, t) != -1) continue;
                    CHECK(x(r) * (x(s) - x(t)) < 0);
                }
    }
    // (K5, T_{1,2}^-) is not lambda_n-extremal: a tuple exists and the
    // reversal must not raise lambda_n
    {
        SignedGraph g = complete_with_negative_subgraph(5, double_star(1, 2).edges);
        EigenSystem es = eigen_system(adjacency_matrix(g));
        Eigen::VectorXd x = es.vectors.col(4);
        bool tried = false;
        for (int r = 0; r < 5 && !tried; ++r)
            for (int s = 0; s < 5 && !tried; ++s)
                for (int t = 0; t < 5 && !tried; ++t) {
                    if (r == s || r == t || s == t) continue;
                    if (g.edge_sign(r, s) != 1 || g.edge_sign(r, t) != -1) continue;
                    if (x(r) * (x(s) - x(t)) < 0) continue;
                    SignedGraph flipped = reverse_sign_pair(g, {r, s}, {r, t});
                    double lnp = eigenvalues_symmetric(adjacency_matrix(flipped)).lambda_n();
                    CHECK(lnp <= es.values(4) + 1e-9);
                    tried = true;
                }
        CHECK(tried);
    }
    // (K5, T_{2,1}^-): Lemma on lambda_1, reversal must not lower lambda_1
    {
        SignedGraph g = complete_with_negative_subgraph(5, double_star(2, 1).edges);
        EigenSystem es = eigen_system(adjacency_matrix(g));
        Eigen::VectorXd x = es.vectors.col(0);
        bool tried = false;
        for (int r = 0; r < 5 && !tried; ++r)
            for (int s = 0; s < 5 && !tried; ++s)
                for (int t = 0; t < 5 && !tried; ++t) {
                    if (r == s || r == t || s == t) continue;
                    if (g.edge_sign(r, s) != 1 || g.edge_sign(r, t) != -1) continue;
                    bool hyp = (x(r) >= 0 && x(t) >= x(s)) || (x(r) <= 0 && x(t) <= x(s));
                    if (!hyp) continue;
                    SignedGraph flipped = reverse_sign_pair(g, {r, s}, {r, t});
                    double l1p = eigenvalues_symmetric(adjacency_matrix(flipped)).lambda_1();
                    CHECK(l1p >= es.values(0) - 1e-9);
                    tried = true;
                }
        CHECK(tried);
    }
}

TEST_CASE("report bookkeeping") {
    VerificationReport rep;
    rep.suite = "x";
    rep.add("a", "anchor", ClaimStatus::verified);
    CHECK(!rep.any_violated());
    rep.add("b", "anchor", ClaimStatus::resolved_discrepancy);
    CHECK(!rep.any_violated());
    rep.add("c", "anchor", ClaimStatus::violated, "counterexample");
    CHECK(rep.any_violated());
    CHECK(to_string(ClaimStatus::resolved_discrepancy) == "resolved-discrepancy");
}

TEST_CASE("reports are deterministic for a fixed seed") {
    VerificationReport a = verify_monotonicity_lemmas(30, 99);
    VerificationReport b = verify_monotonicity_lemmas(30, 99);
    CHECK(a.to_json() == b.to_json());

    DiameterScanOptions opts;
    opts.samples = 10;
    CHECK(diameter_bound_scan(6, 4, opts).to_json() == diameter_bound_scan(6, 4, opts).to_json());
}

TEST_CASE("diameter d=2 scan reports the unbalanced tripartite equality family") {
    VerificationReport rep = diameter_bound_scan(5, 2);
    CHECK(!rep.any_violated());
    const ClaimResult* eq = find_claim(rep, "d2-equality");
    REQUIRE(eq);
    CHECK(eq->status == ClaimStatus::resolved_discrepancy);
}
