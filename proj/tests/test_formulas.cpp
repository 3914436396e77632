#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "signed_spectra/charpoly.hpp"
#include "signed_spectra/formulas.hpp"
#include "signed_spectra/linalg.hpp"
#include "signed_spectra/matrices.hpp"
#include "signed_spectra/trees.hpp"

using namespace signed_spectra;

namespace {

IntPolynomial exact_double_star(int n, int s, int t) {
    return char_poly_exact(
        adjacency_matrix(complete_with_negative_subgraph(n, double_star(s, t).edges)));
}

IntPolynomial exact_linked_stars(int n, int a, int b) {
    return char_poly_exact(
        adjacency_matrix(complete_with_negative_subgraph(n, linked_stars(a, b).edges)));
}

IntPolynomial exact_s_plus(int n, int tri, std::uint64_t seed = 0) {
    return char_poly_exact(*compatible_distance_matrix(s_plus_graph(n, tri, seed)).dpm);
}

double least_root(const IntPolynomial& p) { return real_roots(p).front(); }

constexpr double kS2 = -3.41421356237309504880;

}  // namespace

TEST_CASE("double star closed form equals the exact charpoly") {
    CHECK(charpoly_double_star(7, 2, 3) == exact_double_star(7, 2, 3));  // u = 0
    CHECK(charpoly_double_star(4, 1, 1) == exact_double_star(4, 1, 1));  // degenerate n < 5
    CHECK(charpoly_double_star(9, 2, 4) == exact_double_star(9, 2, 4));

    // (n, 1, n-3) reduces to the cubic form
    for (int n = 6; n <= 9; ++n) {
        IntPolynomial cubic_form =
            linear_power(1, n - 3) *
            IntPolynomial::from_coeffs({BigInt(7 * n - 23), BigInt(3 - 2 * n), BigInt(3 - n), BigInt(1)});
        CHECK(charpoly_double_star(n, 1, n - 3) == cubic_form);
        // value at n-2 is -(n-5)^2 (n-1)^(n-3), negative for n != 5
        BigInt at = cubic_form.evaluate(BigInt(n - 2));
        BigInt want = -BigInt(n - 5) * (n - 5);
        for (int k = 0; k < n - 3; ++k) want *= (n - 1);
        CHECK(at == want);
    }
    CHECK_THROWS_AS(charpoly_double_star(4, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(charpoly_double_star(4, 2, 1), std::invalid_argument);
}

TEST_CASE("linked stars: the proof quintic is the correct one") {
    for (auto [n, a, b] : std::vector<std::array<int, 3>>{{6, 3, 3}, {6, 4, 2}, {7, 4, 3},
                                                          {8, 4, 4}, {9, 5, 4}, {10, 5, 5}}) {
        IntPolynomial exact = exact_linked_stars(n, a, b);
        CHECK(charpoly_linked_stars(n, a, b, ClosedFormVariant::resolved) == exact);
        CHECK(charpoly_linked_stars(n, a, b, ClosedFormVariant::as_printed) != exact);
    }
    CHECK_THROWS_AS(charpoly_linked_stars(6, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(charpoly_linked_stars(5, 3, 2), std::invalid_argument);
}

TEST_CASE("linked stars: even-n factorization h1*h2") {
    for (int n : {6, 8, 10}) {
        int a = n / 2;
        IntPolynomial h1 =
            IntPolynomial::from_coeffs({BigInt(13 - 3 * n), BigInt(6 - n), BigInt(1)});
        IntPolynomial h2 = IntPolynomial::from_coeffs(
            {BigInt(2 * n - 13), BigInt(3 - 2 * n), BigInt(1), BigInt(1)});
        IntPolynomial whole = linear_power(1, n - 6) *
                              IntPolynomial::from_coeffs({BigInt(-1), BigInt(1)}) * h1 * h2;
        CHECK(charpoly_linked_stars(n, a, a) == whole);
    }
}

TEST_CASE("linked stars least-eigenvalue window") {
    // lambda_n < -4 for n >= 8; lambda_n > 2-n for n >= 6
    for (int n = 6; n <= 10; ++n) {
        int a = (n + 1) / 2, b = n / 2;
        double ln = least_root(charpoly_linked_stars(n, a, b));
        CHECK(ln > 2.0 - n);
        if (n >= 8) CHECK(ln < -4.0);
        if (n <= 7) CHECK(ln > -4.0 - 1e-9);
    }
}

TEST_CASE("s_plus closed forms") {
    CHECK(charpoly_s_plus(6, 1) == exact_s_plus(6, 1));
    CHECK(charpoly_s_plus(6, -1) == exact_s_plus(6, -1));
    CHECK(charpoly_s_plus(9, -1) == exact_s_plus(9, -1, 17));
    CHECK(charpoly_s_plus(6, -1, ClosedFormVariant::as_printed) != exact_s_plus(6, -1));
    // positive-triangle case: least root is exactly -2-sqrt(2) for all n
    for (int n : {5, 6, 8, 12}) {
        CHECK(std::abs(least_root(charpoly_s_plus(n, 1)) - kS2) < 1e-9);
    }
    // negative-triangle case: strictly below for n >= 5
    for (int n : {5, 6, 8, 12}) {
        CHECK(least_root(charpoly_s_plus(n, -1)) < kS2 - 1e-6);
    }
    CHECK_THROWS_AS(charpoly_s_plus(4, 1), std::invalid_argument);
}

TEST_CASE("seed only switches the signature, not the spectrum") {
    IntPolynomial base = exact_s_plus(7, 1, 0);
    CHECK(exact_s_plus(7, 1, 5) == base);
    CHECK(exact_s_plus(7, 1, 9) == base);
    CHECK(exact_s_plus(7, 1, 63) == base);
}

TEST_CASE("distance bounds") {
    CHECK(distance_bound(2) == doctest::Approx(-2.0));
    CHECK(distance_bound(3) == doctest::Approx(-2.0 - std::sqrt(2.0)));
    CHECK(distance_bound(4) == doctest::Approx(-4.0));
    CHECK(distance_bound(7) == doctest::Approx(-8.0));
    CHECK(balanced_distance_bound(4) == doctest::Approx(-5.0));
    CHECK_THROWS_AS(distance_bound(1), std::invalid_argument);
    CHECK_THROWS_AS(balanced_distance_bound(3), std::invalid_argument);
}

TEST_CASE("double-star lambda_1 grows as the star unbalances") {
    // with s+t+2 = n, lambda_1(T_{s,t}) < lambda_1(T_{s-1,t+1})
    for (int n = 6; n <= 10; ++n) {
        double prev = -1e9;
        for (int s = (n - 2) / 2; s >= 1; --s) {
            int t = n - 2 - s;
            double l1 = real_roots(charpoly_double_star(n, s, t)).back();
            CHECK(l1 > prev + 1e-9);
            prev = l1;
        }
        // and the winner beats n-2
        CHECK(prev > n - 2);
    }
}
