#ifndef SIGNED_SPECTRA_CHARPOLY_HPP
#define SIGNED_SPECTRA_CHARPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "signed_spectra/matrices.hpp"

namespace signed_spectra {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer-coefficient polynomial, coefficients ascending by degree.
/// Trailing zero coefficients are trimmed; the zero polynomial has empty c.
struct IntPolynomial {
    std::vector<BigInt> c;

    static IntPolynomial zero() { return {}; }
    static IntPolynomial constant(BigInt v);
    /// x + a
    static IntPolynomial linear(BigInt a);
    /// From ascending coefficients.
    static IntPolynomial from_coeffs(std::vector<BigInt> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const BigInt& leading() const { return c.back(); }

    BigInt evaluate(const BigInt& x) const;
    IntPolynomial derivative() const;
    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

/// (x + a)^k
IntPolynomial linear_power(BigInt a, int k);

/// Exact quotient a/b, or nullopt when b does not divide a over the rationals
/// with an integer quotient.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// det(xI - M) via the Faddeev-LeVerrier recurrence in exact integers.
IntPolynomial char_poly_exact(const IntMatrix& m);

/// All real roots (ascending, repeated per multiplicity) of a polynomial whose
/// real roots are simple within each square-free factor -- in particular any
/// characteristic polynomial of a symmetric matrix. Square-free decomposition
/// is exact (Yun); root isolation brackets between critical points and bisects
/// with exact sign evaluation at dyadic points.
std::vector<double> real_roots(const IntPolynomial& p);

}  // namespace signed_spectra

#endif
