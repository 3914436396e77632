#ifndef SIGNED_SPECTRA_LINALG_HPP
#define SIGNED_SPECTRA_LINALG_HPP

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "signed_spectra/matrices.hpp"

namespace signed_spectra {

/// Eigenvalues of a symmetric matrix, descending (lambda_1 >= ... >= lambda_n).
struct Spectrum {
    Eigen::VectorXd values;

    int size() const { return static_cast<int>(values.size()); }
    double lambda_1() const { return values(0); }
    double lambda_n() const { return values(values.size() - 1); }
};

/// Full eigendecomposition; column k of `vectors` pairs with values(k).
struct EigenSystem {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // orthonormal columns
};

/// All eigenvalues of a symmetric integer matrix, each within
/// 1e-9 * (1 + ||M||_F) of the true value; deterministic across runs.
Spectrum eigenvalues_symmetric(const IntMatrix& m);

EigenSystem eigen_system(const IntMatrix& m);

/// rho(M) = max(lambda_1, -lambda_n).
double spectral_radius(const Spectrum& s);

/// Rows and columns restricted to idx, in the given order.
IntMatrix principal_submatrix(const IntMatrix& m, std::span<const int> idx);

/// Number of eigenvalues within tol of target.
int multiplicity_of(const Spectrum& s, double target, double tol = 1e-8);

}  // namespace signed_spectra

#endif
