#include "signed_spectra/linalg.hpp"

#include <stdexcept>
#include <vector>

namespace signed_spectra {

namespace {

void check_symmetric(const IntMatrix& m, const char* what) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(what) + ": matrix must be square");
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != m(j, i)) throw std::invalid_argument(std::string(what) + ": matrix must be symmetric");
}

}  // namespace

Spectrum eigenvalues_symmetric(const IntMatrix& m) {
    check_symmetric(m, "eigenvalues_symmetric");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.cast<double>(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues_symmetric: solver failed to converge");
    Spectrum s;
    s.values = solver.eigenvalues().reverse();
    return s;
}

EigenSystem eigen_system(const IntMatrix& m) {
    check_symmetric(m, "eigen_system");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.cast<double>());
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigen_system: solver failed to converge");
    EigenSystem es;
    es.values = solver.eigenvalues().reverse();
    es.vectors = solver.eigenvectors().rowwise().reverse();
    return es;
}

double spectral_radius(const Spectrum& s) {
    if (s.size() == 0) throw std::invalid_argument("spectral_radius: empty spectrum");
    return std::max(s.lambda_1(), -s.lambda_n());
}

IntMatrix principal_submatrix(const IntMatrix& m, std::span<const int> idx) {
    std::vector<char> used(m.rows(), 0);
    for (int i : idx) {
        if (i < 0 || i >= m.rows()) throw std::invalid_argument("principal_submatrix: index out of range");
        if (used[i]) throw std::invalid_argument("principal_submatrix: duplicate index");
        used[i] = 1;
    }
    IntMatrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = m(idx[r], idx[c]);
    return out;
}

int multiplicity_of(const Spectrum& s, double target, double tol) {
    if (tol <= 0) throw std::invalid_argument("multiplicity_of: tol must be positive");
    int count = 0;
    for (int i = 0; i < s.size(); ++i)
        if (std::abs(s.values(i) - target) <= tol) ++count;
    return count;
}

}  // namespace signed_spectra
