#ifndef PHGJ_LINALG_HPP
#define PHGJ_LINALG_HPP

#include <cstddef>
#include <vector>

namespace phgj {

/// Minimal dense row-major matrix, sized at construction.
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Solve A x = b by Gaussian elimination with partial pivoting.
/// Throws Error on (numerically) singular A.
std::vector<double> solve(Matrix a, std::vector<double> b);

/// Determinant via LU with partial pivoting.
double determinant(Matrix a);

/// Least-squares solution of an overdetermined system via normal equations.
std::vector<double> least_squares(const Matrix& a, const std::vector<double>& b);

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, ascending.
std::vector<double> symmetric_eigenvalues(Matrix a);

/// Eigen-decomposition of a symmetric tridiagonal matrix by implicit-shift QL
/// with Wilkinson shifts. diag/off hold the diagonal and subdiagonal; on
/// return `values` are ascending eigenvalues and `first_components[i]` is the
/// first entry of the corresponding normalized eigenvector.
struct TridiagEigen {
    std::vector<double> values;
    std::vector<double> first_components;
};
TridiagEigen tridiagonal_eigen(std::vector<double> diag, std::vector<double> off,
                               int max_iter_per_eigenvalue = 50);

} // namespace phgj

#endif
