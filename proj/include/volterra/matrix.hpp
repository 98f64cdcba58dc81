#pragma once

#include <cstddef>
#include <vector>

namespace volterra {

/// Dense row-major square matrix, just enough for covariance work.
struct Matrix {
    std::size_t n = 0;
    std::vector<double> a;

    Matrix() = default;
    explicit Matrix(std::size_t size) : n(size), a(size * size, 0.0) {}

    double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

/// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
/// Returns false if a non-positive pivot appears.
bool cholesky_lower(const Matrix& in, Matrix& lower);

} // namespace volterra
