#pragma once

#include <complex>
#include <vector>

namespace qsd {

using complexd = std::complex<double>;

/// Dense square complex matrix, row-major. Sized for small dimensions
/// (the sequential-measurement oracle works at d <= 8 or so); all
/// routines are O(d^3) per step with no cleverness.
struct Matrix {
    int dim = 0;
    std::vector<complexd> a;

    Matrix() = default;
    explicit Matrix(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

    static Matrix identity(int d);

    complexd &at(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const complexd &at(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }
};

Matrix multiply(const Matrix &lhs, const Matrix &rhs);
Matrix adjoint(const Matrix &m);

/// max |m - m^dagger| entrywise
double hermiticity_defect(const Matrix &m);
/// max |m - I| entrywise
double identity_defect(const Matrix &m);

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column k is the eigenvector of values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
EigenSystem hermitian_eigensystem(const Matrix &m);

/// Square root of a positive-semidefinite contraction via spectral
/// decomposition. Eigenvalues are clamped to [0, 1]; a clamp shift larger
/// than `breakdown_tol` raises NumericalBreakdown. If `max_shift` is
/// non-null the largest shift applied is written there.
Matrix psd_sqrt(const Matrix &m, double breakdown_tol = 1e-8, double *max_shift = nullptr);

}  // namespace qsd
