#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tqft {

using cplx = std::complex<double>;

// Dense column-major complex matrix, sized for Hom-space blocks
// (tens of rows, not thousands). All factorizations are done in-house
// so the library carries no BLAS/LAPACK dependency.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, cplx(0, 0)) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx &operator()(std::size_t r, std::size_t c) { return a_[c * rows_ + r]; }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return a_[c * rows_ + r];
    }

    CMatrix operator*(const CMatrix &o) const;
    CMatrix operator+(const CMatrix &o) const;
    CMatrix operator-(const CMatrix &o) const;
    CMatrix scaled(cplx s) const;
    CMatrix transposed() const;

    // Max entrywise |a_ij - b_ij|; matrices must have equal shape.
    double max_abs_diff(const CMatrix &o) const;
    double max_abs() const;

    // Inverse via partial-pivot LU. Throws std::runtime_error when the
    // pivot falls below `singular_tol`.
    CMatrix inverse(double singular_tol = 1e-12) const;

    // Rank of the matrix with singular values proxied by pivot magnitude
    // in a column-pivoted elimination.
    std::size_t rank(double tol) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

// Splitting of an idempotent p (p*p = p within tol): p = embed * retract
// with retract * embed = id_rank. Throws if p is not idempotent.
struct IdempotentSplit {
    CMatrix embed;   // n x r
    CMatrix retract; // r x n
    std::size_t rank = 0;
};
IdempotentSplit split_idempotent(const CMatrix &p, double tol);

// Roots of det(xI - m) via Faddeev-LeVerrier + Durand-Kerner.
// Good enough for the small commutative spectra we meet (centers of
// Frobenius algebras); not a general-purpose eigensolver.
std::vector<cplx> eigenvalues_small(const CMatrix &m, double tol);

} // namespace tqft
