#include "support/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tqft {

CMatrix CMatrix::operator*(const CMatrix &o) const {
    if (cols_ != o.rows_)
        throw std::runtime_error("CMatrix: shape mismatch in product");
    CMatrix r(rows_, o.cols_);
    for (std::size_t c = 0; c < o.cols_; ++c)
        for (std::size_t k = 0; k < cols_; ++k) {
            cplx v = o(k, c);
            if (v == cplx(0, 0))
                continue;
            for (std::size_t i = 0; i < rows_; ++i)
                r(i, c) += (*this)(i, k) * v;
        }
    return r;
}

CMatrix CMatrix::operator+(const CMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::runtime_error("CMatrix: shape mismatch in sum");
    CMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] += o.a_[i];
    return r;
}

CMatrix CMatrix::operator-(const CMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::runtime_error("CMatrix: shape mismatch in difference");
    CMatrix r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] -= o.a_[i];
    return r;
}

CMatrix CMatrix::scaled(cplx s) const {
    CMatrix r = *this;
    for (auto &v : r.a_)
        v *= s;
    return r;
}

CMatrix CMatrix::transposed() const {
    CMatrix r(cols_, rows_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t i = 0; i < rows_; ++i)
            r(c, i) = (*this)(i, c);
    return r;
}

double CMatrix::max_abs_diff(const CMatrix &o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::runtime_error("CMatrix: shape mismatch in comparison");
    double m = 0;
    for (std::size_t i = 0; i < a_.size(); ++i)
        m = std::max(m, std::abs(a_[i] - o.a_[i]));
    return m;
}

double CMatrix::max_abs() const {
    double m = 0;
    for (const auto &v : a_)
        m = std::max(m, std::abs(v));
    return m;
}

CMatrix CMatrix::inverse(double singular_tol) const {
    if (rows_ != cols_)
        throw std::runtime_error("CMatrix: inverse of non-square matrix");
    const std::size_t n = rows_;
    CMatrix a = *this;
    CMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col)))
                piv = r;
        if (std::abs(a(piv, col)) < singular_tol)
            throw std::runtime_error("CMatrix: singular matrix in inverse");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        const cplx d = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a(col, c) /= d;
            inv(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const cplx f = a(r, col);
            if (f == cplx(0, 0))
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(col, c);
                inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

std::size_t CMatrix::rank(double tol) const {
    CMatrix a = *this;
    const std::size_t n = rows_, m = cols_;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < m && rk < n; ++col) {
        std::size_t piv = rk;
        for (std::size_t r = rk + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col)))
                piv = r;
        if (std::abs(a(piv, col)) <= tol)
            continue;
        if (piv != rk)
            for (std::size_t c = 0; c < m; ++c)
                std::swap(a(piv, c), a(rk, c));
        for (std::size_t r = rk + 1; r < n; ++r) {
            const cplx f = a(r, col) / a(rk, col);
            for (std::size_t c = col; c < m; ++c)
                a(r, c) -= f * a(rk, c);
        }
        ++rk;
    }
    return rk;
}

IdempotentSplit split_idempotent(const CMatrix &p, double tol) {
    if (p.rows() != p.cols())
        throw std::runtime_error("split_idempotent: non-square input");
    if ((p * p).max_abs_diff(p) > tol)
        throw std::runtime_error("split_idempotent: input is not idempotent");
    const std::size_t n = p.rows();

    // Greedy column selection: keep columns that enlarge the span,
    // judged by the residual after modified Gram-Schmidt.
    std::vector<std::vector<cplx>> ortho; // orthonormal basis of im(p)
    std::vector<std::size_t> keep;
    const double scale = std::max(p.max_abs(), 1.0);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<cplx> v(n);
        for (std::size_t r = 0; r < n; ++r)
            v[r] = p(r, c);
        for (const auto &q : ortho) {
            cplx dot(0, 0);
            for (std::size_t r = 0; r < n; ++r)
                dot += std::conj(q[r]) * v[r];
            for (std::size_t r = 0; r < n; ++r)
                v[r] -= dot * q[r];
        }
        double nrm = 0;
        for (const auto &x : v)
            nrm += std::norm(x);
        nrm = std::sqrt(nrm);
        if (nrm > tol * scale * 10) {
            for (auto &x : v)
                x /= nrm;
            ortho.push_back(std::move(v));
            keep.push_back(c);
        }
    }
    const std::size_t rk = keep.size();
    IdempotentSplit out;
    out.rank = rk;
    out.embed = CMatrix(n, rk);
    for (std::size_t j = 0; j < rk; ++j)
        for (std::size_t r = 0; r < n; ++r)
            out.embed(r, j) = p(r, keep[j]);

    // retract = (E^H E)^{-1} E^H p ; then retract*embed = I and
    // embed*retract = p because im(embed) = im(p).
    CMatrix eh(rk, n);
    for (std::size_t j = 0; j < rk; ++j)
        for (std::size_t r = 0; r < n; ++r)
            eh(j, r) = std::conj(out.embed(r, j));
    CMatrix gram = eh * out.embed;
    out.retract = gram.inverse() * eh * p;
    return out;
}

std::vector<cplx> eigenvalues_small(const CMatrix &m, double tol) {
    if (m.rows() != m.cols())
        throw std::runtime_error("eigenvalues_small: non-square input");
    const std::size_t n = m.rows();
    if (n == 0)
        return {};

    // Faddeev-LeVerrier: characteristic polynomial coefficients.
    // x^n + c[1] x^{n-1} + ... + c[n]
    std::vector<cplx> c(n + 1, cplx(0, 0));
    c[0] = 1.0;
    CMatrix mk = CMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = m * mk;
        cplx tr(0, 0);
        for (std::size_t i = 0; i < n; ++i)
            tr += mk(i, i);
        c[k] = -tr / static_cast<double>(k);
        if (k < n)
            for (std::size_t i = 0; i < n; ++i)
                mk(i, i) += c[k];
    }

    // Durand-Kerner from staggered starting points.
    std::vector<cplx> roots(n);
    for (std::size_t i = 0; i < n; ++i)
        roots[i] = std::polar(1.0 + 0.3 * static_cast<double>(i),
                              0.7 + 2.4 * static_cast<double>(i));
    auto eval = [&](cplx x) {
        cplx v = c[0];
        for (std::size_t k = 1; k <= n; ++k)
            v = v * x + c[k];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (std::size_t i = 0; i < n; ++i) {
            cplx denom(1, 0);
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    denom *= roots[i] - roots[j];
            if (std::abs(denom) < 1e-300)
                denom = cplx(1e-300, 0);
            const cplx step = eval(roots[i]) / denom;
            roots[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < tol * 1e-3)
            break;
    }
    return roots;
}

} // namespace tqft
