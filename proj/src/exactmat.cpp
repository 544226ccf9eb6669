#include "leonard/exactmat.hpp"

#include <omp.h>

#include <algorithm>

namespace leonard {

FieldMatrix FieldMatrix::identity(size_t n) {
    FieldMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = RationalFunction(1);
    return m;
}

FieldMatrix FieldMatrix::diagonal(const FieldVector& d) {
    FieldMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError();
    FieldMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError();
    FieldMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

FieldMatrix multiply_serial(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols() != b.rows()) throw SizeMismatchError("product dimension mismatch");
    FieldMatrix r(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) {
            RationalFunction acc;
            for (size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r(i, j) = acc;
        }
    return r;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
    if (cols_ != o.rows_) throw SizeMismatchError("product dimension mismatch");
    const long n = static_cast<long>(rows_ * o.cols_);
    if (n < 16) return multiply_serial(*this, o);
    FieldMatrix r(rows_, o.cols_);
    // Entries are exact polynomial fractions of very uneven cost.
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < n; ++idx) {
        size_t i = static_cast<size_t>(idx) / o.cols_, j = static_cast<size_t>(idx) % o.cols_;
        RationalFunction acc;
        for (size_t k = 0; k < cols_; ++k) acc += (*this)(i, k) * o(k, j);
        r(i, j) = acc;
    }
    return r;
}

FieldMatrix FieldMatrix::operator*(const RationalFunction& s) const {
    FieldMatrix r(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

FieldVector FieldMatrix::operator*(const FieldVector& v) const {
    if (cols_ != v.size()) throw SizeMismatchError("matrix-vector dimension mismatch");
    FieldVector r(rows_);
    for (size_t i = 0; i < rows_; ++i) {
        RationalFunction acc;
        for (size_t k = 0; k < cols_; ++k) acc += (*this)(i, k) * v[k];
        r[i] = acc;
    }
    return r;
}

bool FieldMatrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](const RationalFunction& x) { return x.is_zero(); });
}

RationalFunction FieldMatrix::trace() const {
    RationalFunction t;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

FieldVector FieldMatrix::diagonal_entries() const {
    FieldVector d(std::min(rows_, cols_));
    for (size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
    return d;
}

FieldMatrix FieldMatrix::transpose() const {
    FieldMatrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

// ---------------------------------------------------------------------------
// structural predicates
// ---------------------------------------------------------------------------

bool is_tridiagonal(const FieldMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if ((i > j ? i - j : j - i) >= 2 && !m(i, j).is_zero()) return false;
    return true;
}

bool is_irreducible_tridiagonal(const FieldMatrix& m) {
    if (!is_tridiagonal(m)) return false;
    for (size_t i = 0; i + 1 < m.rows(); ++i)
        if (m(i + 1, i).is_zero() || m(i, i + 1).is_zero()) return false;
    return true;
}

bool is_lbtd_pair(const FieldMatrix& a, const FieldMatrix& astar) {
    if (!a.is_square() || !astar.is_square()) throw NotSquareError();
    if (a.rows() != astar.rows()) throw SizeMismatchError();
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) {
            if (i == j) continue;
            if (i == j + 1) {
                if (!a(i, j).is_one()) return false;
            } else if (!a(i, j).is_zero()) {
                return false;
            }
        }
    return is_irreducible_tridiagonal(astar);
}

// ---------------------------------------------------------------------------
// elimination
// ---------------------------------------------------------------------------

namespace {

// In-place Gauss-Jordan on [M | rhs block]; first nonzero pivot per column.
// Returns false when M is singular.
bool gauss_jordan(FieldMatrix& m, size_t basis_cols) {
    const size_t n = m.rows();
    for (size_t col = 0; col < basis_cols; ++col) {
        size_t piv = col;
        while (piv < n && m(piv, col).is_zero()) ++piv;
        if (piv == n) return false;
        if (piv != col)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(col, j));
        RationalFunction inv = m(col, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m(col, j) = m(col, j) * inv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || m(i, col).is_zero()) continue;
            RationalFunction f = m(i, col);
            for (size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return true;
}

}  // namespace

FieldVector solve(const FieldMatrix& m, const FieldVector& rhs) {
    if (!m.is_square()) throw NotSquareError();
    if (rhs.size() != m.rows()) throw SizeMismatchError("rhs length mismatch");
    const size_t n = m.rows();
    FieldMatrix aug(n, n + 1);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = rhs[i];
    }
    if (!gauss_jordan(aug, n)) throw SingularMatrixError();
    FieldVector x(n);
    for (size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

FieldMatrix inverse(const FieldMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    const size_t n = m.rows();
    FieldMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = RationalFunction(1);
    }
    if (!gauss_jordan(aug, n)) throw SingularMatrixError();
    FieldMatrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

namespace {

bool strictly_lower_triangular_part_only(const FieldMatrix& p) {
    for (size_t i = 0; i < p.rows(); ++i) {
        if (p(i, i).is_zero()) return false;
        for (size_t j = i + 1; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) return false;
    }
    return true;
}

// X = P^-1 B for lower-triangular P, forward substitution per column.
FieldMatrix forward_solve_columns(const FieldMatrix& p, const FieldMatrix& b) {
    const size_t n = p.rows();
    FieldMatrix x(n, b.cols());
    const long cols = static_cast<long>(b.cols());
#pragma omp parallel for schedule(dynamic)
    for (long j = 0; j < cols; ++j) {
        for (size_t i = 0; i < n; ++i) {
            RationalFunction acc = b(i, static_cast<size_t>(j));
            for (size_t k = 0; k < i; ++k) acc -= p(i, k) * x(k, static_cast<size_t>(j));
            x(i, static_cast<size_t>(j)) = acc / p(i, i);
        }
    }
    return x;
}

}  // namespace

FieldMatrix conjugate(const FieldMatrix& m, const FieldMatrix& p) {
    if (!m.is_square() || !p.is_square()) throw NotSquareError();
    if (m.rows() != p.rows()) throw SizeMismatchError();
    const size_t n = m.rows();
    FieldMatrix mp = m * p;
    if (strictly_lower_triangular_part_only(p)) return forward_solve_columns(p, mp);
    // Solve P X = M P column-block-wise in one elimination.
    FieldMatrix aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            aug(i, j) = p(i, j);
            aug(i, n + j) = mp(i, j);
        }
    if (!gauss_jordan(aug, n)) throw SingularMatrixError();
    FieldMatrix r(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

// ---------------------------------------------------------------------------
// determinant (Bareiss on the denominator-cleared polynomial matrix)
// ---------------------------------------------------------------------------

RationalFunction determinant(const FieldMatrix& m) {
    if (!m.is_square()) throw NotSquareError();
    const size_t n = m.rows();
    if (n == 0) return RationalFunction(1);
    // Clear denominators row by row; row i is scaled by the polynomial l_i.
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
    Poly scale(1);
    for (size_t i = 0; i < n; ++i) {
        Poly l(1);
        for (size_t j = 0; j < n; ++j) {
            const Poly& d = m(i, j).den();
            l = l * d.divide_exact(Poly::gcd(l, d));  // lcm
        }
        for (size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j).num() * l.divide_exact(m(i, j).den());
        scale = scale * l;
    }
    bool negate = false;
    Poly prev(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && a[piv][k].is_zero()) ++piv;
            if (piv == n) return RationalFunction();
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    Poly det = a[n - 1][n - 1];
    if (negate) det = -det;
    return RationalFunction::normalized(det, scale);
}

// ---------------------------------------------------------------------------
// kernels and eigenbases
// ---------------------------------------------------------------------------

std::vector<FieldVector> nullspace(const FieldMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    FieldMatrix r = m;
    std::vector<long> pivot_of_col(cols, -1);
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && r(piv, col).is_zero()) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (size_t j = 0; j < cols; ++j) std::swap(r(piv, j), r(rank, j));
        RationalFunction inv = r(rank, col).inverse();
        for (size_t j = col; j < cols; ++j) r(rank, j) = r(rank, j) * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == rank || r(i, col).is_zero()) continue;
            RationalFunction f = r(i, col);
            for (size_t j = col; j < cols; ++j) r(i, j) = r(i, j) - f * r(rank, j);
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<FieldVector> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        FieldVector v(cols);
        v[free] = RationalFunction(1);
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = -r(static_cast<size_t>(pivot_of_col[col]), free);
        // normalize: first nonzero coordinate = 1
        for (size_t i = 0; i < cols; ++i) {
            if (v[i].is_zero()) continue;
            RationalFunction inv = v[i].inverse();
            for (size_t j = 0; j < cols; ++j) v[j] = v[j] * inv;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

bool is_lower_bidiagonal(const FieldMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if ((j > i || i > j + 1) && !m(i, j).is_zero()) return false;
    return true;
}

// Forward substitution for lower-bidiagonal M; returns empty when lambda is
// not on the diagonal or the substitution degenerates (duplicate diagonal hit).
FieldVector bidiagonal_eigenvector(const FieldMatrix& m, const RationalFunction& lambda) {
    const size_t n = m.rows();
    size_t r = 0;
    while (r < n && m(r, r) != lambda) ++r;
    if (r == n) throw NotAnEigenvalueError();
    FieldVector v(n);
    v[r] = RationalFunction(1);
    for (size_t i = r + 1; i < n; ++i) {
        RationalFunction diag = m(i, i) - lambda;
        if (diag.is_zero()) return {};  // fall back to the general path
        v[i] = -(m(i, i - 1) * v[i - 1]) / diag;
    }
    return v;
}

// Three-term recurrence for irreducible tridiagonal M.
FieldVector tridiagonal_eigenvector(const FieldMatrix& m, const RationalFunction& lambda) {
    const size_t n = m.rows();
    FieldVector v(n);
    v[0] = RationalFunction(1);
    if (n > 1) v[1] = (lambda - m(0, 0)) / m(0, 1);
    for (size_t i = 1; i + 1 < n; ++i)
        v[i + 1] = ((lambda - m(i, i)) * v[i] - m(i, i - 1) * v[i - 1]) / m(i, i + 1);
    RationalFunction last = (n > 1)
        ? m(n - 1, n - 2) * v[n - 2] + (m(n - 1, n - 1) - lambda) * v[n - 1]
        : m(0, 0) - lambda;
    if (!last.is_zero()) throw NotAnEigenvalueError();
    return v;
}

}  // namespace

FieldMatrix eigenbasis_for(const FieldMatrix& m, const FieldVector& eigenvalues) {
    if (!m.is_square()) throw NotSquareError();
    const size_t n = m.rows();
    if (eigenvalues.size() != n) throw SizeMismatchError("eigenvalue count mismatch");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (eigenvalues[i] == eigenvalues[j])
                throw Error("eigenvalue list is not mutually distinct");

    const bool bidiag = is_lower_bidiagonal(m);
    const bool tridiag = !bidiag && is_irreducible_tridiagonal(m);
    FieldMatrix p(n, n);
    for (size_t r = 0; r < n; ++r) {
        FieldVector v;
        if (bidiag) v = bidiagonal_eigenvector(m, eigenvalues[r]);
        if (!bidiag && tridiag) v = tridiagonal_eigenvector(m, eigenvalues[r]);
        if (v.empty()) {
            FieldMatrix shifted = m - FieldMatrix::identity(n) * eigenvalues[r];
            auto basis = nullspace(shifted);
            if (basis.empty()) throw NotAnEigenvalueError();
            if (basis.size() > 1) throw DegenerateEigenvalueError();
            v = basis[0];
        }
        for (size_t i = 0; i < n; ++i) p(i, r) = v[i];
    }
    return p;
}

}  // namespace leonard
