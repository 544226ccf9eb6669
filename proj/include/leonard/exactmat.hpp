#ifndef LEONARD_EXACTMAT_HPP
#define LEONARD_EXACTMAT_HPP

#include <vector>

#include "leonard/qfield.hpp"

namespace leonard {

using FieldVector = std::vector<RationalFunction>;

/**
 * Dense matrix over Q(q), rows and columns indexed 0..n-1. Immutable in all
 * library operations (each op returns a fresh matrix), so sharing across
 * threads is safe.
 */
class FieldMatrix {
public:
    FieldMatrix() : rows_(0), cols_(0) {}
    FieldMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static FieldMatrix identity(size_t n);
    static FieldMatrix diagonal(const FieldVector& d);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const RationalFunction& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }
    RationalFunction& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }

    FieldMatrix operator+(const FieldMatrix& o) const;
    FieldMatrix operator-(const FieldMatrix& o) const;
    /// OpenMP product kernel; falls back to the serial path for small sizes.
    FieldMatrix operator*(const FieldMatrix& o) const;
    FieldMatrix operator*(const RationalFunction& s) const;
    FieldVector operator*(const FieldVector& v) const;
    bool operator==(const FieldMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
    bool operator!=(const FieldMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    RationalFunction trace() const;
    FieldVector diagonal_entries() const;
    FieldMatrix transpose() const;

private:
    size_t rows_, cols_;
    std::vector<RationalFunction> e_;
};

/// Serial reference product, kept alongside the OpenMP kernel for testing.
FieldMatrix multiply_serial(const FieldMatrix& a, const FieldMatrix& b);

// Structural predicates (row/column indexing 0..d as in tridiagonal usage).
bool is_tridiagonal(const FieldMatrix& m);             // throws NotSquareError
bool is_irreducible_tridiagonal(const FieldMatrix& m); // throws NotSquareError
/// A lower bidiagonal with subdiagonal entries all 1, A* irreducible tridiagonal.
bool is_lbtd_pair(const FieldMatrix& a, const FieldMatrix& astar);

/// Exact solution of M x = rhs; Gaussian elimination with first-nonzero pivots.
FieldVector solve(const FieldMatrix& m, const FieldVector& rhs);
FieldMatrix inverse(const FieldMatrix& m);

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared polynomial matrix.
RationalFunction determinant(const FieldMatrix& m);

/// P^-1 M P; throws SingularMatrixError when P is not invertible.
FieldMatrix conjugate(const FieldMatrix& m, const FieldMatrix& p);

/// Basis of the kernel of m, each vector normalized to first nonzero = 1.
std::vector<FieldVector> nullspace(const FieldMatrix& m);

/**
 * Matrix P whose column r is a kernel vector of (M - lambda_r I), normalized
 * to first nonzero coordinate 1. Lower-bidiagonal M uses forward substitution,
 * irreducible tridiagonal M the three-term recurrence, anything else exact
 * kernel elimination.
 *
 * Throws NotAnEigenvalueError / DegenerateEigenvalueError per column, and
 * Error when the eigenvalue list is not mutually distinct.
 */
FieldMatrix eigenbasis_for(const FieldMatrix& m, const FieldVector& eigenvalues);

}  // namespace leonard

#endif
