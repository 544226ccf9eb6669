#include <doctest.h>

#include "leonard/exactmat.hpp"
#include "test_util.hpp"

using namespace leonard;

namespace {
const RationalFunction Q = RationalFunction::q();
RationalFunction qp(long k) { return RationalFunction::q_pow(k); }

FieldMatrix random_matrix(testutil::Rng& rng, size_t n, int max_deg = 2, long span = 3) {
    FieldMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = rng.field_element(max_deg, span);
    return m;
}

FieldMatrix random_invertible(testutil::Rng& rng, size_t n) {
    for (;;) {
        FieldMatrix m = random_matrix(rng, n);
        if (!determinant(m).is_zero()) return m;
    }
}
}  // namespace

TEST_SUITE_BEGIN("exactmat");

TEST_CASE("shape predicates") {
    CHECK(is_tridiagonal(FieldMatrix::identity(4)));
    FieldMatrix m = FieldMatrix::identity(4);
    m(0, 2) = Q;
    CHECK(!is_tridiagonal(m));
    FieldMatrix two(2, 2);
    two(0, 0) = Q;
    two(0, 1) = qp(3);
    two(1, 0) = RationalFunction(5);
    two(1, 1) = qp(-1);
    CHECK(is_tridiagonal(two));

    CHECK(!is_irreducible_tridiagonal(FieldMatrix::identity(4)));
    FieldMatrix t(3, 3);
    for (size_t i = 0; i < 3; ++i) t(i, i) = RationalFunction(static_cast<long>(i));
    t(1, 0) = t(2, 1) = t(0, 1) = t(1, 2) = RationalFunction(1);
    CHECK(is_irreducible_tridiagonal(t));

    FieldMatrix notsquare(2, 3);
    CHECK_THROWS_AS(is_tridiagonal(notsquare), NotSquareError);
}

TEST_CASE("is_lbtd_pair") {
    FieldMatrix a(3, 3), as(3, 3);
    for (size_t i = 0; i < 3; ++i) {
        a(i, i) = qp(static_cast<long>(2 * i) - 2);
        as(i, i) = RationalFunction(1);
    }
    a(1, 0) = a(2, 1) = RationalFunction(1);
    as(1, 0) = as(2, 1) = Q;
    as(0, 1) = as(1, 2) = qp(-1);
    CHECK(is_lbtd_pair(a, as));

    FieldMatrix bad = a;
    bad(1, 0) = RationalFunction(2);  // subdiagonal entry must be exactly 1
    CHECK(!is_lbtd_pair(bad, as));

    FieldMatrix diag_astar = FieldMatrix::diagonal({Q, qp(2), qp(3)});
    CHECK(!is_lbtd_pair(a, diag_astar));
}

TEST_CASE("solve") {
    FieldVector v{Q, qp(2) + RationalFunction(1)};
    CHECK(solve(FieldMatrix::identity(2), v) == v);

    FieldMatrix d = FieldMatrix::diagonal({Q, qp(2)});
    FieldVector x = solve(d, {RationalFunction(1), RationalFunction(1)});
    CHECK(x == FieldVector{qp(-1), qp(-2)});

    FieldMatrix sing(2, 2);
    sing(0, 0) = Q;
    sing(1, 0) = Q;
    CHECK_THROWS_AS(solve(sing, {RationalFunction(1), RationalFunction(1)}), SingularMatrixError);

    testutil::Rng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        FieldMatrix m = random_invertible(rng, 3);
        FieldVector rhs{rng.field_element(), rng.field_element(), rng.field_element()};
        CHECK(m * solve(m, rhs) == rhs);
    }
}

TEST_CASE("determinant") {
    testutil::Rng rng(29);
    // Bareiss result agrees with cofactor expansion on random 3x3
    for (int rep = 0; rep < 8; ++rep) {
        FieldMatrix m = random_matrix(rng, 3);
        RationalFunction cof =
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
            m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        CHECK(determinant(m) == cof);
    }
    // det of lower bidiagonal = product of diagonal
    FieldMatrix b(4, 4);
    RationalFunction prod(1);
    for (size_t i = 0; i < 4; ++i) {
        b(i, i) = qp(static_cast<long>(i) - 2) + RationalFunction(static_cast<long>(i));
        prod *= b(i, i);
        if (i) b(i, i - 1) = RationalFunction(1);
    }
    CHECK(determinant(b) == prod);
}

TEST_CASE("conjugate") {
    testutil::Rng rng(31);
    FieldMatrix m = random_matrix(rng, 3);
    CHECK(conjugate(m, FieldMatrix::identity(3)) == m);

    FieldMatrix p = random_invertible(rng, 3);
    FieldMatrix c = conjugate(m, p);
    CHECK(conjugate(c, inverse(p)) == m);
    CHECK(c.trace() == m.trace());
    CHECK(determinant(c) == determinant(m));

    FieldMatrix sing(3, 3);
    CHECK_THROWS_AS(conjugate(m, sing), SingularMatrixError);
}

TEST_CASE("eigenbasis_for diagonal and bidiagonal") {
    FieldVector diag{Q, qp(2), qp(3) + RationalFunction(1)};
    FieldMatrix d = FieldMatrix::diagonal(diag);
    CHECK(eigenbasis_for(d, diag) == FieldMatrix::identity(3));

    // lower bidiagonal with subdiagonal 1: eigenvector of theta_r vanishes
    // below index r and has a 1 at r
    FieldMatrix a(4, 4);
    FieldVector theta{qp(-3), qp(-1), Q, qp(3)};
    for (size_t i = 0; i < 4; ++i) {
        a(i, i) = theta[i];
        if (i) a(i, i - 1) = RationalFunction(1);
    }
    FieldMatrix p = eigenbasis_for(a, theta);
    for (size_t r = 0; r < 4; ++r) {
        for (size_t i = 0; i < r; ++i) CHECK(p(i, r).is_zero());
        CHECK(p(r, r).is_one());
    }
    // exact identity M P = P diag
    CHECK(a * p == p * FieldMatrix::diagonal(theta));

    CHECK_THROWS_AS(eigenbasis_for(a, {qp(-3), qp(-1), Q, qp(5)}), NotAnEigenvalueError);
    CHECK_THROWS_AS(eigenbasis_for(a, {qp(-3), qp(-1), Q, Q}), Error);
}

TEST_CASE("eigenbasis_for tridiagonal via three-term recurrence") {
    // 2x2 and 3x3 with known eigenvalues: companion-style check M P = P diag
    FieldMatrix t(2, 2);
    t(0, 0) = RationalFunction();
    t(0, 1) = RationalFunction(1);
    t(1, 0) = qp(2);
    t(1, 1) = RationalFunction();
    FieldVector lam{Q, -Q};
    FieldMatrix p = eigenbasis_for(t, lam);
    CHECK(t * p == p * FieldMatrix::diagonal(lam));
    CHECK(p(0, 0).is_one());
    CHECK_THROWS_AS(eigenbasis_for(t, {Q, qp(2)}), NotAnEigenvalueError);
}

TEST_CASE("eigenbasis_for degenerate and missing eigenvalues") {
    // scalar matrix: kernel of (m - q I) is 2-dimensional
    FieldMatrix scal = FieldMatrix::identity(2) * Q;
    CHECK_THROWS_AS(eigenbasis_for(scal, {Q, qp(2)}), DegenerateEigenvalueError);

    // Jordan block (upper triangular): q^2 is not an eigenvalue
    FieldMatrix jord(2, 2);
    jord(0, 0) = jord(1, 1) = Q;
    jord(0, 1) = RationalFunction(1);
    CHECK_THROWS_AS(eigenbasis_for(jord, {qp(2), qp(3)}), NotAnEigenvalueError);
}

TEST_CASE("nullspace") {
    FieldMatrix m(2, 3);
    m(0, 0) = RationalFunction(1);
    m(0, 2) = Q;
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) {
        FieldVector mv = m * v;
        CHECK(std::all_of(mv.begin(), mv.end(), [](const RationalFunction& x) { return x.is_zero(); }));
    }
}

TEST_SUITE_END();
