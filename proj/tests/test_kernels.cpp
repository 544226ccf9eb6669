#include <doctest.h>

#include <omp.h>

#include "leonard/exactmat.hpp"
#include "test_util.hpp"

using namespace leonard;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("parallel product agrees with the serial reference") {
    testutil::Rng rng(53);
    for (size_t n : {4, 5, 7}) {
        FieldMatrix a(n, n), b(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                a(i, j) = rng.field_element(3, 4);
                b(i, j) = rng.field_element(3, 4);
            }
        // zero a row and a column to cover degenerate entries
        for (size_t j = 0; j < n; ++j) a(1, j) = RationalFunction();
        for (size_t i = 0; i < n; ++i) b(i, 2) = RationalFunction();
        CHECK(a * b == multiply_serial(a, b));
        CHECK(b * a == multiply_serial(b, a));
    }
}

TEST_CASE("parallel product under forced thread counts") {
    testutil::Rng rng(59);
    FieldMatrix a(6, 6), b(6, 6);
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = 0; j < 6; ++j) {
            a(i, j) = rng.field_element(2, 3);
            b(i, j) = rng.field_element(2, 3);
        }
    FieldMatrix want = multiply_serial(a, b);
    int saved = omp_get_max_threads();
    for (int t : {1, 2, 4}) {
        omp_set_num_threads(t);
        CHECK(a * b == want);
    }
    omp_set_num_threads(saved);
}

TEST_SUITE_END();
