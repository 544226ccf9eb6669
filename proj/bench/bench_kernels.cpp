// Benchmark: OpenMP kernels against their serial reference implementations,
// on exact rational-function workloads.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "leonard/awrel.hpp"
#include "leonard/lbtd.hpp"

using namespace leonard;

namespace {

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

FieldMatrix random_matrix(std::mt19937_64& eng, size_t n, int maxdeg) {
    std::uniform_int_distribution<long> coeff(-5, 5);
    std::uniform_int_distribution<int> deg(0, maxdeg);
    FieldMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::vector<Rational> num, den;
            for (int k = deg(eng); k >= 0; --k) num.emplace_back(coeff(eng));
            den.emplace_back(1 + std::abs(coeff(eng)));
            for (int k = deg(eng) - 1; k >= 0; --k) den.emplace_back(coeff(eng));
            Poly dp{std::vector<Rational>(den.rbegin(), den.rend())};
            if (dp.is_zero()) dp = Poly(1);
            m(i, j) = RationalFunction::normalized(Poly(std::move(num)), dp);
        }
    return m;
}

ClosedFormParams tuple_for(int d, long a, long ap, long b, long bp, long c) {
    ClosedFormParams cf;
    cf.d = d;
    cf.a = RationalFunction(a);
    cf.a_prime = RationalFunction(ap);
    cf.b = RationalFunction(b);
    cf.b_prime = RationalFunction(bp);
    cf.c = RationalFunction(c);
    cf.xi = xi_from_c(cf.a, cf.a_prime, cf.b, cf.b_prime, *cf.c);
    return cf;
}

void bench_multiply() {
    std::mt19937_64 eng(2024);
    for (auto [n, maxdeg, reps] : {std::tuple{8UL, 6, 5}, std::tuple{16UL, 6, 3}, std::tuple{24UL, 8, 2}}) {
        FieldMatrix a = random_matrix(eng, n, maxdeg);
        FieldMatrix b = random_matrix(eng, n, maxdeg);
        double t0 = now();
        FieldMatrix s = multiply_serial(a, b);
        for (int r = 1; r < reps; ++r) s = multiply_serial(a, b);
        double ts = (now() - t0) / reps;
        t0 = now();
        FieldMatrix p = a * b;
        for (int r = 1; r < reps; ++r) p = a * b;
        double tp = (now() - t0) / reps;
        std::printf("multiply %2zux%-2zu deg<=%d   serial %8.3f ms   omp %8.3f ms   speedup %.2fx  %s\n",
                    n, n, maxdeg, ts * 1e3, tp * 1e3, ts / tp,
                    s == p ? "results agree" : "MISMATCH");
    }
}

void bench_grid() {
    std::vector<ClosedFormParams> grid;
    for (long a = 1; a <= 3; ++a)
        for (long b = 4; b <= 7; ++b)
            for (long c = 1; c <= 2; ++c) {
                ClosedFormParams cf = tuple_for(4, a, a + 3, b, b + 4, c);
                if (check_conditions(cf).empty()) grid.push_back(cf);
            }
    auto work = [](const ClosedFormParams& cf) {
        LBTDPair pair = build(cf);
        ParameterArray pa = parameter_array_of(cf);
        AWScalars s = aw_scalars(pa);
        return verify_aw(pair.A, pair.Astar, s);
    };
    double t0 = now();
    bool ok = true;
    for (const auto& cf : grid) ok &= work(cf);
    double ts = now() - t0;
    t0 = now();
    std::vector<char> res(grid.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(grid.size()); ++i) res[i] = work(grid[i]);
    double tp = now() - t0;
    bool okp = true;
    for (char r : res) okp &= (r != 0);
    std::printf("grid verify (%zu tuples, d=4)  serial %7.1f ms   omp %7.1f ms   speedup %.2fx  %s\n",
                grid.size(), ts * 1e3, tp * 1e3, ts / tp,
                (ok && okp) ? "all certified" : "MISMATCH");
}

}  // namespace

int main() {
    std::printf("threads available: %d\n", omp_get_max_threads());
    bench_multiply();
    bench_grid();
    return 0;
}
