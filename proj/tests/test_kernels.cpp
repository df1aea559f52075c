#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "floq/kernels.hpp"
#include "floq/rng.hpp"

using namespace floq;

namespace {

CMat random_cmat(int rows, int cols, uint64_t seed) {
    Rng rng(seed);
    CMat a(rows, cols);
    for (auto& v : a.data) v = cplx(rng.normal(), rng.normal());
    return a;
}

RMat random_rmat(int rows, int cols, uint64_t seed) {
    Rng rng(seed);
    RMat a(rows, cols);
    for (auto& v : a.data) v = rng.normal();
    return a;
}

}  // namespace

TEST_CASE("blocked matmul matches the serial reference") {
    for (int n : {1, 7, 64, 130}) {
        const CMat a = random_cmat(n, n, 10 + n);
        const CMat b = random_cmat(n, n, 20 + n);
        const CMat c_ref = ref::matmul_naive(a, b);
        const CMat c = matmul(a, b);
        CHECK(max_abs_diff(c_ref, c) < 1e-11 * n);
    }
}

TEST_CASE("real and mixed products agree with the complex one") {
    const int n = 33;
    const RMat ar = random_rmat(n, n, 3);
    const CMat bc = random_cmat(n, n, 4);
    CMat ac(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) ac(i, j) = ar(i, j);
    CHECK(max_abs_diff(matmul(ar, bc), matmul(ac, bc)) < 1e-12);
    CHECK(max_abs_diff(matmul(bc, ar), matmul(bc, ac)) < 1e-12);
}

TEST_CASE("matmul result does not depend on the thread count") {
    const int n = 97;
    const CMat a = random_cmat(n, n, 5);
    const CMat b = random_cmat(n, n, 6);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const CMat c1 = matmul(a, b);
    omp_set_num_threads(4);
    const CMat c4 = matmul(a, b);
    omp_set_num_threads(saved);
    CHECK(max_abs_diff(c1, c4) == 0.0);  // bit-identical accumulation order
}

TEST_CASE("fwht squares to n times identity") {
    const int n = 64;
    CMat a = random_cmat(n, 8, 7);
    CMat twice = a;
    fwht_columns(twice);
    fwht_columns(twice);
    for (auto& v : twice.data) v /= static_cast<double>(n);
    CHECK(max_abs_diff(a, twice) < 1e-13);
}

TEST_CASE("fwht matches the serial reference and the Hadamard matrix") {
    const int n = 32;
    CMat a = random_cmat(n, n, 8);
    CMat fast = a, slow = a;
    fwht_columns(fast);
    ref::fwht_columns_naive(slow);
    CHECK(max_abs_diff(fast, slow) == 0.0);

    // Explicit H^{ox L} with entries (-1)^{popcount(i & j)}.
    CMat had(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            had(i, j) = (__builtin_popcount(i & j) % 2 == 0) ? 1.0 : -1.0;
    CHECK(max_abs_diff(fast, matmul(had, a)) < 1e-11);
}

TEST_CASE("matvec equals matmul column") {
    const int n = 41;
    const RMat a = random_rmat(n, n, 9);
    Rng rng(11);
    std::vector<cplx> x(n);
    for (auto& v : x) v = cplx(rng.normal(), rng.normal());
    CMat xm(n, 1);
    for (int i = 0; i < n; ++i) xm(i, 0) = x[i];
    const CMat y_ref = matmul(a, xm);
    const auto y = matvec(a, x);
    double err = 0.0;
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(y[i] - y_ref(i, 0)));
    CHECK(err < 1e-12);
}

TEST_CASE("residual helpers") {
    CMat u(2, 2);
    u(0, 0) = 1.0;
    u(1, 1) = cplx(0.0, 1.0);
    CHECK(unitarity_residual(u) < 1e-15);
    CHECK(symmetry_residual(u) == 0.0);
    u(0, 1) = 1e-3;
    CHECK(symmetry_residual(u) == doctest::Approx(1e-3));
}
