// Timing comparison between the serial reference kernels and the OpenMP
// production kernels. Build target: floq_bench [size] [reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "floq/kernels.hpp"
#include "floq/rng.hpp"

using namespace floq;

namespace {

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

CMat random_cmat(int n, uint64_t seed) {
    Rng rng(seed);
    CMat a(n, n);
    for (auto& v : a.data) v = cplx(rng.uniform01() - 0.5, rng.uniform01() - 0.5);
    return a;
}

template <typename F>
double time_best(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = now_s();
        f();
        best = std::min(best, now_s() - t0);
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = (argc > 1) ? std::atoi(argv[1]) : 512;
    const int reps = (argc > 2) ? std::atoi(argv[2]) : 3;

    std::printf("kernel benchmark, n=%d, reps=%d, omp_max_threads=%d\n", n, reps,
                omp_get_max_threads());

    const CMat a = random_cmat(n, 1);
    const CMat b = random_cmat(n, 2);

    CMat c_ref, c_par;
    const double t_naive = time_best([&] { c_ref = ref::matmul_naive(a, b); }, reps);
    const double t_par = time_best([&] { c_par = matmul(a, b); }, reps);
    const double flops = 8.0 * static_cast<double>(n) * n * n;
    std::printf("complex matmul  serial-ref %8.3f s (%6.2f GF/s)   omp %8.3f s (%6.2f GF/s)"
                "   max|diff| %.3e\n",
                t_naive, flops / t_naive * 1e-9, t_par, flops / t_par * 1e-9,
                max_abs_diff(c_ref, c_par));

    CMat f_ref = a, f_par = a;
    const double t_fna = time_best(
        [&] {
            f_ref = a;
            ref::fwht_columns_naive(f_ref);
        },
        reps);
    const double t_fpa = time_best(
        [&] {
            f_par = a;
            fwht_columns(f_par);
        },
        reps);
    std::printf("fwht columns    serial-ref %8.3f s                omp %8.3f s"
                "                 max|diff| %.3e\n",
                t_fna, t_fpa, max_abs_diff(f_ref, f_par));
    return 0;
}
