#include <complex>
// System lapack.h selects its complex type from these macros; use std::complex
// so matrix buffers pass through without casts.
#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "floq/eigen_sym.hpp"

#include "floq/errors.hpp"

namespace floq {

EighResult eigh(RMat a) {
    if (a.rows != a.cols) throw std::invalid_argument("eigh: matrix not square");
    const int n = a.rows;
    EighResult out;
    out.values.resize(n);
    const int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, a.data.data(), n,
                                    out.values.data());
    if (info != 0) throw numerical_error("dsyevd failed, info=" + std::to_string(info));
    out.vectors = std::move(a);  // columns now hold the eigenvectors
    return out;
}

std::vector<double> eigh_values(RMat a) {
    if (a.rows != a.cols) throw std::invalid_argument("eigh: matrix not square");
    const int n = a.rows;
    std::vector<double> w(n);
    const int info =
        LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data.data(), n, w.data());
    if (info != 0) throw numerical_error("dsyevd failed, info=" + std::to_string(info));
    return w;
}

CMat qr_unitary(CMat a) {
    if (a.rows != a.cols) throw std::invalid_argument("qr_unitary: matrix not square");
    const int n = a.rows;
    std::vector<std::complex<double>> tau(n);
    int info = LAPACKE_zgeqrf(LAPACK_ROW_MAJOR, n, n, a.data.data(), n, tau.data());
    if (info != 0) throw numerical_error("zgeqrf failed, info=" + std::to_string(info));

    // Phases of diag(R) before the reflector expansion overwrites them.
    std::vector<cplx> phase(n);
    for (int j = 0; j < n; ++j) {
        const cplx r = a(j, j);
        const double m = std::abs(r);
        phase[j] = (m == 0.0) ? cplx(1.0, 0.0) : r / m;
    }

    info = LAPACKE_zungqr(LAPACK_ROW_MAJOR, n, n, n, a.data.data(), n, tau.data());
    if (info != 0) throw numerical_error("zungqr failed, info=" + std::to_string(info));

    // Q -> Q * diag(r_jj/|r_jj|) makes the factor with positive-diagonal R,
    // which carries Haar measure for a Ginibre input.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) *= phase[j];
    return a;
}

}  // namespace floq
