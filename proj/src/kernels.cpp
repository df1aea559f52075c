#include "floq/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace floq {

namespace {

constexpr int kRowBlock = 64;
constexpr int kDepthBlock = 256;
constexpr int kColBlock = 512;

void split_planes(const CMat& a, RMat& re, RMat& im) {
    re = RMat(a.rows, a.cols);
    im = RMat(a.rows, a.cols);
    const size_t n = a.data.size();
#pragma omp parallel for schedule(static)
    for (size_t idx = 0; idx < n; ++idx) {
        re.data[idx] = a.data[idx].real();
        im.data[idx] = a.data[idx].imag();
    }
}

CMat join_planes(const RMat& re, const RMat& im) {
    CMat c(re.rows, re.cols);
    const size_t n = c.data.size();
#pragma omp parallel for schedule(static)
    for (size_t idx = 0; idx < n; ++idx) c.data[idx] = cplx(re.data[idx], im.data[idx]);
    return c;
}

void check_dims(int acols, int brows) {
    if (acols != brows) throw std::invalid_argument("matmul: inner dimensions differ");
}

}  // namespace

void matmul_acc(const RMat& a, const RMat& b, RMat& c, double sign) {
    check_dims(a.cols, b.rows);
    const int m = a.rows, k_dim = a.cols, n = b.cols;
#pragma omp parallel for schedule(static)
    for (int ib = 0; ib < m; ib += kRowBlock) {
        const int ie = std::min(ib + kRowBlock, m);
        for (int kb = 0; kb < k_dim; kb += kDepthBlock) {
            const int ke = std::min(kb + kDepthBlock, k_dim);
            for (int jb = 0; jb < n; jb += kColBlock) {
                const int je = std::min(jb + kColBlock, n);
                for (int i = ib; i < ie; ++i) {
                    double* __restrict crow = c.row(i);
                    for (int k = kb; k < ke; ++k) {
                        const double av = sign * a(i, k);
                        const double* __restrict brow = b.row(k);
#pragma omp simd
                        for (int j = jb; j < je; ++j) crow[j] += av * brow[j];
                    }
                }
            }
        }
    }
}

RMat matmul(const RMat& a, const RMat& b) {
    RMat c(a.rows, b.cols);
    matmul_acc(a, b, c, 1.0);
    return c;
}

CMat matmul(const CMat& a, const CMat& b) {
    check_dims(a.cols, b.rows);
    RMat ar, ai, br, bi;
    split_planes(a, ar, ai);
    split_planes(b, br, bi);
    RMat cr(a.rows, b.cols), ci(a.rows, b.cols);
    matmul_acc(ar, br, cr, 1.0);
    matmul_acc(ai, bi, cr, -1.0);
    matmul_acc(ar, bi, ci, 1.0);
    matmul_acc(ai, br, ci, 1.0);
    return join_planes(cr, ci);
}

CMat matmul(const RMat& a, const CMat& b) {
    check_dims(a.cols, b.rows);
    RMat br, bi;
    split_planes(b, br, bi);
    RMat cr(a.rows, b.cols), ci(a.rows, b.cols);
    matmul_acc(a, br, cr, 1.0);
    matmul_acc(a, bi, ci, 1.0);
    return join_planes(cr, ci);
}

CMat matmul(const CMat& a, const RMat& b) {
    check_dims(a.cols, b.rows);
    RMat ar, ai;
    split_planes(a, ar, ai);
    RMat cr(a.rows, b.cols), ci(a.rows, b.cols);
    matmul_acc(ar, b, cr, 1.0);
    matmul_acc(ai, b, ci, 1.0);
    return join_planes(cr, ci);
}

std::vector<cplx> matvec(const RMat& a, const std::vector<cplx>& x) {
    if (a.cols != static_cast<int>(x.size()))
        throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<cplx> y(a.rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows; ++i) {
        const double* __restrict arow = a.row(i);
        double sr = 0.0, si = 0.0;
        for (int j = 0; j < a.cols; ++j) {
            sr += arow[j] * x[j].real();
            si += arow[j] * x[j].imag();
        }
        y[i] = cplx(sr, si);
    }
    return y;
}

CMat conj_transpose(const CMat& a) {
    CMat t(a.cols, a.rows);
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

void fwht_columns(CMat& a) {
    const int n = a.rows;
    if ((n & (n - 1)) != 0) throw std::invalid_argument("fwht: row count must be a power of two");
    const int cols = a.cols;
    constexpr int kColSlab = 256;
    const int slabs = (cols + kColSlab - 1) / kColSlab;
    // Columns transform independently; each thread owns a slab of columns and
    // runs all butterfly stages over it. Stages are fused in radix-4 pairs to
    // halve the row traffic, and rows are walked as double arrays since the
    // butterflies act on the real and imaginary parts independently
    // (std::complex is layout-compatible with double[2]).
#pragma omp parallel for schedule(static)
    for (int s = 0; s < slabs; ++s) {
        const int d0 = 2 * s * kColSlab;
        const int d1 = 2 * std::min((s + 1) * kColSlab, cols);
        int len = 1;
        for (; 4 * len <= n; len *= 4)
            for (int block = 0; block < n; block += 4 * len)
                for (int r = block; r < block + len; ++r) {
                    double* __restrict x0 = reinterpret_cast<double*>(a.row(r));
                    double* __restrict x1 = reinterpret_cast<double*>(a.row(r + len));
                    double* __restrict x2 = reinterpret_cast<double*>(a.row(r + 2 * len));
                    double* __restrict x3 = reinterpret_cast<double*>(a.row(r + 3 * len));
                    for (int j = d0; j < d1; ++j) {
                        const double ab = x0[j] + x1[j], amb = x0[j] - x1[j];
                        const double cd = x2[j] + x3[j], cmd = x2[j] - x3[j];
                        x0[j] = ab + cd;
                        x1[j] = amb + cmd;
                        x2[j] = ab - cd;
                        x3[j] = amb - cmd;
                    }
                }
        for (; len < n; len <<= 1)  // leftover radix-2 stage for odd log2(n)
            for (int block = 0; block < n; block += 2 * len)
                for (int r = block; r < block + len; ++r) {
                    double* __restrict x = reinterpret_cast<double*>(a.row(r));
                    double* __restrict y = reinterpret_cast<double*>(a.row(r + len));
                    for (int j = d0; j < d1; ++j) {
                        const double u = x[j];
                        const double v = y[j];
                        x[j] = u + v;
                        y[j] = u - v;
                    }
                }
    }
}

void scale_rows(CMat& a, const std::vector<cplx>& d) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows; ++i) {
        const cplx s = d[i];
        cplx* __restrict arow = a.row(i);
        for (int j = 0; j < a.cols; ++j) arow[j] *= s;
    }
}

void scale_cols(CMat& a, const std::vector<cplx>& d) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.rows; ++i) {
        cplx* __restrict arow = a.row(i);
        for (int j = 0; j < a.cols; ++j) arow[j] *= d[j];
    }
}

double max_abs_diff(const CMat& a, const CMat& b) {
    double m = 0.0;
    const size_t n = a.data.size();
#pragma omp parallel for schedule(static) reduction(max : m)
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

double max_abs_diff(const RMat& a, const RMat& b) {
    double m = 0.0;
    const size_t n = a.data.size();
#pragma omp parallel for schedule(static) reduction(max : m)
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.data[i] - b.data[i]));
    return m;
}

double max_abs(const CMat& a) {
    double m = 0.0;
    const size_t n = a.data.size();
#pragma omp parallel for schedule(static) reduction(max : m)
    for (size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a.data[i]));
    return m;
}

double symmetry_residual(const CMat& u) {
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (int i = 0; i < u.rows; ++i)
        for (int j = i + 1; j < u.cols; ++j) m = std::max(m, std::abs(u(i, j) - u(j, i)));
    return m;
}

double unitarity_residual(const CMat& u) {
    const CMat g = matmul(conj_transpose(u), u);
    double m = 0.0;
#pragma omp parallel for schedule(static) reduction(max : m)
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) {
            const cplx expect = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
            m = std::max(m, std::abs(g(i, j) - expect));
        }
    return m;
}

namespace ref {

RMat matmul_naive(const RMat& a, const RMat& b) {
    check_dims(a.cols, b.rows);
    RMat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            double s = 0.0;
            for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

CMat matmul_naive(const CMat& a, const CMat& b) {
    check_dims(a.cols, b.rows);
    CMat c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

void fwht_columns_naive(CMat& a) {
    const int n = a.rows;
    for (int len = 1; len < n; len <<= 1)
        for (int block = 0; block < n; block += 2 * len)
            for (int r = block; r < block + len; ++r)
                for (int j = 0; j < a.cols; ++j) {
                    const cplx u = a(r, j);
                    const cplx v = a(r + len, j);
                    a(r, j) = u + v;
                    a(r + len, j) = u - v;
                }
}

}  // namespace ref

}  // namespace floq
