#pragma once

#include <vector>

#include "floq/mat.hpp"

namespace floq {

// Dense products. All kernels accumulate each output element in a fixed k
// order that does not depend on the thread count, so results are bit-stable
// under any OpenMP schedule.
RMat matmul(const RMat& a, const RMat& b);
CMat matmul(const CMat& a, const CMat& b);
CMat matmul(const RMat& a, const CMat& b);
CMat matmul(const CMat& a, const RMat& b);

// C += sign * A*B on raw planes, the building block of the complex products.
void matmul_acc(const RMat& a, const RMat& b, RMat& c, double sign);

std::vector<cplx> matvec(const RMat& a, const std::vector<cplx>& x);

CMat conj_transpose(const CMat& a);

// In-place Walsh-Hadamard transform of every column (unnormalized butterflies
// over the row index). Two applications give n * identity.
void fwht_columns(CMat& a);

void scale_rows(CMat& a, const std::vector<cplx>& d);
void scale_cols(CMat& a, const std::vector<cplx>& d);

double max_abs_diff(const CMat& a, const CMat& b);
double max_abs_diff(const RMat& a, const RMat& b);
double max_abs(const CMat& a);

// max_ij |U - U^T|
double symmetry_residual(const CMat& u);
// max_ij |U^dag U - I|
double unitarity_residual(const CMat& u);

// Serial reference implementations, kept for correctness tests and benchmarks.
namespace ref {
RMat matmul_naive(const RMat& a, const RMat& b);
CMat matmul_naive(const CMat& a, const CMat& b);
void fwht_columns_naive(CMat& a);
}  // namespace ref

}  // namespace floq
