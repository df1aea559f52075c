#pragma once

#include <vector>

#include "floq/mat.hpp"

namespace floq {

// Eigendecomposition of a real symmetric matrix: values ascending, eigenvector
// k stored in column k of `vectors`.
struct EighResult {
    std::vector<double> values;
    RMat vectors;
};

EighResult eigh(RMat a);

// Eigenvalues only.
std::vector<double> eigh_values(RMat a);

// QR-orthonormalization of a square complex matrix with the R-diagonal phases
// divided out, so a Ginibre input maps to a Haar-distributed unitary.
CMat qr_unitary(CMat a);

}  // namespace floq
