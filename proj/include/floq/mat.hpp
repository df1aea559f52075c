#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace floq {

using cplx = std::complex<double>;

// Dense row-major matrix.
template <typename T>
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}

    T& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    T* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
    const T* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix<T> transposed() const {
        Matrix<T> t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
};

using RMat = Matrix<double>;
using CMat = Matrix<cplx>;

}  // namespace floq
