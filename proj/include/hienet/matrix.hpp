#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace hienet {

// Row-major dense matrix of doubles. Deliberately minimal: the layer kernels
// and the backward pass are written as explicit loops over this storage so
// the accumulation order is fixed and reproducible.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

    double& operator()(int r, int c) {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    double operator()(int r, int c) const {
        assert(r >= 0 && r < rows && c >= 0 && c < cols);
        return data[static_cast<std::size_t>(r) * cols + c];
    }

    double* row(int r) { return data.data() + static_cast<std::size_t>(r) * cols; }
    const double* row(int r) const { return data.data() + static_cast<std::size_t>(r) * cols; }

    void fill(double v) { std::fill(data.begin(), data.end(), v); }
    bool empty() const { return data.empty(); }
};

// Rank-3 tensor, layout [n0][n1][n2], used for the per-sensitivity pair
// weights of interaction layers.
struct Tensor3 {
    int n0 = 0, n1 = 0, n2 = 0;
    std::vector<double> data;

    Tensor3() = default;
    Tensor3(int a, int b, int c)
        : n0(a), n1(b), n2(c), data(static_cast<std::size_t>(a) * b * c, 0.0) {}

    double& operator()(int a, int b, int c) {
        assert(a >= 0 && a < n0 && b >= 0 && b < n1 && c >= 0 && c < n2);
        return data[(static_cast<std::size_t>(a) * n1 + b) * n2 + c];
    }
    double operator()(int a, int b, int c) const {
        assert(a >= 0 && a < n0 && b >= 0 && b < n1 && c >= 0 && c < n2);
        return data[(static_cast<std::size_t>(a) * n1 + b) * n2 + c];
    }

    // Pointer to the [a][b][:] stripe.
    double* stripe(int a, int b) { return data.data() + (static_cast<std::size_t>(a) * n1 + b) * n2; }
    const double* stripe(int a, int b) const {
        return data.data() + (static_cast<std::size_t>(a) * n1 + b) * n2;
    }
};

} // namespace hienet
