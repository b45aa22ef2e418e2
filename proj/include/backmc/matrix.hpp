#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace backmc {

/// Dense row-major matrix. Rows are the natural unit of work for the
/// transition-matrix kernels, so row spans are cheap and contiguous.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {}

    double& operator()(int i, int j) {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
    double operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }
    std::span<double> row(int i) {
        return {data.data() + static_cast<std::size_t>(i) * cols,
                static_cast<std::size_t>(cols)};
    }
    std::span<const double> row(int i) const {
        return {data.data() + static_cast<std::size_t>(i) * cols,
                static_cast<std::size_t>(cols)};
    }
    bool empty() const { return data.empty(); }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
};

}  // namespace backmc
