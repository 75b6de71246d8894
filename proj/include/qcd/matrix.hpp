#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace qcd {

// Row-major T x M matrix of observations: rows are time steps, columns are
// streams.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c, double fill = 0.0)
        : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, fill) {
        if (r < 0 || c < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

    std::span<const double> row(int r) const {
        return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
    }
};

inline std::vector<double> column(const Matrix& m, int c) {
    std::vector<double> out(m.rows);
    for (int r = 0; r < m.rows; ++r) out[r] = m.at(r, c);
    return out;
}

} // namespace qcd
