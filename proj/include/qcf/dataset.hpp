#pragma once

#include <cstddef>
#include <vector>

#include "qcf/measurement.hpp"

namespace qcf {

// Dense row-major matrix of doubles.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
    const double* row(std::size_t r) const { return data.data() + r * cols; }
    double* row(std::size_t r) { return data.data() + r * cols; }
};

// Feature rows with class labels 0 = IQP, 1 = Clifford, 2 = Clifford+T.
// strategy/n_qubits describe where the features came from.
struct LabeledDataset {
    Matrix features;
    std::vector<int> labels;
    Strategy strategy = Strategy::ZOnly;
    int n_qubits = 0;
};

inline constexpr int kNumClasses = 3;

} // namespace qcf
