#pragma once

#include <cstdint>
#include <vector>

#include "paulidecomp/pauli.hpp"

namespace paulidecomp {

/*
 * Row-major dense 2^N x 2^N complex matrix; element (row j, column i) sits at
 * offset j * 2^N + i. Indices are zero-based.
 */
class DenseMatrix {
  public:
    // zero-filled; throws std::invalid_argument for N outside [1, 32] and
    // std::length_error / std::bad_alloc when the 4^N buffer cannot exist
    explicit DenseMatrix(unsigned num_qubits);
    DenseMatrix(unsigned num_qubits, std::vector<Complex> elements);

    static DenseMatrix identity(unsigned num_qubits);

    unsigned num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return pow2(num_qubits_); }
    std::uint64_t element_count() const { return pow4(num_qubits_); }

    Complex& operator()(std::uint64_t row, std::uint64_t col) {
        return elements_[row * dim() + col];
    }
    Complex operator()(std::uint64_t row, std::uint64_t col) const {
        return elements_[row * dim() + col];
    }

    const Complex* data() const { return elements_.data(); }
    Complex* data() { return elements_.data(); }
    const std::vector<Complex>& elements() const { return elements_; }

    bool operator==(const DenseMatrix&) const = default;

  private:
    unsigned num_qubits_;
    std::vector<Complex> elements_;
};

// all 4^N expansion coefficients of a matrix, indexed by Pauli-tensor number
struct PauliDecomposition {
    unsigned num_qubits = 0;
    std::vector<Complex> coefficients;

    bool operator==(const PauliDecomposition&) const = default;
};

}  // namespace paulidecomp
