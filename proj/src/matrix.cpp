#include "paulidecomp/matrix.hpp"

#include <stdexcept>
#include <string>

namespace paulidecomp {

namespace {

void check_qubit_count(unsigned num_qubits) {
    if (num_qubits == 0)
        throw std::invalid_argument("a matrix needs at least one qubit (2x2)");
    if (num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count " + std::to_string(num_qubits) +
                                    " exceeds the word-size bound of 32");
    // indices up to 4^32 still fit the word, but the element buffer cannot
    if (num_qubits >= 32)
        throw std::length_error("dense storage for 32 qubits exceeds the address space");
}

}  // namespace

DenseMatrix::DenseMatrix(unsigned num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    elements_.assign(pow4(num_qubits_), Complex{0.0, 0.0});
}

DenseMatrix::DenseMatrix(unsigned num_qubits, std::vector<Complex> elements)
    : num_qubits_(num_qubits), elements_(std::move(elements)) {
    check_qubit_count(num_qubits);
    if (elements_.size() != pow4(num_qubits_))
        throw std::invalid_argument("element buffer holds " + std::to_string(elements_.size()) +
                                    " entries, expected " + std::to_string(pow4(num_qubits_)));
}

DenseMatrix DenseMatrix::identity(unsigned num_qubits) {
    DenseMatrix m(num_qubits);
    for (std::uint64_t i = 0; i < m.dim(); ++i)
        m(i, i) = Complex{1.0, 0.0};
    return m;
}

}  // namespace paulidecomp
