#include "paulidecomp/pauli_string.hpp"

#include <stdexcept>

#include "paulidecomp/io.hpp"

namespace paulidecomp {

namespace {

constexpr char kOpChars[4] = {'I', 'X', 'Y', 'Z'};

int op_code(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: return -1;
    }
}

}  // namespace

std::uint64_t string_to_index(std::string_view label, unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits)
        throw FormatError("operator count must be in [1, 32], got " + std::to_string(num_qubits));
    if (label.size() != num_qubits)
        throw FormatError("label \"" + std::string(label) + "\" has " +
                          std::to_string(label.size()) + " characters, expected " +
                          std::to_string(num_qubits));
    std::uint64_t n = 0;
    for (unsigned t = 0; t < num_qubits; ++t) {
        const int code = op_code(label[num_qubits - 1 - t]);
        if (code < 0)
            throw FormatError("label \"" + std::string(label) +
                              "\" contains a character outside IXYZ");
        n |= std::uint64_t{static_cast<unsigned>(code)} << (2 * t);
    }
    return n;
}

std::string index_to_string(std::uint64_t n, unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits)
        throw std::invalid_argument("operator count must be in [1, 32]");
    if (!valid_pauli_index(n, num_qubits))
        throw std::invalid_argument("tensor number " + std::to_string(n) +
                                    " out of range for " + std::to_string(num_qubits) +
                                    " operators");
    std::string label(num_qubits, 'I');
    for (unsigned t = 0; t < num_qubits; ++t)
        label[num_qubits - 1 - t] = kOpChars[base4_digit(n, t)];
    return label;
}

PauliString PauliString::from_index(std::uint64_t n, unsigned num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits)
        throw std::invalid_argument("operator count must be in [1, 32]");
    if (!valid_pauli_index(n, num_qubits))
        throw std::invalid_argument("tensor number out of range");
    return PauliString{num_qubits, n, xy_mask(n, num_qubits)};
}

PauliString PauliString::from_label(std::string_view label) {
    const unsigned num_qubits = static_cast<unsigned>(label.size());
    const std::uint64_t n = string_to_index(label, num_qubits);
    return PauliString{num_qubits, n, xy_mask(n, num_qubits)};
}

}  // namespace paulidecomp
