#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "paulidecomp/pauli.hpp"

namespace paulidecomp {

// "IXYZ" label <-> tensor number. The leftmost character is the highest
// operator position; operator t = 0 is the rightmost.
std::uint64_t string_to_index(std::string_view label, unsigned num_qubits);
std::string index_to_string(std::uint64_t n, unsigned num_qubits);

/*
 * One N-operator Pauli tensor: its number n (base-4 digits are the per-site
 * operators) together with the precomputed X/Y bitmask.
 */
struct PauliString {
    unsigned num_qubits = 0;
    std::uint64_t index = 0;
    std::uint64_t mask = 0;

    static PauliString from_index(std::uint64_t n, unsigned num_qubits);
    static PauliString from_label(std::string_view label);

    PauliOp op_at(unsigned t) const { return pauli_digit(index, t); }
    std::string label() const { return index_to_string(index, num_qubits); }

    bool operator==(const PauliString&) const = default;
};

}  // namespace paulidecomp
