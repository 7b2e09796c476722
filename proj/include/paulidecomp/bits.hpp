#pragma once

#include <bit>
#include <cassert>
#include <cstdint>

namespace paulidecomp {

/*
 * Fixed-word bit utilities, all constant-time and inlined; safe in tight loops.
 * Indices, masks and Pauli-tensor numbers live in one 64-bit word, which bounds
 * the supported operator count to 32 (two bits per base-4 digit).
 */

inline constexpr unsigned kMaxQubits = 32;

constexpr std::uint64_t pow2(unsigned exponent) {
    assert(exponent < 64);
    return std::uint64_t{1} << exponent;
}

// number of base-4 digits representable; exponent 32 would overflow the word
constexpr std::uint64_t pow4(unsigned exponent) {
    assert(exponent < 32);
    return std::uint64_t{1} << (2 * exponent);
}

constexpr unsigned trailing_zeros(std::uint64_t number) {
    return static_cast<unsigned>(std::countr_zero(number));
}

constexpr unsigned trailing_ones(std::uint64_t number) {
    return static_cast<unsigned>(std::countr_one(number));
}

// k-th binary reflected Gray code; consecutive outputs differ in exactly one bit
constexpr std::uint64_t gray_code(std::uint64_t k) {
    return k ^ (k >> 1);
}

// index of the single bit differing between gray_code(k) and gray_code(k+1)
constexpr unsigned flipped_bit_index(std::uint64_t k) {
    return trailing_zeros(k + 1);
}

// position of the base-4 digit that changes between the k-th and (k+1)-th
// numeral of the modular quaternary Gray code
constexpr unsigned flipped_digit_index(std::uint64_t k) {
    return trailing_ones(k) / 2;
}

constexpr unsigned base4_digit(std::uint64_t n, unsigned t) {
    assert(t < kMaxQubits);
    return static_cast<unsigned>((n >> (2 * t)) & 3u);
}

constexpr std::uint64_t set_base4_digit(std::uint64_t n, unsigned t, unsigned digit) {
    assert(t < kMaxQubits && digit < 4);
    return (n & ~(std::uint64_t{3} << (2 * t))) | (std::uint64_t{digit} << (2 * t));
}

// true iff n is a valid Pauli-tensor number for num_qubits operators
constexpr bool valid_pauli_index(std::uint64_t n, unsigned num_qubits) {
    return num_qubits >= kMaxQubits || n < pow4(num_qubits);
}

/*
 * Gray-code iteration state: after k steps, code == gray_code(k). The bit to
 * flip next is trailing_zeros(k+1), found without scanning the word.
 */
struct GrayCodeWalker {
    std::uint64_t step = 0;
    std::uint64_t code = 0;

    constexpr unsigned flipped_bit() const { return flipped_bit_index(step); }

    constexpr void advance() {
        code ^= pow2(flipped_bit());
        ++step;
    }
};

}  // namespace paulidecomp
