#pragma once

#include <complex>
#include <cstdint>

#include "paulidecomp/bits.hpp"

namespace paulidecomp {

using Complex = std::complex<double>;

/*
 * The four single-qubit operators, numbered so that the base-4 digits of a
 * tensor number n enumerate strings as II..I, II..X, II..Y, II..Z, IX..I, ...
 */
enum class PauliOp : unsigned { I = 0, X = 1, Y = 2, Z = 3 };

constexpr PauliOp pauli_digit(std::uint64_t n, unsigned t) {
    return static_cast<PauliOp>(base4_digit(n, t));
}

// X and Y have their nonzero entries off the diagonal
constexpr bool is_antidiagonal(PauliOp op) {
    unsigned code = static_cast<unsigned>(op);
    return ((code ^ (code >> 1)) & 1u) != 0;
}

constexpr unsigned mask_bit(PauliOp op) {
    return is_antidiagonal(op) ? 1u : 0u;
}

// bitmask with a 1 at position t iff digit t of n is X or Y
constexpr std::uint64_t xy_mask(std::uint64_t n, unsigned num_qubits) {
    assert(num_qubits <= kMaxQubits);
    std::uint64_t mask = 0;
    for (unsigned t = 0; t < num_qubits; ++t)
        mask |= std::uint64_t{mask_bit(pauli_digit(n, t))} << t;
    return mask;
}

/*
 * Each operator's single nonzero entry per row is a 4th root of unity, stored
 * as a power of i so that products and quotients are integer arithmetic:
 *
 *   row a of op holds its nonzero entry in column a ^ mask_bit(op),
 *   with value beta(op, a) = i^beta_exponent(op, a):
 *
 *     I: 1, 1      X: 1, 1      Y: -i, +i      Z: 1, -1
 *
 * The row-flip quotient beta(op,1)/beta(op,0) is +1 or -1 for every op, so a
 * single-bit change of the column index scales the tensor element by a sign.
 */

constexpr unsigned beta_exponent(PauliOp op, unsigned row_bit) {
    assert(row_bit < 2);
    constexpr unsigned table[4][2] = {
        {0, 0},  // I
        {0, 0},  // X
        {3, 1},  // Y
        {0, 2},  // Z
    };
    return table[static_cast<unsigned>(op)][row_bit];
}

// exponent of the row-flip quotient: 0 for I and X, 2 (a factor -1) for Y and Z
constexpr unsigned ratio_exponent(PauliOp op) {
    return (beta_exponent(op, 1) + 4 - beta_exponent(op, 0)) & 3u;
}

// i^p for p in [0,4)
constexpr Complex unit_phase(unsigned power) {
    assert(power < 4);
    constexpr double re[4] = {1.0, 0.0, -1.0, 0.0};
    constexpr double im[4] = {0.0, 1.0, 0.0, -1.0};
    return Complex{re[power & 3u], im[power & 3u]};
}

constexpr Complex beta_value(PauliOp op, unsigned row_bit) {
    return unit_phase(beta_exponent(op, row_bit));
}

constexpr double ratio_value(PauliOp op) {
    return ratio_exponent(op) == 0 ? 1.0 : -1.0;
}

/*
 * Exact 4th-root-of-unity scalar, kept as a 2-bit power of i. Chains of
 * beta products and quotients never touch floating point, so no phase drift
 * accumulates over long recurrences.
 */
class PhaseFactor {
  public:
    constexpr PhaseFactor() = default;
    static constexpr PhaseFactor i_to(unsigned power) { return PhaseFactor{power & 3u}; }

    // product of the row-0 entries of all digits of n: (-i)^(#Y)
    static constexpr PhaseFactor initial_column_phase(std::uint64_t n, unsigned num_qubits) {
        unsigned power = 0;
        for (unsigned t = 0; t < num_qubits; ++t)
            power += beta_exponent(pauli_digit(n, t), 0);
        return PhaseFactor{power & 3u};
    }

    constexpr unsigned exponent() const { return power_; }
    constexpr Complex value() const { return unit_phase(power_); }

    constexpr void times_beta(PauliOp op, unsigned row_bit) {
        power_ = (power_ + beta_exponent(op, row_bit)) & 3u;
    }

    // apply the row-flip quotient for a single changed bit of the column index
    constexpr void times_ratio(PauliOp op) {
        power_ = (power_ + ratio_exponent(op)) & 3u;
    }

    constexpr void divide_beta(PauliOp op, unsigned row_bit) {
        power_ = (power_ + 4 - beta_exponent(op, row_bit)) & 3u;
    }

    constexpr bool operator==(const PhaseFactor&) const = default;

  private:
    constexpr explicit PhaseFactor(unsigned power) : power_(power) {}
    unsigned power_ = 0;
};

}  // namespace paulidecomp
