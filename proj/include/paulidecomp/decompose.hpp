#pragma once

#include <cstdint>

#include "paulidecomp/matrix.hpp"
#include "paulidecomp/pauli_string.hpp"

namespace paulidecomp {

// the brute-force reference path materializes full 2^N x 2^N tensors
inline constexpr unsigned kOracleMaxQubits = 6;

// tally of beta-factor applications and accumulate products, for the
// instrumented kernel variants
struct MultCount {
    std::uint64_t mults = 0;
};

/*
 * Single-coefficient kernels. All walk the column index in Gray-code order, so
 * they add the same products in the same order and return bit-identical sums.
 *
 * coeff_fast carries the element phase through an exact sign recurrence: O(2^N)
 * time, fixed memory beyond the input, branchless inner loop, each of the 2^N
 * contributing matrix elements read exactly once.
 *
 * coeff_slow rebuilds the phase from its N-factor product at every step: the
 * O(N 2^N) reference path and benchmark baseline.
 *
 * oracle_coeff_kron builds the Pauli tensor by explicit Kronecker products and
 * evaluates the normalized trace; ground truth, capped at kOracleMaxQubits.
 */
Complex coeff_fast(const DenseMatrix& g, std::uint64_t n);
Complex coeff_fast(const DenseMatrix& g, std::uint64_t n, MultCount& count);
Complex coeff_slow(const DenseMatrix& g, std::uint64_t n);
Complex coeff_slow(const DenseMatrix& g, std::uint64_t n, MultCount& count);
Complex oracle_coeff_kron(const DenseMatrix& g, std::uint64_t n);

/*
 * Full-decomposition drivers. Both fill the coefficient array indexed by
 * tensor number and produce bit-identical output for any thread count.
 */

// contiguous static split of [0, 4^N) across worker threads, each running the
// fast kernel with private fixed-size state against the shared read-only input
PauliDecomposition decompose_parallel(const DenseMatrix& g, unsigned threads = 1);
PauliDecomposition decompose_parallel(const DenseMatrix& g, unsigned threads, MultCount& count);

// visits tensors in modular quaternary Gray order, carrying the X/Y mask and
// initial phase across neighbouring tensors instead of recomputing them
PauliDecomposition decompose_serial_quaternary(const DenseMatrix& g);
PauliDecomposition decompose_serial_quaternary(const DenseMatrix& g, MultCount& count);

// Σ_n c_n P_n, accumulated entry-wise without materializing any tensor;
// coefficients that are exactly zero are skipped
DenseMatrix recompose(const PauliDecomposition& d);

/*
 * Modular quaternary Gray enumeration of tensor numbers: each advance bumps
 * one base-4 digit by +1 (mod 4). The X/Y mask changes only when the digit
 * transition crosses the diagonal/anti-diagonal divide, and the column-0
 * phase picks up a single factor quotient.
 */
struct QuaternaryGrayWalker {
    std::uint64_t step = 0;
    std::uint64_t index = 0;
    std::uint64_t mask = 0;
    PhaseFactor column0_phase{};

    constexpr void advance() {
        const unsigned t = flipped_digit_index(step);
        const PauliOp old_op = pauli_digit(index, t);
        const PauliOp new_op = static_cast<PauliOp>((static_cast<unsigned>(old_op) + 1) & 3u);
        index = set_base4_digit(index, t, static_cast<unsigned>(new_op));
        mask ^= std::uint64_t{mask_bit(old_op) ^ mask_bit(new_op)} << t;
        column0_phase.divide_beta(old_op, 0);
        column0_phase.times_beta(new_op, 0);
        ++step;
    }
};

}  // namespace paulidecomp
