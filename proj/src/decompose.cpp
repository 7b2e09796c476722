#include "paulidecomp/decompose.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace paulidecomp {

namespace {

void check_index(const DenseMatrix& g, std::uint64_t n) {
    if (!valid_pauli_index(n, g.num_qubits()))
        throw std::invalid_argument("tensor number " + std::to_string(n) +
                                    " out of range for " + std::to_string(g.num_qubits()) +
                                    " qubits");
}

/*
 * Shared inner sum Σ_i λ_i [G]_{i^mask, i}, walking i through the Gray codes.
 * Every full-speed path funnels through this loop, which keeps differently
 * driven decompositions bit-identical: same products, same order.
 *
 * λ stays a 2-bit power of i; each step multiplies it by the ±1 row-flip
 * quotient of the operator at the flipped bit. No branches, no allocation,
 * each of the 2^N contributing elements read once.
 */
template <bool kCount>
Complex gray_walk_sum(const DenseMatrix& g, std::uint64_t n, std::uint64_t mask,
                      PhaseFactor lambda0, std::uint64_t* mults) {
    const std::uint64_t dim = g.dim();
    const Complex* a = g.data();
    Complex acc{0.0, 0.0};
    PhaseFactor lambda = lambda0;
    GrayCodeWalker walker;
    for (; walker.step + 1 < dim; walker.advance()) {
        const std::uint64_t i = walker.code;
        acc += lambda.value() * a[(i ^ mask) * dim + i];
        lambda.times_ratio(pauli_digit(n, walker.flipped_bit()));
    }
    acc += lambda.value() * a[(walker.code ^ mask) * dim + walker.code];
    if constexpr (kCount)
        *mults += 2 * dim - 1;
    return acc;
}

template <bool kCount>
Complex coeff_fast_impl(const DenseMatrix& g, std::uint64_t n, std::uint64_t* mults) {
    const unsigned num_qubits = g.num_qubits();
    const std::uint64_t mask = xy_mask(n, num_qubits);
    const PhaseFactor lambda0 = PhaseFactor::initial_column_phase(n, num_qubits);
    if constexpr (kCount)
        *mults += num_qubits;  // the one-time N-factor product behind lambda0
    return gray_walk_sum<kCount>(g, n, mask, lambda0, mults) / static_cast<double>(g.dim());
}

template <bool kCount>
Complex coeff_slow_impl(const DenseMatrix& g, std::uint64_t n, std::uint64_t* mults) {
    const unsigned num_qubits = g.num_qubits();
    const std::uint64_t dim = g.dim();
    const std::uint64_t mask = xy_mask(n, num_qubits);
    const Complex* a = g.data();
    Complex acc{0.0, 0.0};
    GrayCodeWalker walker;
    for (std::uint64_t k = 0; k < dim; ++k) {
        const std::uint64_t i = walker.code;
        // the full N-factor phase product, rebuilt from scratch every step
        PhaseFactor lambda;
        for (unsigned t = 0; t < num_qubits; ++t)
            lambda.times_beta(pauli_digit(n, t), static_cast<unsigned>((i >> t) & 1u));
        acc += lambda.value() * a[(i ^ mask) * dim + i];
        if constexpr (kCount)
            *mults += num_qubits + 1;
        if (k + 1 < dim)
            walker.advance();
    }
    return acc / static_cast<double>(dim);
}

using PauliMatrix2 = std::array<std::array<Complex, 2>, 2>;

PauliMatrix2 pauli_matrix(PauliOp op) {
    constexpr Complex o{0.0, 0.0}, l{1.0, 0.0}, ni{0.0, -1.0}, pi{0.0, 1.0};
    switch (op) {
        case PauliOp::I: return {{{l, o}, {o, l}}};
        case PauliOp::X: return {{{o, l}, {l, o}}};
        case PauliOp::Y: return {{{o, ni}, {pi, o}}};
        case PauliOp::Z: return {{{l, o}, {o, Complex{-1.0, 0.0}}}};
    }
    throw std::logic_error("unreachable");
}

template <bool kCount>
PauliDecomposition decompose_parallel_impl(const DenseMatrix& g, unsigned threads,
                                           std::uint64_t* mults) {
    if (threads == 0)
        throw std::invalid_argument("thread count must be at least 1");
    const std::uint64_t total = pow4(g.num_qubits());
    PauliDecomposition result{g.num_qubits(), std::vector<Complex>(total)};

    const std::uint64_t chunk = std::max<std::uint64_t>(1, (total + threads - 1) / threads);
    Complex* out = result.coefficients.data();

    const auto work = [&](std::uint64_t begin, std::uint64_t end, std::uint64_t* local_mults) {
        for (std::uint64_t n = begin; n < end; ++n)
            out[n] = coeff_fast_impl<kCount>(g, n, local_mults);
    };

    if (threads == 1 || chunk >= total) {
        work(0, total, mults);
        return result;
    }

    const unsigned used = static_cast<unsigned>((total + chunk - 1) / chunk);
    std::vector<std::uint64_t> local(used, 0);
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        pool.emplace_back(work, begin, end, &local[w]);
    }
    for (auto& t : pool)
        t.join();
    if constexpr (kCount)
        for (const std::uint64_t m : local)
            *mults += m;
    return result;
}

template <bool kCount>
PauliDecomposition decompose_serial_quaternary_impl(const DenseMatrix& g, std::uint64_t* mults) {
    const std::uint64_t total = pow4(g.num_qubits());
    const double dim = static_cast<double>(g.dim());
    PauliDecomposition result{g.num_qubits(), std::vector<Complex>(total)};

    QuaternaryGrayWalker walker;  // starts at the all-identity tensor
    if constexpr (kCount)
        *mults += g.num_qubits();
    for (std::uint64_t k = 0;; ++k) {
        result.coefficients[walker.index] =
            gray_walk_sum<kCount>(g, walker.index, walker.mask, walker.column0_phase, mults) / dim;
        if (k + 1 == total)
            break;
        walker.advance();
        if constexpr (kCount)
            *mults += 1;  // the carried single-factor phase quotient
    }
    return result;
}

}  // namespace

Complex coeff_fast(const DenseMatrix& g, std::uint64_t n) {
    check_index(g, n);
    return coeff_fast_impl<false>(g, n, nullptr);
}

Complex coeff_fast(const DenseMatrix& g, std::uint64_t n, MultCount& count) {
    check_index(g, n);
    return coeff_fast_impl<true>(g, n, &count.mults);
}

Complex coeff_slow(const DenseMatrix& g, std::uint64_t n) {
    check_index(g, n);
    return coeff_slow_impl<false>(g, n, nullptr);
}

Complex coeff_slow(const DenseMatrix& g, std::uint64_t n, MultCount& count) {
    check_index(g, n);
    return coeff_slow_impl<true>(g, n, &count.mults);
}

Complex oracle_coeff_kron(const DenseMatrix& g, std::uint64_t n) {
    check_index(g, n);
    const unsigned num_qubits = g.num_qubits();
    if (num_qubits > kOracleMaxQubits)
        throw std::invalid_argument("reference path is capped at " +
                                    std::to_string(kOracleMaxQubits) + " qubits");

    // P_n = σ_{N-1} ⊗ ... ⊗ σ_0, built by explicit Kronecker products
    std::vector<Complex> p{Complex{1.0, 0.0}};
    std::uint64_t dim = 1;
    for (unsigned t = num_qubits; t-- > 0;) {
        const PauliMatrix2 sigma = pauli_matrix(pauli_digit(n, t));
        std::vector<Complex> next(4 * p.size());
        for (std::uint64_t i = 0; i < dim; ++i)
            for (std::uint64_t j = 0; j < dim; ++j)
                for (unsigned a = 0; a < 2; ++a)
                    for (unsigned b = 0; b < 2; ++b)
                        next[(2 * i + a) * 2 * dim + 2 * j + b] = p[i * dim + j] * sigma[a][b];
        p = std::move(next);
        dim *= 2;
    }

    Complex trace{0.0, 0.0};
    for (std::uint64_t i = 0; i < dim; ++i)
        for (std::uint64_t j = 0; j < dim; ++j)
            trace += p[i * dim + j] * g(j, i);
    return trace / static_cast<double>(dim);
}

PauliDecomposition decompose_parallel(const DenseMatrix& g, unsigned threads) {
    return decompose_parallel_impl<false>(g, threads, nullptr);
}

PauliDecomposition decompose_parallel(const DenseMatrix& g, unsigned threads, MultCount& count) {
    return decompose_parallel_impl<true>(g, threads, &count.mults);
}

PauliDecomposition decompose_serial_quaternary(const DenseMatrix& g) {
    return decompose_serial_quaternary_impl<false>(g, nullptr);
}

PauliDecomposition decompose_serial_quaternary(const DenseMatrix& g, MultCount& count) {
    return decompose_serial_quaternary_impl<true>(g, &count.mults);
}

DenseMatrix recompose(const PauliDecomposition& d) {
    if (d.num_qubits == 0 || d.num_qubits > kMaxQubits)
        throw std::invalid_argument("qubit count must be in [1, 32]");
    if (d.num_qubits == kMaxQubits)
        throw std::length_error("a dense matrix for N=32 exceeds the address space");
    if (d.coefficients.size() != pow4(d.num_qubits))
        throw std::invalid_argument("coefficient array holds " +
                                    std::to_string(d.coefficients.size()) +
                                    " entries, expected " + std::to_string(pow4(d.num_qubits)));

    DenseMatrix out(d.num_qubits);
    const std::uint64_t dim = out.dim();
    Complex* a = out.data();
    for (std::uint64_t n = 0; n < d.coefficients.size(); ++n) {
        const Complex c = d.coefficients[n];
        if (c == Complex{0.0, 0.0})
            continue;
        // the coefficient walk run in reverse: row r holds λ_r c_n at column r^mask
        const std::uint64_t mask = xy_mask(n, d.num_qubits);
        PhaseFactor lambda = PhaseFactor::initial_column_phase(n, d.num_qubits);
        GrayCodeWalker walker;
        for (; walker.step + 1 < dim; walker.advance()) {
            const std::uint64_t r = walker.code;
            a[r * dim + (r ^ mask)] += lambda.value() * c;
            lambda.times_ratio(pauli_digit(n, walker.flipped_bit()));
        }
        a[walker.code * dim + (walker.code ^ mask)] += lambda.value() * c;
    }
    return out;
}

}  // namespace paulidecomp
