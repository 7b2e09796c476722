#include <array>
#include <complex>

#include <catch2/catch_amalgamated.hpp>

#include "paulidecomp/pauli.hpp"

using namespace paulidecomp;

namespace {

using Matrix2 = std::array<std::array<Complex, 2>, 2>;

constexpr Complex kI{0.0, 1.0};

Matrix2 literal_matrix(PauliOp op) {
    switch (op) {
        case PauliOp::I: return {{{1.0, 0.0}, {0.0, 1.0}}};
        case PauliOp::X: return {{{0.0, 1.0}, {1.0, 0.0}}};
        case PauliOp::Y: return {{{0.0, -kI}, {kI, 0.0}}};
        case PauliOp::Z: return {{{1.0, 0.0}, {0.0, -1.0}}};
    }
    return {};
}

constexpr PauliOp kOps[4] = {PauliOp::I, PauliOp::X, PauliOp::Y, PauliOp::Z};

}  // namespace

TEST_CASE("beta exponents match the literal 2x2 matrices") {
    for (PauliOp op : kOps) {
        const Matrix2 p = literal_matrix(op);
        for (unsigned row = 0; row < 2; ++row) {
            const unsigned col = row ^ mask_bit(op);
            // the row's single nonzero entry sits at the mask column...
            CHECK(p[row][col] == beta_value(op, row));
            // ...and the other column is zero
            CHECK(p[row][col ^ 1u] == Complex{0.0, 0.0});
        }
    }
}

TEST_CASE("antidiagonal classification") {
    CHECK(!is_antidiagonal(PauliOp::I));
    CHECK(is_antidiagonal(PauliOp::X));
    CHECK(is_antidiagonal(PauliOp::Y));
    CHECK(!is_antidiagonal(PauliOp::Z));
}

TEST_CASE("row-flip quotient is a pure sign") {
    for (PauliOp op : kOps) {
        const unsigned e = ratio_exponent(op);
        CHECK((e == 0 || e == 2));
        CHECK(beta_value(op, 1) == beta_value(op, 0) * ratio_value(op));
    }
    CHECK(ratio_value(PauliOp::I) == 1.0);
    CHECK(ratio_value(PauliOp::X) == 1.0);
    CHECK(ratio_value(PauliOp::Y) == -1.0);
    CHECK(ratio_value(PauliOp::Z) == -1.0);
}

TEST_CASE("unit phases are the exact fourth roots of unity") {
    CHECK(unit_phase(0) == Complex{1.0, 0.0});
    CHECK(unit_phase(1) == Complex{0.0, 1.0});
    CHECK(unit_phase(2) == Complex{-1.0, 0.0});
    CHECK(unit_phase(3) == Complex{0.0, -1.0});
}

TEST_CASE("xy mask flags exactly the antidiagonal digits") {
    CHECK(xy_mask(0, 3) == 0);             // III
    CHECK(xy_mask(6, 2) == 0b11);          // XY
    CHECK(xy_mask(0b01'00'10'11, 4) == 0b1010);  // XIYZ: X and Y positions only
    for (std::uint64_t n = 0; n < 64; ++n) {
        std::uint64_t expected = 0;
        for (unsigned t = 0; t < 3; ++t)
            if (is_antidiagonal(pauli_digit(n, t)))
                expected |= std::uint64_t{1} << t;
        REQUIRE(xy_mask(n, 3) == expected);
    }
}

TEST_CASE("initial column phase counts Y factors") {
    // the column-0 entry of the full tensor is (-i)^(number of Y digits)
    CHECK(PhaseFactor::initial_column_phase(0, 2).value() == Complex{1.0, 0.0});
    CHECK(PhaseFactor::initial_column_phase(2, 1).value() == -kI);       // Y
    CHECK(PhaseFactor::initial_column_phase(10, 2).value() == Complex{-1.0, 0.0});  // YY
    CHECK(PhaseFactor::initial_column_phase(0b10'10'10, 3).value() == kI);          // YYY
}

TEST_CASE("phase factor products and quotients cancel exactly") {
    for (PauliOp op : kOps) {
        for (unsigned row = 0; row < 2; ++row) {
            PhaseFactor f = PhaseFactor::i_to(1);
            f.times_beta(op, row);
            f.divide_beta(op, row);
            CHECK(f == PhaseFactor::i_to(1));
        }
        PhaseFactor g;
        g.times_ratio(op);
        g.times_ratio(op);
        CHECK(g == PhaseFactor{});  // the quotient is ±1, so applying it twice is a no-op
    }
}

TEST_CASE("phase factor multiplication mirrors complex multiplication") {
    for (unsigned a = 0; a < 4; ++a) {
        for (PauliOp op : kOps) {
            for (unsigned row = 0; row < 2; ++row) {
                PhaseFactor f = PhaseFactor::i_to(a);
                f.times_beta(op, row);
                CHECK(f.value() == unit_phase(a) * beta_value(op, row));
            }
        }
    }
}
