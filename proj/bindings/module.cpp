#include <bit>
#include <complex>
#include <cstdint>
#include <string>

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>

#include "paulidecomp/bits.hpp"
#include "paulidecomp/decompose.hpp"
#include "paulidecomp/io.hpp"
#include "paulidecomp/pauli_string.hpp"

namespace py = pybind11;

namespace {

using namespace paulidecomp;

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

DenseMatrix to_matrix(const ComplexArray& array) {
    if (array.ndim() != 2)
        throw std::invalid_argument("matrix must be a 2-d array");
    const auto rows = static_cast<std::uint64_t>(array.shape(0));
    const auto cols = static_cast<std::uint64_t>(array.shape(1));
    if (rows != cols || rows < 2 || !std::has_single_bit(rows))
        throw std::invalid_argument("matrix must be square with power-of-two dimension >= 2");
    const auto num_qubits = static_cast<unsigned>(std::countr_zero(rows));
    std::vector<Complex> elements(array.data(), array.data() + rows * cols);
    return DenseMatrix(num_qubits, std::move(elements));
}

py::array_t<Complex> matrix_to_array(const DenseMatrix& matrix) {
    const auto dim = static_cast<py::ssize_t>(matrix.dim());
    return py::array_t<Complex>({dim, dim}, matrix.data());
}

py::array_t<Complex> coefficients_to_array(const PauliDecomposition& d) {
    const auto count = static_cast<py::ssize_t>(d.coefficients.size());
    return py::array_t<Complex>(py::array::ShapeContainer{count}, d.coefficients.data());
}

PauliDecomposition to_decomposition(const ComplexArray& array) {
    if (array.ndim() != 1)
        throw std::invalid_argument("coefficients must be a 1-d array");
    const auto count = static_cast<std::uint64_t>(array.shape(0));
    if (count < 4 || !std::has_single_bit(count) || (std::countr_zero(count) & 1))
        throw std::invalid_argument("coefficient count must be a power of four >= 4");
    const auto num_qubits = static_cast<unsigned>(std::countr_zero(count) / 2);
    return PauliDecomposition{num_qubits,
                              std::vector<Complex>(array.data(), array.data() + count)};
}

py::array_t<Complex> py_decompose(const ComplexArray& array, unsigned threads, bool serial) {
    const DenseMatrix g = to_matrix(array);
    return coefficients_to_array(serial ? decompose_serial_quaternary(g)
                                        : decompose_parallel(g, threads));
}

py::array_t<Complex> py_recompose(const ComplexArray& array) {
    return matrix_to_array(recompose(to_decomposition(array)));
}

Complex py_coefficient_index(const ComplexArray& array, std::uint64_t n, bool slow) {
    const DenseMatrix g = to_matrix(array);
    return slow ? coeff_slow(g, n) : coeff_fast(g, n);
}

Complex py_coefficient_label(const ComplexArray& array, const std::string& label, bool slow) {
    const DenseMatrix g = to_matrix(array);
    return py_coefficient_index(array, string_to_index(label, g.num_qubits()), slow);
}

Complex py_oracle_index(const ComplexArray& array, std::uint64_t n) {
    return oracle_coeff_kron(to_matrix(array), n);
}

Complex py_oracle_label(const ComplexArray& array, const std::string& label) {
    const DenseMatrix g = to_matrix(array);
    return oracle_coeff_kron(g, string_to_index(label, g.num_qubits()));
}

}  // namespace

PYBIND11_MODULE(_paulidecomp, m) {
    m.doc() = "Pauli-string decomposition of dense complex matrices";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    m.def("decompose", &py_decompose, py::arg("matrix"), py::arg("threads") = 1,
          py::arg("serial") = false,
          "All 4**N expansion coefficients of a 2**N x 2**N matrix, indexed by "
          "tensor number.");
    m.def("recompose", &py_recompose, py::arg("coefficients"),
          "Rebuild the dense matrix from its full coefficient vector.");
    m.def("coefficient", &py_coefficient_index, py::arg("matrix"), py::arg("n"),
          py::arg("slow") = false,
          "One expansion coefficient by tensor number.");
    m.def("coefficient", &py_coefficient_label, py::arg("matrix"), py::arg("label"),
          py::arg("slow") = false,
          "One expansion coefficient by operator label, e.g. \"IXZY\".");
    m.def("oracle_coefficient", &py_oracle_index, py::arg("matrix"), py::arg("n"),
          "Brute-force Kronecker-product reference for one coefficient.");
    m.def("oracle_coefficient", &py_oracle_label, py::arg("matrix"), py::arg("label"));

    m.def("gray_code", &gray_code, py::arg("k"));
    m.def("flipped_bit_index", &flipped_bit_index, py::arg("k"),
          "Index of the bit that changes between gray_code(k) and gray_code(k + 1).");
    m.def("xy_mask", &xy_mask, py::arg("n"), py::arg("num_qubits"),
          "Bitmask with bit t set when operator t of tensor n is X or Y.");
    m.def("label_to_index", &string_to_index, py::arg("label"), py::arg("num_qubits"));
    m.def("index_to_label", &index_to_string, py::arg("n"), py::arg("num_qubits"));

#ifdef PAULIDECOMP_VERSION
    m.attr("__version__") = PAULIDECOMP_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
