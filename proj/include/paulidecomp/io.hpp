#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "paulidecomp/matrix.hpp"

namespace paulidecomp {

// malformed or inconsistent input data (files, labels, tokens)
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class MatrixFormat { text, binary };

/*
 * Matrix files. Text: a "PAULIDECOMP-MAT v1 N=<N>" header line followed by one
 * row per line, entries as <re>±<im>j tokens; a headerless square layout is
 * also accepted on read. Binary: 8-byte magic "PDMAT-V1", uint64 little-endian
 * N, then row-major float64-LE pairs (re, im). See docs/formats.md.
 *
 * A path of "-" reads standard input / writes standard output.
 */
DenseMatrix read_matrix(const std::string& path, MatrixFormat format);
void write_matrix(const DenseMatrix& matrix, const std::string& path, MatrixFormat format);

DenseMatrix read_matrix_text(std::istream& in);
DenseMatrix read_matrix_binary(std::istream& in);
void write_matrix_text(const DenseMatrix& matrix, std::ostream& out);
void write_matrix_binary(const DenseMatrix& matrix, std::ostream& out);

/*
 * Coefficient files: CSV with a "# PAULIDECOMP-COEF v1 N=<N>" declaration
 * line, a "pauli,re,im" header, and one record per retained coefficient in
 * ascending tensor-number order.
 */

// writes every record with |c_n| > threshold; returns the record count
std::size_t write_coefficients(const PauliDecomposition& d, const std::string& path,
                               double threshold = 0.0);
std::size_t write_coefficients(const PauliDecomposition& d, std::ostream& out,
                               double threshold = 0.0);

// unlisted coefficients read back as zero
PauliDecomposition read_coefficients(const std::string& path);
PauliDecomposition read_coefficients(std::istream& in);

// shortest float text that round-trips, with ".0" appended to integral values
std::string format_double(double value);

}  // namespace paulidecomp
