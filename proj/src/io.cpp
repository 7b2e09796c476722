#include "paulidecomp/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>
#include <unordered_set>
#include <vector>

#include "paulidecomp/pauli_string.hpp"

namespace paulidecomp {

namespace {

constexpr char kMatrixHeaderPrefix[] = "PAULIDECOMP-MAT v1 N=";
constexpr char kCoefHeaderPrefix[] = "# PAULIDECOMP-COEF v1 N=";
constexpr char kCsvHeader[] = "pauli,re,im";
constexpr char kBinaryMagic[8] = {'P', 'D', 'M', 'A', 'T', '-', 'V', '1'};

double parse_double_field(std::string_view text, const std::string& what) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '+')
        body.remove_prefix(1);  // from_chars takes '-' but not '+'
    double value = 0.0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || end != body.data() + body.size())
        throw FormatError("cannot parse " + what + " from \"" + std::string(text) + "\"");
    return value;
}

// token syntax <re>±<im>j, no interior spaces; the separating sign is the last
// '+' or '-' not directly after an exponent marker
Complex parse_complex_token(std::string_view token) {
    if (token.size() < 4 || token.back() != 'j')
        throw FormatError("matrix entry \"" + std::string(token) +
                          "\" is not of the form <re>±<im>j");
    std::size_t split = 0;
    for (std::size_t k = 1; k + 1 < token.size(); ++k) {
        if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E')
            split = k;
    }
    if (split == 0)
        throw FormatError("matrix entry \"" + std::string(token) +
                          "\" is not of the form <re>±<im>j");
    const double re = parse_double_field(token.substr(0, split), "real part");
    const double im = parse_double_field(token.substr(split, token.size() - split - 1),
                                         "imaginary part");
    return Complex{re, im};
}

void append_complex_token(std::string& out, Complex value) {
    out += format_double(value.real());
    out += std::signbit(value.imag()) ? '-' : '+';
    out += format_double(std::abs(value.imag()));
    out += 'j';
}

std::vector<std::string> read_stripped_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string::npos)
        lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t'))
            ++k;
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t')
            ++k;
        if (k > start)
            tokens.push_back(line.substr(start, k - start));
    }
    return tokens;
}

unsigned parse_header_qubits(std::string_view line, std::string_view prefix,
                             const char* header_name) {
    std::string_view rest = line.substr(prefix.size());
    unsigned num_qubits = 0;
    const auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), num_qubits);
    std::string_view tail(end, static_cast<std::size_t>(rest.data() + rest.size() - end));
    if (ec != std::errc{} || tail.find_first_not_of(" \t") != std::string_view::npos)
        throw FormatError(std::string("malformed header: \"") + std::string(line) + "\"" +
                          " is not a valid " + header_name + " header");
    if (num_qubits == 0 || num_qubits > kMaxQubits)
        throw FormatError("dimension error: header declares N=" + std::to_string(num_qubits) +
                          ", supported range is [1, 32]");
    return num_qubits;
}

void check_finite(Complex value, std::uint64_t row, std::uint64_t col) {
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw FormatError("non-finite value at row " + std::to_string(row) + ", column " +
                          std::to_string(col));
}

std::uint64_t read_u64_le(std::istream& in) {
    unsigned char bytes[8];
    in.read(reinterpret_cast<char*>(bytes), 8);
    std::uint64_t value = 0;
    for (unsigned k = 0; k < 8; ++k)
        value |= std::uint64_t{bytes[k]} << (8 * k);
    return value;
}

void write_u64_le(std::ostream& out, std::uint64_t value) {
    char bytes[8];
    for (unsigned k = 0; k < 8; ++k)
        bytes[k] = static_cast<char>((value >> (8 * k)) & 0xffu);
    out.write(bytes, 8);
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    std::string text(buffer, end);
    if (text.find_first_of(".eEnf") == std::string::npos)
        text += ".0";
    return text;
}

DenseMatrix read_matrix_text(std::istream& in) {
    const std::vector<std::string> lines = read_stripped_lines(in);
    if (lines.empty())
        throw FormatError("malformed header: input is empty");

    std::size_t first_row = 0;
    std::uint64_t dim = 0;
    unsigned num_qubits = 0;
    const bool has_header = lines[0].rfind(kMatrixHeaderPrefix, 0) == 0 ||
                            lines[0].rfind("PAULIDECOMP-MAT", 0) == 0;
    if (has_header) {
        if (lines[0].rfind(kMatrixHeaderPrefix, 0) != 0)
            throw FormatError("malformed header: \"" + lines[0] + "\"");
        num_qubits = parse_header_qubits(lines[0], kMatrixHeaderPrefix, "matrix");
        dim = pow2(num_qubits);
        first_row = 1;
    }

    std::vector<std::vector<std::string_view>> rows;
    for (std::size_t k = first_row; k < lines.size(); ++k) {
        auto tokens = split_whitespace(lines[k]);
        if (!tokens.empty())
            rows.push_back(std::move(tokens));
    }

    if (has_header) {
        if (rows.size() < dim)
            throw FormatError("truncated payload: expected " + std::to_string(dim) +
                              " rows, found " + std::to_string(rows.size()));
        if (rows.size() > dim)
            throw FormatError("payload has more rows than the header declares");
    } else {
        // headerless square layout: dimensions inferred from the row structure
        dim = rows.size();
        if (dim == 0)
            throw FormatError("malformed header: input is empty");
        if (dim < 2 || !std::has_single_bit(dim))
            throw FormatError("dimension error: " + std::to_string(dim) +
                              " is not a power of two of at least 2");
        num_qubits = trailing_zeros(dim);
        if (num_qubits > kMaxQubits)
            throw FormatError("dimension error: dimension exceeds the 32-qubit bound");
    }

    std::vector<Complex> elements(dim * dim);
    for (std::uint64_t j = 0; j < dim; ++j) {
        if (rows[j].size() != dim)
            throw FormatError((has_header ? "truncated payload: row " : "dimension error: row ") +
                              std::to_string(j) + " has " + std::to_string(rows[j].size()) +
                              " entries, expected " + std::to_string(dim));
        for (std::uint64_t i = 0; i < dim; ++i) {
            const Complex value = parse_complex_token(rows[j][i]);
            check_finite(value, j, i);
            elements[j * dim + i] = value;
        }
    }
    return DenseMatrix(num_qubits, std::move(elements));
}

DenseMatrix read_matrix_binary(std::istream& in) {
    char magic[8];
    in.read(magic, 8);
    if (in.gcount() != 8 || std::memcmp(magic, kBinaryMagic, 8) != 0)
        throw FormatError("malformed header: bad magic, not a binary matrix file");
    const std::uint64_t declared = read_u64_le(in);
    if (!in)
        throw FormatError("malformed header: file ends inside the 16-byte header");
    if (declared == 0 || declared > kMaxQubits)
        throw FormatError("dimension error: header declares N=" + std::to_string(declared) +
                          ", supported range is [1, 32]");
    const unsigned num_qubits = static_cast<unsigned>(declared);

    DenseMatrix matrix(num_qubits);
    const std::uint64_t dim = matrix.dim();
    for (std::uint64_t j = 0; j < dim; ++j) {
        for (std::uint64_t i = 0; i < dim; ++i) {
            const std::uint64_t re_bits = read_u64_le(in);
            const std::uint64_t im_bits = read_u64_le(in);
            if (!in)
                throw FormatError("truncated payload: expected " +
                                  std::to_string(16 * matrix.element_count()) +
                                  " payload bytes");
            const Complex value{std::bit_cast<double>(re_bits), std::bit_cast<double>(im_bits)};
            check_finite(value, j, i);
            matrix(j, i) = value;
        }
    }
    if (in.peek() != std::char_traits<char>::eof())
        throw FormatError("trailing data after the matrix payload");
    return matrix;
}

void write_matrix_text(const DenseMatrix& matrix, std::ostream& out) {
    out << kMatrixHeaderPrefix << matrix.num_qubits() << '\n';
    const std::uint64_t dim = matrix.dim();
    std::string line;
    for (std::uint64_t j = 0; j < dim; ++j) {
        line.clear();
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (i > 0)
                line += ' ';
            append_complex_token(line, matrix(j, i));
        }
        line += '\n';
        out << line;
    }
}

void write_matrix_binary(const DenseMatrix& matrix, std::ostream& out) {
    out.write(kBinaryMagic, 8);
    write_u64_le(out, matrix.num_qubits());
    for (const Complex value : matrix.elements()) {
        write_u64_le(out, std::bit_cast<std::uint64_t>(value.real()));
        write_u64_le(out, std::bit_cast<std::uint64_t>(value.imag()));
    }
}

DenseMatrix read_matrix(const std::string& path, MatrixFormat format) {
    if (path == "-")
        return format == MatrixFormat::text ? read_matrix_text(std::cin)
                                            : read_matrix_binary(std::cin);
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw FormatError("cannot open \"" + path + "\" for reading");
    return format == MatrixFormat::text ? read_matrix_text(file) : read_matrix_binary(file);
}

void write_matrix(const DenseMatrix& matrix, const std::string& path, MatrixFormat format) {
    const auto write = [&](std::ostream& out) {
        if (format == MatrixFormat::text)
            write_matrix_text(matrix, out);
        else
            write_matrix_binary(matrix, out);
        out.flush();
        if (!out)
            throw FormatError("write failure on \"" + path + "\"");
    };
    if (path == "-") {
        write(std::cout);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw FormatError("cannot open \"" + path + "\" for writing");
    write(file);
}

std::size_t write_coefficients(const PauliDecomposition& d, std::ostream& out, double threshold) {
    if (threshold < 0.0)
        throw std::invalid_argument("threshold must be non-negative");
    out << kCoefHeaderPrefix << d.num_qubits << '\n' << kCsvHeader << '\n';
    std::size_t written = 0;
    std::string line;
    for (std::uint64_t n = 0; n < d.coefficients.size(); ++n) {
        const Complex c = d.coefficients[n];
        // threshold 0 keeps everything, exact zeros included
        if (threshold > 0.0 && std::abs(c) <= threshold)
            continue;
        line.assign(index_to_string(n, d.num_qubits));
        line += ',';
        line += format_double(c.real());
        line += ',';
        line += format_double(c.imag());
        line += '\n';
        out << line;
        ++written;
    }
    return written;
}

std::size_t write_coefficients(const PauliDecomposition& d, const std::string& path,
                               double threshold) {
    if (path == "-") {
        const std::size_t written = write_coefficients(d, std::cout, threshold);
        std::cout.flush();
        return written;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw FormatError("cannot open \"" + path + "\" for writing");
    const std::size_t written = write_coefficients(d, file, threshold);
    file.flush();
    if (!file)
        throw FormatError("write failure on \"" + path + "\"");
    return written;
}

PauliDecomposition read_coefficients(std::istream& in) {
    const std::vector<std::string> lines = read_stripped_lines(in);
    if (lines.empty())
        throw FormatError("malformed header: input is empty");

    std::size_t next = 0;
    bool declared = false;
    unsigned num_qubits = 0;
    if (lines[0].rfind("#", 0) == 0) {
        if (lines[0].rfind(kCoefHeaderPrefix, 0) != 0)
            throw FormatError("malformed header: \"" + lines[0] + "\"");
        num_qubits = parse_header_qubits(lines[0], kCoefHeaderPrefix, "coefficient");
        declared = true;
        next = 1;
    }
    if (next >= lines.size() || lines[next] != kCsvHeader)
        throw FormatError("malformed header: expected the \"pauli,re,im\" column header");
    ++next;

    struct Record {
        std::uint64_t index;
        Complex value;
    };
    std::vector<Record> records;
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t k = next; k < lines.size(); ++k) {
        const std::string& line = lines[k];
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        const std::size_t c1 = line.find(',');
        const std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos ||
            line.find(',', c2 + 1) != std::string::npos)
            throw FormatError("record \"" + line + "\" does not have exactly three fields");
        const std::string_view label(line.data(), c1);

        if (!declared && records.empty())
            num_qubits = static_cast<unsigned>(label.size());
        if (label.size() != num_qubits)
            throw FormatError("label \"" + std::string(label) + "\" has length " +
                              std::to_string(label.size()) + ", expected " +
                              std::to_string(num_qubits));
        const std::uint64_t n = string_to_index(label, num_qubits);
        if (!seen.insert(n).second)
            throw FormatError("duplicate record for label \"" + std::string(label) + "\"");

        const double re = parse_double_field(
            std::string_view(line).substr(c1 + 1, c2 - c1 - 1), "real part");
        const double im = parse_double_field(std::string_view(line).substr(c2 + 1), "imaginary part");
        if (!std::isfinite(re) || !std::isfinite(im))
            throw FormatError("non-finite value in record \"" + line + "\"");
        records.push_back({n, Complex{re, im}});
    }

    if (!declared && records.empty())
        throw FormatError("cannot determine the operator count from an empty coefficient file");
    if (num_qubits > kMaxQubits)
        throw FormatError("dimension error: labels declare N=" + std::to_string(num_qubits) +
                          " beyond the " + std::to_string(kMaxQubits) + "-operator limit");
    if (num_qubits == kMaxQubits)
        throw std::length_error("a dense coefficient vector for N=32 exceeds the address space");

    PauliDecomposition d{num_qubits, std::vector<Complex>(pow4(num_qubits))};
    for (const Record& r : records)
        d.coefficients[r.index] = r.value;
    return d;
}

PauliDecomposition read_coefficients(const std::string& path) {
    if (path == "-")
        return read_coefficients(std::cin);
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw FormatError("cannot open \"" + path + "\" for reading");
    return read_coefficients(file);
}

}  // namespace paulidecomp
