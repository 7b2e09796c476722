#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <new>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "paulidecomp/bench.hpp"
#include "paulidecomp/decompose.hpp"
#include "paulidecomp/io.hpp"
#include "paulidecomp/pauli_string.hpp"

namespace {

using namespace paulidecomp;

struct CliConfig {
    std::string in_path = "-";
    std::string out_path = "-";
    std::string format = "text";
    double eps = 0.0;
    unsigned threads = 1;
    bool serial = false;
    std::string label;
    BenchOptions bench;
};

MatrixFormat to_format(const std::string& name) {
    return name == "binary" ? MatrixFormat::binary : MatrixFormat::text;
}

int run_decompose(const CliConfig& cfg) {
    const DenseMatrix g = read_matrix(cfg.in_path, to_format(cfg.format));
    const auto start = std::chrono::steady_clock::now();
    const PauliDecomposition d =
        cfg.serial ? decompose_serial_quaternary(g) : decompose_parallel(g, cfg.threads);
    const auto stop = std::chrono::steady_clock::now();
    const std::size_t written = write_coefficients(d, cfg.out_path, cfg.eps);
    std::cerr << "N=" << g.num_qubits() << " nonzero=" << written << " seconds="
              << format_double(std::chrono::duration<double>(stop - start).count()) << '\n';
    return 0;
}

int run_recompose(const CliConfig& cfg) {
    const PauliDecomposition d = read_coefficients(cfg.in_path);
    write_matrix(recompose(d), cfg.out_path, to_format(cfg.format));
    return 0;
}

int run_coeff(const CliConfig& cfg) {
    const DenseMatrix g = read_matrix(cfg.in_path, to_format(cfg.format));
    const std::uint64_t n = string_to_index(cfg.label, g.num_qubits());
    const Complex c = coeff_fast(g, n);
    std::cout << format_double(c.real()) << ',' << format_double(c.imag()) << '\n';
    return 0;
}

int run_bench_command(const CliConfig& cfg) {
    if (cfg.out_path == "-") {
        run_bench_csv(cfg.bench, std::cout);
        return 0;
    }
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw FormatError("cannot open \"" + cfg.out_path + "\" for writing");
    run_bench_csv(cfg.bench, file);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pauli-string decomposition of dense complex matrices"};
    app.require_subcommand(1);

    CliConfig cfg;
    const auto add_matrix_io = [&cfg](CLI::App* sub, bool with_out) {
        sub->add_option("--in", cfg.in_path, "input path, - for stdin")->required();
        if (with_out)
            sub->add_option("--out", cfg.out_path, "output path, - for stdout");
        sub->add_option("--format", cfg.format, "matrix file format")
            ->check(CLI::IsMember({"text", "binary"}))
            ->capture_default_str();
    };

    CLI::App* decompose = app.add_subcommand(
        "decompose", "read a matrix, write its Pauli-string coefficients as CSV");
    add_matrix_io(decompose, true);
    decompose->add_option("--eps", cfg.eps, "drop coefficients with |c| <= eps (0 keeps all)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    decompose->add_option("--threads", cfg.threads, "worker threads for the fast path")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    decompose->add_flag("--serial", cfg.serial,
                        "use the serial quaternary-Gray driver instead of the parallel one");

    CLI::App* recompose_cmd = app.add_subcommand(
        "recompose", "read a coefficient CSV, write the reconstructed matrix");
    add_matrix_io(recompose_cmd, true);

    CLI::App* coeff = app.add_subcommand(
        "coeff", "print one labelled coefficient of a matrix as re,im");
    coeff->add_option("label", cfg.label, "operator label, e.g. IXZY")->required();
    add_matrix_io(coeff, false);

    CLI::App* bench = app.add_subcommand(
        "bench", "time full decompositions over seeded random matrices, emit CSV");
    bench->add_option("--n-min", cfg.bench.n_min, "smallest qubit count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--n-max", cfg.bench.n_max, "largest qubit count (capped at 8)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--reps", cfg.bench.reps, "random matrices per qubit count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--seed", cfg.bench.seed, "master seed for matrix generation")
        ->capture_default_str();
    bench->add_option("--threads", cfg.bench.threads,
                      "also time the fast path at this thread count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    bench->add_option("--out", cfg.out_path, "output path, - for stdout");

    try {
        app.parse(argc, argv);
        if (*decompose)
            return run_decompose(cfg);
        if (*recompose_cmd)
            return run_recompose(cfg);
        if (*coeff)
            return run_coeff(cfg);
        if (*bench)
            return run_bench_command(cfg);
        return 1;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::bad_alloc&) {
        std::cerr << "error: out of memory for this problem size\n";
        return 2;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
}
