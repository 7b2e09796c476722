#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "paulidecomp/matrix.hpp"

namespace paulidecomp {

inline constexpr unsigned kBenchMaxQubits = 8;

struct BenchOptions {
    unsigned n_min = 1;
    unsigned n_max = 5;
    unsigned reps = 20;
    std::uint64_t seed = 1;
    unsigned threads = 1;  // > 1 adds a multithreaded fast-path measurement
};

struct BenchRecord {
    unsigned num_qubits = 0;
    std::string path;
    unsigned threads = 1;
    int rep = 0;  // -1 flags the per-(N, path) summary row
    std::uint64_t seed = 0;
    double seconds = 0.0;
    std::uint64_t mult_count = 0;
    double seconds_stddev = 0.0;  // summary rows only
};

// dense complex matrix with per-component entries uniform in [-1, 1),
// fully determined by (num_qubits, seed)
DenseMatrix random_matrix(unsigned num_qubits, std::uint64_t seed);

// per-(N, rep) generator stream, stable across runs and platforms
std::uint64_t matrix_seed(std::uint64_t seed, unsigned num_qubits, unsigned rep);

/*
 * Times full decompositions of seeded random matrices over the fast, slow and
 * serial-quaternary paths, cross-checking that all paths agree bit-for-bit on
 * every matrix. Wall time covers the decomposition call only. Multiplication
 * counts come from the instrumented kernels and are exact per (N, path).
 */
std::vector<BenchRecord> run_bench(const BenchOptions& options);

// CSV rows: N,path,threads,rep,seed,seconds,mult_count,seconds_stddev
void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

std::vector<BenchRecord> run_bench_csv(const BenchOptions& options, std::ostream& out);

}  // namespace paulidecomp
