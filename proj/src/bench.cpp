#include "paulidecomp/bench.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "paulidecomp/decompose.hpp"
#include "paulidecomp/io.hpp"

namespace paulidecomp {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// top 53 bits to [0,1), then to [-1,1)
double unit_interval(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

struct PathSpec {
    std::string label;
    unsigned threads;
    std::function<PauliDecomposition(const DenseMatrix&, MultCount&)> run;
};

double elapsed_seconds(std::chrono::steady_clock::time_point start,
                       std::chrono::steady_clock::time_point stop) {
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

std::uint64_t matrix_seed(std::uint64_t seed, unsigned num_qubits, unsigned rep) {
    std::uint64_t state = seed ^ (std::uint64_t{num_qubits} * 0xD6E8FEB86659FD93ull) ^
                          (std::uint64_t{rep} * 0xCA5A826395121157ull);
    return splitmix64(state);
}

DenseMatrix random_matrix(unsigned num_qubits, std::uint64_t seed) {
    DenseMatrix matrix(num_qubits);
    std::uint64_t state = seed;
    Complex* data = matrix.data();
    for (std::uint64_t k = 0; k < matrix.element_count(); ++k) {
        const double re = unit_interval(splitmix64(state));
        const double im = unit_interval(splitmix64(state));
        data[k] = Complex{re, im};
    }
    return matrix;
}

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
    if (options.n_min == 0 || options.n_min > options.n_max)
        throw std::invalid_argument("qubit range must satisfy 1 <= n-min <= n-max");
    if (options.n_max > kBenchMaxQubits)
        throw std::invalid_argument("benchmark qubit count capped at " +
                                    std::to_string(kBenchMaxQubits));
    if (options.reps == 0)
        throw std::invalid_argument("repetition count must be at least 1");
    if (options.threads == 0)
        throw std::invalid_argument("thread count must be at least 1");

    std::vector<PathSpec> paths;
    paths.push_back({"fast", 1, [](const DenseMatrix& g, MultCount& c) {
                         return decompose_parallel(g, 1, c);
                     }});
    if (options.threads > 1)
        paths.push_back({"fast", options.threads, [t = options.threads](const DenseMatrix& g,
                                                                        MultCount& c) {
                             return decompose_parallel(g, t, c);
                         }});
    paths.push_back({"slow", 1, [](const DenseMatrix& g, MultCount& c) {
                         PauliDecomposition d{g.num_qubits(),
                                              std::vector<Complex>(pow4(g.num_qubits()))};
                         for (std::uint64_t n = 0; n < d.coefficients.size(); ++n)
                             d.coefficients[n] = coeff_slow(g, n, c);
                         return d;
                     }});
    paths.push_back({"serial-quaternary", 1, [](const DenseMatrix& g, MultCount& c) {
                         return decompose_serial_quaternary(g, c);
                     }});

    std::vector<BenchRecord> records;
    for (unsigned num_qubits = options.n_min; num_qubits <= options.n_max; ++num_qubits) {
        std::vector<std::uint64_t> seeds(options.reps);
        for (unsigned rep = 0; rep < options.reps; ++rep)
            seeds[rep] = matrix_seed(options.seed, num_qubits, rep);

        std::vector<std::vector<double>> seconds(paths.size(),
                                                 std::vector<double>(options.reps, 0.0));
        std::vector<std::uint64_t> counts(paths.size(), 0);

        for (unsigned rep = 0; rep < options.reps; ++rep) {
            const DenseMatrix g = random_matrix(num_qubits, seeds[rep]);
            PauliDecomposition reference;
            for (std::size_t p = 0; p < paths.size(); ++p) {
                MultCount count;
                const auto start = std::chrono::steady_clock::now();
                PauliDecomposition d = paths[p].run(g, count);
                const auto stop = std::chrono::steady_clock::now();
                seconds[p][rep] = elapsed_seconds(start, stop);
                if (rep == 0)
                    counts[p] = count.mults;
                else if (counts[p] != count.mults)
                    throw std::runtime_error("multiplication count varied across repetitions");
                if (p == 0)
                    reference = std::move(d);
                else if (!(d == reference))
                    throw std::runtime_error("paths disagree on a benchmark matrix (N=" +
                                             std::to_string(num_qubits) + ", rep=" +
                                             std::to_string(rep) + ", path=" + paths[p].label +
                                             ")");
            }
        }

        for (std::size_t p = 0; p < paths.size(); ++p) {
            double mean = 0.0;
            for (unsigned rep = 0; rep < options.reps; ++rep) {
                records.push_back({num_qubits, paths[p].label, paths[p].threads,
                                   static_cast<int>(rep), seeds[rep], seconds[p][rep], counts[p],
                                   0.0});
                mean += seconds[p][rep];
            }
            mean /= options.reps;
            double variance = 0.0;
            for (unsigned rep = 0; rep < options.reps; ++rep)
                variance += (seconds[p][rep] - mean) * (seconds[p][rep] - mean);
            const double stddev = options.reps > 1 ? std::sqrt(variance / (options.reps - 1)) : 0.0;
            records.push_back({num_qubits, paths[p].label, paths[p].threads, -1, options.seed,
                               mean, counts[p], stddev});
        }
    }
    return records;
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "N,path,threads,rep,seed,seconds,mult_count,seconds_stddev\n";
    for (const BenchRecord& r : records) {
        out << r.num_qubits << ',' << r.path << ',' << r.threads << ',' << r.rep << ',' << r.seed
            << ',' << format_double(r.seconds) << ',' << r.mult_count << ',';
        if (r.rep == -1)
            out << format_double(r.seconds_stddev);
        out << '\n';
    }
}

std::vector<BenchRecord> run_bench_csv(const BenchOptions& options, std::ostream& out) {
    std::vector<BenchRecord> records = run_bench(options);
    write_bench_csv(records, out);
    return records;
}

}  // namespace paulidecomp
