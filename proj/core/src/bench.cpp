#include "tokadd/bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <new>
#include <random>
#include <stdexcept>
#include <system_error>

#include "tokadd/limbcore.hpp"
#include "tokadd/oracle.hpp"
#include "tokadd/paradd.hpp"
#include "tokadd/seqadd.hpp"

namespace tokadd::bench {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform in [0, bound) from the top 32 bits; bound is tiny so the bias is negligible.
unsigned draw_below(std::mt19937_64& rng, unsigned bound) noexcept {
    return static_cast<unsigned>(((rng() >> 32) * bound) >> 32);
}

struct CellResult {
    double mean_seconds = 0.0;
    std::size_t basic_ops = 0;
    std::size_t iterations = 0;
    std::size_t carries = 0;
};

// Runs `once` one untimed time plus `reps` timed times; `once` fills the metrics.
template <typename Fn>
CellResult measure(std::size_t reps, Fn&& once) {
    CellResult result;
    std::size_t sink = once(result);
    const auto start = Clock::now();
    for (std::size_t r = 0; r < reps; ++r) {
        sink += once(result);
    }
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    result.mean_seconds = elapsed.count() / static_cast<double>(reps);
    if (sink == 0) {
        throw std::logic_error("benchmark produced empty output");
    }
    return result;
}

}  // namespace

std::string_view algorithm_name(Algorithm algo) noexcept {
    switch (algo) {
        case Algorithm::Sequential:
            return "sequential";
        case Algorithm::Parallel:
            return "parallel";
        case Algorithm::Oracle:
            return "oracle";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
    if (name == "seq" || name == "sequential") {
        return Algorithm::Sequential;
    }
    if (name == "par" || name == "parallel") {
        return Algorithm::Parallel;
    }
    if (name == "oracle") {
        return Algorithm::Oracle;
    }
    return std::nullopt;
}

void BenchConfig::validate() const {
    if (sizes.empty() || algorithms.empty()) {
        throw std::invalid_argument("bench config needs at least one size and one algorithm");
    }
    if (repetitions == 0) {
        throw std::invalid_argument("repetitions must be >= 1");
    }
    if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) {
        throw std::invalid_argument("operand sizes must be >= 1");
    }
    const bool wants_parallel =
        std::find(algorithms.begin(), algorithms.end(), Algorithm::Parallel) != algorithms.end();
    if (wants_parallel &&
        (worker_counts.empty() || std::find(worker_counts.begin(), worker_counts.end(), 0) != worker_counts.end())) {
        throw std::invalid_argument("parallel runs need worker counts >= 1");
    }
}

std::string gen_random_operand(std::size_t digits, std::uint64_t seed) {
    if (digits == 0) {
        throw std::invalid_argument("operand length must be >= 1");
    }
    std::mt19937_64 rng(splitmix64(seed));
    std::string out(digits, '0');
    out[0] = static_cast<char>('1' + draw_below(rng, 9));
    for (std::size_t i = 1; i < digits; ++i) {
        out[i] = static_cast<char>('0' + draw_below(rng, 10));
    }
    return out;
}

std::pair<std::string, std::string> gen_worst_case(std::size_t digits) {
    if (digits == 0) {
        throw std::invalid_argument("operand length must be >= 1");
    }
    return {std::string(digits, '9'), "1"};
}

std::uint64_t operand_seed(std::uint64_t run_seed, std::size_t digits, unsigned index) noexcept {
    return splitmix64(splitmix64(run_seed) ^ (static_cast<std::uint64_t>(digits) * 2 + index));
}

BenchReport run_benchmark(const BenchConfig& config) {
    config.validate();
    BenchReport report;

    for (const std::size_t digits : config.sizes) {
        std::string a_text;
        std::string b_text;
        BigNumber a;
        BigNumber b;
        std::string setup_error;
        try {
            a_text = gen_random_operand(digits, operand_seed(config.seed, digits, 0));
            b_text = gen_random_operand(digits, operand_seed(config.seed, digits, 1));
            a = parse_decimal(a_text);
            b = parse_decimal(b_text);
        } catch (const std::bad_alloc&) {
            setup_error = "out of memory";
        }

        for (const Algorithm algo : config.algorithms) {
            std::vector<std::size_t> widths{1};
            if (algo == Algorithm::Parallel) {
                widths = config.worker_counts;
            }
            for (const std::size_t workers : widths) {
                BenchRow row;
                row.algorithm = algo;
                row.digits = digits;
                row.workers = workers;
                row.repetitions = config.repetitions;
                row.error = setup_error;
                if (!row.ok()) {
                    report.rows.push_back(std::move(row));
                    continue;
                }

                try {
                    CellResult cell;
                    switch (algo) {
                        case Algorithm::Sequential:
                            cell = measure(config.repetitions, [&](CellResult& out) {
                                const auto [sum, metrics] = add_sequential(a, b);
                                out.basic_ops = metrics.basic_ops;
                                out.iterations = metrics.basic_ops;
                                out.carries = metrics.carries_generated;
                                return render_decimal(sum).size();
                            });
                            break;
                        case Algorithm::Parallel: {
                            ParallelAdder adder(workers);
                            cell = measure(config.repetitions, [&](CellResult& out) {
                                const auto [sum, trace] = adder.add(a, b);
                                out.basic_ops = trace.total_basic_ops();
                                out.iterations = trace.iterations();
                                out.carries = trace.total_carries();
                                return adder.render(sum).size();
                            });
                            break;
                        }
                        case Algorithm::Oracle:
                            cell = measure(config.repetitions, [&](CellResult& out) {
                                auto sum = oracle::add_digitwise_counted(a_text, b_text);
                                out.basic_ops = sum.digit_ops;
                                out.iterations = sum.digit_ops;
                                out.carries = sum.carries;
                                return sum.sum.size();
                            });
                            break;
                    }
                    row.mean_seconds = cell.mean_seconds;
                    row.basic_ops = cell.basic_ops;
                    row.iterations = cell.iterations;
                    row.carries = cell.carries;
                } catch (const std::bad_alloc&) {
                    row.error = "out of memory";
                } catch (const WorkerPoolFailure& e) {
                    row.error = e.what();
                } catch (const std::system_error& e) {
                    row.error = e.what();
                }
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

std::string csv_row(const BenchRow& row) {
    std::string line(algorithm_name(row.algorithm));
    line += ',';
    line += std::to_string(row.digits);
    line += ',';
    line += std::to_string(row.workers);
    line += ',';
    line += std::to_string(row.repetitions);
    line += ',';
    if (row.ok() && row.mean_seconds) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof buf, *row.mean_seconds, std::chars_format::scientific, 9);
        line.append(buf, res.ptr);
        line += ',';
        line += std::to_string(row.basic_ops);
        line += ',';
        line += std::to_string(row.iterations);
        line += ',';
        line += std::to_string(row.carries);
    } else {
        // Failed cell: metrics left empty.
        line += ",,,";
    }
    return line;
}

std::string report_to_csv(const BenchReport& report) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const auto& row : report.rows) {
        out += csv_row(row);
        out += '\n';
    }
    return out;
}

}  // namespace tokadd::bench
