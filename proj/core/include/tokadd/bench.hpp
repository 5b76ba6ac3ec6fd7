#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tokadd::bench {

enum class Algorithm { Sequential, Parallel, Oracle };

/// CSV name: "sequential", "parallel" or "oracle".
std::string_view algorithm_name(Algorithm algo) noexcept;

/// Accepts the CSV names and the short forms "seq" and "par".
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

/// Operand lengths of the four reference test cases.
inline const std::vector<std::size_t> kDefaultSizes{20'000, 100'000, 500'000, 1'000'000};

struct BenchConfig {
    std::vector<std::size_t> sizes = kDefaultSizes;
    std::vector<Algorithm> algorithms{Algorithm::Sequential, Algorithm::Parallel, Algorithm::Oracle};
    /// Only used by Algorithm::Parallel; one row per entry.
    std::vector<std::size_t> worker_counts{4};
    std::size_t repetitions = 5;
    std::uint64_t seed = 1;

    /// Throws std::invalid_argument if any list is empty or holds a zero.
    void validate() const;
};

struct BenchRow {
    Algorithm algorithm = Algorithm::Sequential;
    std::size_t digits = 0;
    std::size_t workers = 1;
    std::size_t repetitions = 0;
    /// Empty when the cell failed.
    std::optional<double> mean_seconds;
    std::size_t basic_ops = 0;
    std::size_t iterations = 0;
    std::size_t carries = 0;
    /// Failure reason; empty on success.
    std::string error;

    bool ok() const noexcept { return error.empty(); }
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

/// `digits` random decimal digits, leading digit in [1, 9]. Same seed, same string.
std::string gen_random_operand(std::size_t digits, std::uint64_t seed);

/// (`digits` nines, "1"): every limb carries.
std::pair<std::string, std::string> gen_worst_case(std::size_t digits);

/// Seed of operand `index` (0 or 1) for a given size, derived from the run seed.
std::uint64_t operand_seed(std::uint64_t run_seed, std::size_t digits, unsigned index) noexcept;

/// Runs every (size, algorithm, workers) cell: one untimed warm-up, then
/// `repetitions` timed runs on the same operand pair. Operands for a size are
/// shared by all algorithms. Timed region: limb addition plus rendering for
/// the limb adders, the digit loop for the oracle. Parsing is not timed.
/// A cell that runs out of memory or whose workers fail yields a failed row.
BenchReport run_benchmark(const BenchConfig& config);

inline constexpr std::string_view kCsvHeader =
    "algorithm,digits,workers,repetitions,mean_seconds,basic_ops,iterations,carries";

std::string csv_row(const BenchRow& row);

/// Header line plus one line per row, each terminated by '\n'.
std::string report_to_csv(const BenchReport& report);

}  // namespace tokadd::bench
