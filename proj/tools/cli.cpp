#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <memory>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "tokadd/bench.hpp"
#include "tokadd/limbcore.hpp"
#include "tokadd/oracle.hpp"
#include "tokadd/paradd.hpp"
#include "tokadd/seqadd.hpp"

namespace tokadd::cli {

namespace {

// Operands longer than this are written to files in mismatch reports.
constexpr std::size_t kInlineOperandLimit = 200;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        return read_all(in);
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open '" + path + "'");
    }
    return read_all(file);
}

// Resolves --a/--b into two operand strings with the line ending stripped.
// When both are "-", standard input holds `a` on the first line and `b` on the second.
std::pair<std::string, std::string> read_operands(const std::string& a_path, const std::string& b_path,
                                                  std::istream& in) {
    if (a_path == "-" && b_path == "-") {
        std::string a;
        std::string b;
        std::getline(in, a);
        std::getline(in, b);
        return {std::string(strip_line_ending(a + "\n")), std::string(strip_line_ending(b + "\n"))};
    }
    std::string a = read_source(a_path, in);
    std::string b = read_source(b_path, in);
    return {std::string(strip_line_ending(a)), std::string(strip_line_ending(b))};
}

BigNumber parse_operand(std::string_view name, std::string_view text) {
    try {
        return parse_decimal(text);
    } catch (const ParseError& e) {
        throw UsageError("operand " + std::string(name) + ": " + e.what());
    }
}

void validate_for_oracle(std::string_view name, std::string_view text) {
    parse_operand(name, text);
}

class Output {
public:
    Output(const std::string& path, std::ostream& fallback) {
        if (path != "-") {
            file_.open(path, std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw UsageError("cannot open '" + path + "' for writing");
            }
        }
        stream_ = path == "-" ? &fallback : &file_;
    }

    std::ostream& stream() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_ = nullptr;
};

void append_metrics(const std::string& path, const bench::BenchRow& row) {
    const bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream file(path, std::ios::binary | std::ios::app);
    if (!file) {
        throw UsageError("cannot open metrics file '" + path + "'");
    }
    if (fresh) {
        file << bench::kCsvHeader << '\n';
    }
    file << bench::csv_row(row) << '\n';
}

struct AddOptions {
    std::string a = "-";
    std::string b = "-";
    std::string algo = "seq";
    std::optional<std::size_t> workers;
    std::string out = "-";
    std::string metrics;
    bool full_scan = false;
};

int cmd_add(const AddOptions& opt, std::istream& in, std::ostream& out) {
    const auto algo = bench::parse_algorithm(opt.algo);
    if (!algo) {
        throw UsageError("unknown --algo '" + opt.algo + "' (expected seq, par or oracle)");
    }
    if (opt.workers && *algo != bench::Algorithm::Parallel) {
        throw UsageError("--workers is only valid with --algo par");
    }
    if (opt.full_scan && *algo != bench::Algorithm::Parallel) {
        throw UsageError("--full-scan is only valid with --algo par");
    }
    if (opt.workers && *opt.workers == 0) {
        throw UsageError("--workers must be >= 1");
    }

    const auto [a_text, b_text] = read_operands(opt.a, opt.b, in);

    bench::BenchRow row;
    row.algorithm = *algo;
    row.repetitions = 1;
    row.digits = std::max(canonical_digits(a_text).size(), canonical_digits(b_text).size());

    std::string sum;
    const auto start = std::chrono::steady_clock::now();
    switch (*algo) {
        case bench::Algorithm::Sequential: {
            const BigNumber a = parse_operand("a", a_text);
            const BigNumber b = parse_operand("b", b_text);
            const auto result = add_sequential(a, b);
            sum = render_decimal(result.sum);
            row.basic_ops = result.metrics.basic_ops;
            row.iterations = result.metrics.basic_ops;
            row.carries = result.metrics.carries_generated;
            break;
        }
        case bench::Algorithm::Parallel: {
            const BigNumber a = parse_operand("a", a_text);
            const BigNumber b = parse_operand("b", b_text);
            ParallelOptions options;
            options.full_scan_termination = opt.full_scan;
            ParallelAdder adder(opt.workers.value_or(default_worker_count()), options);
            const auto result = adder.add(a, b);
            sum = adder.render(result.sum);
            row.workers = adder.workers();
            row.basic_ops = result.trace.total_basic_ops();
            row.iterations = result.trace.iterations();
            row.carries = result.trace.total_carries();
            break;
        }
        case bench::Algorithm::Oracle: {
            validate_for_oracle("a", a_text);
            validate_for_oracle("b", b_text);
            auto result = oracle::add_digitwise_counted(a_text, b_text);
            sum = std::move(result.sum);
            row.basic_ops = result.digit_ops;
            row.iterations = result.digit_ops;
            row.carries = result.carries;
            break;
        }
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    row.mean_seconds = elapsed.count();

    Output sink(opt.out, out);
    sink.stream() << sum << '\n';
    sink.stream().flush();
    if (!opt.metrics.empty()) {
        append_metrics(opt.metrics, row);
    }
    return kExitOk;
}

struct VerifyOptions {
    std::size_t trials = 100;
    std::size_t max_digits = 1000;
    std::uint64_t seed = 1;
    std::vector<std::size_t> workers{1, 2, 4, 8};
};

std::string describe_operand(const std::string& text, const std::string& label, std::uint64_t seed,
                             std::size_t trial) {
    if (text.size() <= kInlineOperandLimit) {
        return text;
    }
    const auto path = std::filesystem::temp_directory_path() /
                      ("tokadd-verify-" + std::to_string(seed) + "-" + std::to_string(trial) + "-" + label + ".txt");
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    file << text << '\n';
    return "<" + std::to_string(text.size()) + " digits, written to " + path.string() + ">";
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err, const Hooks& hooks) {
    if (opt.trials == 0 || opt.max_digits == 0) {
        throw UsageError("--trials and --max-digits must be >= 1");
    }
    if (opt.workers.empty() || std::find(opt.workers.begin(), opt.workers.end(), 0) != opt.workers.end()) {
        throw UsageError("--workers-list entries must be >= 1");
    }

    std::vector<std::unique_ptr<ParallelAdder>> adders;
    if (!hooks.parallel_add) {
        for (const std::size_t w : opt.workers) {
            adders.push_back(std::make_unique<ParallelAdder>(w));
        }
    }

    std::mt19937_64 lengths(opt.seed);
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
        const std::size_t a_len = 1 + lengths() % opt.max_digits;
        const std::size_t b_len = 1 + lengths() % opt.max_digits;
        const std::string a_text = bench::gen_random_operand(a_len, bench::operand_seed(opt.seed, trial, 0));
        const std::string b_text = bench::gen_random_operand(b_len, bench::operand_seed(opt.seed, trial, 1));

        const BigNumber a = parse_decimal(a_text);
        const BigNumber b = parse_decimal(b_text);
        const std::string expected = oracle::add_digitwise(a_text, b_text);

        std::vector<std::pair<std::string, std::string>> results;
        results.emplace_back("sequential", render_decimal(add_sequential(a, b).sum));
        for (std::size_t k = 0; k < opt.workers.size(); ++k) {
            const std::size_t w = opt.workers[k];
            const BigNumber sum = hooks.parallel_add ? hooks.parallel_add(a, b, w) : adders[k]->add(a, b).sum;
            results.emplace_back("parallel(" + std::to_string(w) + ")", render_decimal(sum));
        }

        const bool agree = std::all_of(results.begin(), results.end(),
                                       [&](const auto& r) { return r.second == expected; });
        if (!agree) {
            err << "mismatch in trial " << trial << " (reproduce with --seed " << opt.seed << ")\n";
            err << "  a = " << describe_operand(a_text, "a", opt.seed, trial) << '\n';
            err << "  b = " << describe_operand(b_text, "b", opt.seed, trial) << '\n';
            err << "  oracle = " << describe_operand(expected, "oracle", opt.seed, trial) << '\n';
            for (const auto& [name, value] : results) {
                if (value != expected) {
                    err << "  " << name << " = " << describe_operand(value, name, opt.seed, trial) << '\n';
                }
            }
            return kExitMismatch;
        }
    }
    out << "ok: " << opt.trials << " trials agree (seed " << opt.seed << ")\n";
    return kExitOk;
}

struct GenOptions {
    std::size_t digits = 0;
    std::uint64_t seed = 1;
    bool worst_case = false;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
    if (opt.digits < 1) {
        throw UsageError("--digits must be >= 1");
    }
    if (opt.worst_case) {
        const auto [a, b] = bench::gen_worst_case(opt.digits);
        out << a << '\n' << b << '\n';
    } else {
        out << bench::gen_random_operand(opt.digits, opt.seed) << '\n';
    }
    return kExitOk;
}

struct BenchOptions {
    std::vector<std::size_t> sizes = bench::kDefaultSizes;
    std::vector<std::string> algos{"seq", "par", "oracle"};
    std::vector<std::size_t> workers{4};
    std::size_t reps = 5;
    std::uint64_t seed = 1;
    std::string out = "-";
};

int cmd_bench(const BenchOptions& opt, std::ostream& out) {
    bench::BenchConfig config;
    config.sizes = opt.sizes;
    config.algorithms.clear();
    for (const auto& name : opt.algos) {
        const auto algo = bench::parse_algorithm(name);
        if (!algo) {
            throw UsageError("unknown algorithm '" + name + "' in --algos");
        }
        config.algorithms.push_back(*algo);
    }
    config.worker_counts = opt.workers;
    config.repetitions = opt.reps;
    config.seed = opt.seed;
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const bench::BenchReport report = bench::run_benchmark(config);
    Output sink(opt.out, out);
    sink.stream() << bench::report_to_csv(report);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks) {
    CLI::App app{"Big-integer addition over base-10^18 limbs", "tokadd"};
    app.require_subcommand(1);

    AddOptions add_opt;
    auto* add = app.add_subcommand("add", "Add two decimal operands");
    add->add_option("--a", add_opt.a, "First operand file, or - for standard input")->required();
    add->add_option("--b", add_opt.b, "Second operand file, or - for standard input")->required();
    add->add_option("--algo", add_opt.algo, "seq, par or oracle")->capture_default_str();
    add->add_option("--workers", add_opt.workers, "Worker count for --algo par (default: hardware threads)");
    add->add_option("--out", add_opt.out, "Output file, or - for standard output")->capture_default_str();
    add->add_option("--metrics", add_opt.metrics, "Append a CSV metrics row to this file");
    add->add_flag("--full-scan", add_opt.full_scan, "Detect termination by scanning the whole carry array");

    VerifyOptions verify_opt;
    auto* verify = app.add_subcommand("verify", "Cross-check all adders on random operands");
    verify->add_option("--trials", verify_opt.trials)->capture_default_str();
    verify->add_option("--max-digits", verify_opt.max_digits)->capture_default_str();
    verify->add_option("--seed", verify_opt.seed)->capture_default_str();
    verify->add_option("--workers-list", verify_opt.workers, "Comma-separated worker counts")
        ->delimiter(',')
        ->capture_default_str();

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Print a random operand or the worst-case carry pair");
    gen->add_option("--digits", gen_opt.digits)->required();
    gen->add_option("--seed", gen_opt.seed)->capture_default_str();
    gen->add_flag("--worst-case", gen_opt.worst_case, "Print N nines and 1 on two lines");

    BenchOptions bench_opt;
    auto* bench_cmd = app.add_subcommand(
        "bench", "Time the adders and write a CSV report (parsing excluded, rendering included)");
    bench_cmd->add_option("--sizes", bench_opt.sizes, "Operand lengths in digits")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--algos", bench_opt.algos, "seq, par, oracle")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--workers", bench_opt.workers, "Worker counts for par")->delimiter(',')->capture_default_str();
    bench_cmd->add_option("--reps", bench_opt.reps, "Timed runs per cell")->capture_default_str();
    bench_cmd->add_option("--seed", bench_opt.seed)->capture_default_str();
    bench_cmd->add_option("--out", bench_opt.out, "CSV file, or - for standard output")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (add->parsed()) {
            return cmd_add(add_opt, in, out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_opt, out, err, hooks);
        }
        if (gen->parsed()) {
            return cmd_gen(gen_opt, out);
        }
        return cmd_bench(bench_opt, out);
    } catch (const UsageError& e) {
        err << "tokadd: " << e.what() << '\n';
        return kExitUsage;
    } catch (const WorkerPoolFailure& e) {
        err << "tokadd: " << e.what() << '\n';
        return kExitMismatch;
    }
}

}  // namespace tokadd::cli
