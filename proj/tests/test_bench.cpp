#include <algorithm>
#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "tokadd/bench.hpp"
#include "tokadd/limbcore.hpp"
#include "tokadd/oracle.hpp"
#include "tokadd/paradd.hpp"
#include "tokadd/seqadd.hpp"

using namespace tokadd;
using namespace tokadd::bench;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string f; std::getline(in, f, ',');) {
        out.push_back(f);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

}  // namespace

TEST_CASE("gen_random_operand") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        const std::string one = gen_random_operand(1, s);
        REQUIRE(one.size() == 1);
        CHECK(one[0] >= '1');
        CHECK(one[0] <= '9');
    }
    CHECK(gen_random_operand(20, 42) == gen_random_operand(20, 42));
    CHECK(gen_random_operand(20, 42) != gen_random_operand(20, 43));

    const std::string big = gen_random_operand(100000, 7);
    CHECK(big.size() == 100000);
    CHECK(big[0] != '0');
    CHECK(std::all_of(big.begin(), big.end(), [](char c) { return c >= '0' && c <= '9'; }));
    // Roughly uniform digits.
    for (char d = '0'; d <= '9'; ++d) {
        const auto count = std::count(big.begin(), big.end(), d);
        CHECK(count > 9000);
        CHECK(count < 11000);
    }
    CHECK_THROWS_AS(gen_random_operand(0, 1), std::invalid_argument);
}

TEST_CASE("gen_worst_case") {
    CHECK(gen_worst_case(4) == std::pair<std::string, std::string>{"9999", "1"});

    const auto [a18, b18] = gen_worst_case(18);
    const auto seq = add_sequential(parse_decimal(a18), parse_decimal(b18));
    CHECK(parse_decimal(a18).limb_count() == 1);
    CHECK(seq.sum.limb_count() == 2);

    const auto [a36, b36] = gen_worst_case(36);
    const auto par = add_parallel(parse_decimal(a36), parse_decimal(b36), 2);
    CHECK(par.trace.overflowed);
    CHECK(par.trace.iterations() - 1 == 2);  // before the overflow finalization
    CHECK_THROWS_AS(gen_worst_case(0), std::invalid_argument);
}

TEST_CASE("BenchConfig validation") {
    BenchConfig ok;
    CHECK(ok.sizes == std::vector<std::size_t>{20000, 100000, 500000, 1000000});
    CHECK(ok.repetitions == 5);
    CHECK_NOTHROW(ok.validate());

    BenchConfig no_algos;
    no_algos.algorithms.clear();
    CHECK_THROWS_AS(no_algos.validate(), std::invalid_argument);

    BenchConfig no_sizes;
    no_sizes.sizes.clear();
    CHECK_THROWS_AS(no_sizes.validate(), std::invalid_argument);

    BenchConfig zero_reps;
    zero_reps.repetitions = 0;
    CHECK_THROWS_AS(zero_reps.validate(), std::invalid_argument);

    BenchConfig zero_workers;
    zero_workers.worker_counts = {2, 0};
    CHECK_THROWS_AS(zero_workers.validate(), std::invalid_argument);
}

TEST_CASE("parse_algorithm") {
    CHECK(parse_algorithm("seq") == Algorithm::Sequential);
    CHECK(parse_algorithm("sequential") == Algorithm::Sequential);
    CHECK(parse_algorithm("par") == Algorithm::Parallel);
    CHECK(parse_algorithm("oracle") == Algorithm::Oracle);
    CHECK_FALSE(parse_algorithm("fast").has_value());
}

TEST_CASE("run_benchmark: one row per cell on paired operands") {
    BenchConfig config;
    config.sizes = {20000, 100000};
    config.algorithms = {Algorithm::Sequential, Algorithm::Oracle, Algorithm::Parallel};
    config.worker_counts = {2, 3};
    config.repetitions = 1;
    config.seed = 99;
    const BenchReport report = run_benchmark(config);
    REQUIRE(report.rows.size() == 8);

    for (const std::size_t digits : config.sizes) {
        const std::string a = gen_random_operand(digits, operand_seed(config.seed, digits, 0));
        const std::string b = gen_random_operand(digits, operand_seed(config.seed, digits, 1));
        const auto seq = add_sequential(parse_decimal(a), parse_decimal(b));
        const auto digitwise = oracle::add_digitwise_counted(a, b);
        for (const auto& row : report.rows) {
            if (row.digits != digits) {
                continue;
            }
            CHECK(row.ok());
            CHECK(row.repetitions == 1);
            REQUIRE(row.mean_seconds.has_value());
            CHECK(*row.mean_seconds > 0.0);
            switch (row.algorithm) {
                case Algorithm::Sequential:
                    CHECK(row.basic_ops == token_count(digits));
                    CHECK(row.carries == seq.metrics.carries_generated);
                    CHECK(row.workers == 1);
                    break;
                case Algorithm::Parallel:
                    CHECK(row.carries == seq.metrics.carries_generated);
                    CHECK(row.iterations >= 1);
                    CHECK(row.basic_ops >= token_count(digits));
                    break;
                case Algorithm::Oracle:
                    CHECK(row.basic_ops == digits);
                    CHECK(row.carries == digitwise.carries);
                    break;
            }
        }
    }
}

TEST_CASE("run_benchmark: token counts for short operands") {
    BenchConfig config;
    config.sizes = {1, 10, 32, 101};
    config.algorithms = {Algorithm::Sequential};
    config.repetitions = 2;
    const BenchReport report = run_benchmark(config);
    REQUIRE(report.rows.size() == 4);
    const std::vector<std::size_t> expected{1, 1, 2, 6};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(report.rows[i].basic_ops == expected[i]);
        CHECK(report.rows[i].iterations == expected[i]);
    }
}

TEST_CASE("run_benchmark: parallel with one worker per token") {
    BenchConfig config;
    config.sizes = {55 * 18};
    config.algorithms = {Algorithm::Parallel};
    config.worker_counts = {55};
    config.repetitions = 1;
    const BenchReport report = run_benchmark(config);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].workers == 55);

    const std::string a = gen_random_operand(55 * 18, operand_seed(config.seed, 55 * 18, 0));
    const std::string b = gen_random_operand(55 * 18, operand_seed(config.seed, 55 * 18, 1));
    const auto par = add_parallel(parse_decimal(a), parse_decimal(b), 55);
    for (const std::size_t ops : par.trace.per_iteration[0].ops_per_worker) {
        CHECK(ops == 1);
    }
    CHECK(report.rows[0].iterations == par.trace.iterations());
}

TEST_CASE("report_to_csv") {
    BenchRow row;
    row.algorithm = Algorithm::Parallel;
    row.digits = 100000;
    row.workers = 4;
    row.repetitions = 5;
    row.mean_seconds = 0.5;
    row.basic_ops = 5557;
    row.iterations = 3;
    row.carries = 2800;
    const std::string csv = report_to_csv({{row}});
    const auto lines = lines_of(csv);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "algorithm,digits,workers,repetitions,mean_seconds,basic_ops,iterations,carries");
    CHECK(csv.back() == '\n');

    const auto fields = fields_of(lines[1]);
    REQUIRE(fields.size() == 8);
    CHECK(fields[0] == "parallel");
    CHECK(fields[1] == "100000");
    CHECK(fields[2] == "4");
    CHECK(fields[3] == "5");
    CHECK(fields[5] == "5557");
    CHECK(fields[6] == "3");
    CHECK(fields[7] == "2800");

    // At least six significant digits, '.' as decimal point.
    const std::string& secs = fields[4];
    CHECK(secs.find('.') != std::string::npos);
    const std::string mantissa = secs.substr(0, secs.find_first_of("eE"));
    const auto sig = std::count_if(mantissa.begin(), mantissa.end(), [](char c) { return c >= '0' && c <= '9'; });
    CHECK(sig >= 6);
    double parsed = 0;
    std::from_chars(secs.data(), secs.data() + secs.size(), parsed);
    CHECK(parsed == doctest::Approx(0.5));
}

TEST_CASE("report_to_csv: failed cell keeps its identity columns") {
    BenchRow row;
    row.algorithm = Algorithm::Oracle;
    row.digits = 7;
    row.repetitions = 5;
    row.error = "out of memory";
    const auto lines = lines_of(report_to_csv({{row}}));
    REQUIRE(lines.size() == 2);
    CHECK(lines[1] == "oracle,7,1,5,,,,");
}
