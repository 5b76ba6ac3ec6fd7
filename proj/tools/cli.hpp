#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "tokadd/limbcore.hpp"

namespace tokadd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Substitutes the parallel adder used by `verify`. Tests use this to check
/// that a wrong adder is caught and reported.
struct Hooks {
    std::function<BigNumber(const BigNumber&, const BigNumber&, std::size_t workers)> parallel_add;
};

/// Runs the tool. `args` excludes the program name. Operands given as "-"
/// are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

}  // namespace tokadd::cli
