#pragma once

#include <cstddef>

#include "tokadd/limbcore.hpp"

namespace tokadd {

/// Counters for one sequential addition.
struct OpMetrics {
    /// Token-level additions executed: one per limb of the longer operand.
    std::size_t basic_ops = 0;
    /// Positions whose sum reached 10^18 and was truncated.
    std::size_t carries_generated = 0;
    std::size_t result_limbs = 0;

    friend bool operator==(const OpMetrics&, const OpMetrics&) = default;
};

struct SequentialSum {
    BigNumber sum;
    OpMetrics metrics;
};

/// Carry-ripple addition over limbs, least significant first. The shorter
/// operand is zero-extended; a final carry appends a limb of value 1.
SequentialSum add_sequential(const BigNumber& a, const BigNumber& b);

}  // namespace tokadd
