#include "tokadd/seqadd.hpp"

#include <algorithm>
#include <vector>

namespace tokadd {

SequentialSum add_sequential(const BigNumber& a, const BigNumber& b) {
    // Walk the longer operand; the shorter one reads as zero past its end.
    const bool a_longer = a.limb_count() >= b.limb_count();
    const auto longer = a_longer ? a.limbs() : b.limbs();
    const auto shorter = a_longer ? b.limbs() : a.limbs();
    const std::size_t n = longer.size();

    std::vector<Limb> out(n + 1);
    OpMetrics metrics;
    metrics.basic_ops = n;

    Limb carry = 0;
    std::size_t i = 0;
    for (; i < shorter.size(); ++i) {
        Limb sum = longer[i] + shorter[i] + carry;
        carry = sum >= kLimbBase ? 1 : 0;
        sum -= carry * kLimbBase;
        metrics.carries_generated += carry;
        out[i] = sum;
    }
    for (; i < n; ++i) {
        Limb sum = longer[i] + carry;
        carry = sum >= kLimbBase ? 1 : 0;
        sum -= carry * kLimbBase;
        metrics.carries_generated += carry;
        out[i] = sum;
    }
    out[n] = carry;
    if (carry == 0) {
        out.pop_back();
    }
    metrics.result_limbs = out.size();
    return {BigNumber::from_trusted_limbs(std::move(out)), metrics};
}

}  // namespace tokadd
