#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tokadd/limbcore.hpp"
#include "tokadd/worker_pool.hpp"

namespace tokadd {

/// Half-open range of limb positions [begin, end).
struct LimbRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    bool empty() const noexcept { return begin == end; }
    bool contains(std::size_t pos) const noexcept { return pos >= begin && pos < end; }

    friend bool operator==(const LimbRange&, const LimbRange&) = default;
};

/// Contiguous, balanced partition of limb positions among workers.
struct WorkerAssignment {
    std::vector<LimbRange> blocks;

    std::size_t worker_count() const noexcept { return blocks.size(); }
    /// Worker owning `pos`; worker_count() if no block contains it.
    std::size_t owner_of(std::size_t pos) const noexcept;
};

/// The first limb_count % workers blocks hold one extra position. Workers past
/// limb_count receive empty blocks. Throws std::invalid_argument on zero input.
WorkerAssignment plan_assignment(std::size_t limb_count, std::size_t workers);

/// Shared carry flags between iterations. carries[i] is the carry pending into
/// limb position i; carries[n] is the overflow slot above the top limb.
struct CarryState {
    std::vector<std::uint8_t> carries;
    std::size_t iteration = 1;
};

/// True iff any slot of `state.carries` is set. This is the O(n) scan; the
/// adder uses it only when ParallelOptions::full_scan_termination is on.
bool carries_pending(const CarryState& state) noexcept;

struct IterationRecord {
    std::size_t iteration = 0;
    /// Basic operations (limb additions or overflow finalizations) per worker.
    std::vector<std::size_t> ops_per_worker;
    /// Carry slots set per worker.
    std::vector<std::size_t> carries_per_worker;

    std::size_t total_ops() const noexcept;
    std::size_t carries_set() const noexcept;
};

enum class SlotAccessKind { Read, Write };

struct SlotAccess {
    std::size_t iteration;
    std::size_t worker;
    std::size_t slot;
    SlotAccessKind kind;
};

struct ParallelTrace {
    std::size_t worker_count = 0;
    /// Limb count of the longer operand.
    std::size_t limb_count = 0;
    std::vector<IterationRecord> per_iteration;
    /// Set when the overflow slot fired and a top limb of 1 was appended.
    bool overflowed = false;
    /// Populated only with ParallelOptions::record_slot_access.
    std::vector<SlotAccess> slot_accesses;

    /// Raw count: the initial add, every carry round, and the overflow step.
    std::size_t iterations() const noexcept { return per_iteration.size(); }
    /// Rounds that moved a carry between operand positions, i.e. iterations()
    /// without the initial add and without the overflow finalization.
    std::size_t propagation_iterations() const noexcept;
    std::size_t total_basic_ops() const noexcept;
    std::size_t total_carries() const noexcept;
};

struct ParallelOptions {
    /// Decide termination with the O(n) carries_pending() scan instead of the
    /// per-worker aggregate collected at the barrier.
    bool full_scan_termination = false;
    /// Record every carry-slot read and write in the trace.
    bool record_slot_access = false;
    /// Called by each worker at the start of each iteration. An exception
    /// thrown here fails that worker.
    std::function<void(std::size_t worker, std::size_t iteration)> worker_hook;
};

/// A worker terminated abnormally; the addition produced no result.
class WorkerPoolFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParallelSum {
    BigNumber sum;
    ParallelTrace trace;
};

/// Hardware parallelism, at least 1.
std::size_t default_worker_count() noexcept;

/// Barrier-synchronized iterative adder over a persistent pool of workers.
///
/// Iteration 1 adds operand limbs and flags carries; every later iteration
/// applies the pending carries, one position step per iteration, until no
/// carry slot is set. Results are identical to add_sequential for any
/// worker count.
class ParallelAdder {
public:
    explicit ParallelAdder(std::size_t workers = default_worker_count(), ParallelOptions options = {});

    std::size_t workers() const noexcept { return pool_.size(); }

    /// Throws WorkerPoolFailure if any worker fails.
    ParallelSum add(const BigNumber& a, const BigNumber& b);

    /// render_decimal, with each worker rendering its own block of limbs.
    std::string render(const BigNumber& num);

private:
    WorkerPool pool_;
    ParallelOptions options_;
};

/// One-shot convenience wrapper around ParallelAdder.
ParallelSum add_parallel(const BigNumber& a, const BigNumber& b, std::size_t workers,
                         const ParallelOptions& options = {});

}  // namespace tokadd
