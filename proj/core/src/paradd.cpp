#include "tokadd/paradd.hpp"

#include <algorithm>
#include <atomic>
#include <barrier>
#include <cstring>
#include <mutex>
#include <numeric>
#include <thread>

namespace tokadd {

namespace {

struct alignas(64) WorkerCounters {
    std::size_t ops = 0;
    std::size_t carries = 0;
};

}  // namespace

std::size_t WorkerAssignment::owner_of(std::size_t pos) const noexcept {
    for (std::size_t w = 0; w < blocks.size(); ++w) {
        if (blocks[w].contains(pos)) {
            return w;
        }
    }
    return blocks.size();
}

WorkerAssignment plan_assignment(std::size_t limb_count, std::size_t workers) {
    if (limb_count == 0 || workers == 0) {
        throw std::invalid_argument("plan_assignment needs limb_count >= 1 and workers >= 1");
    }
    WorkerAssignment plan;
    plan.blocks.reserve(workers);
    const std::size_t base = limb_count / workers;
    const std::size_t extra = limb_count % workers;
    std::size_t begin = 0;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t len = base + (w < extra ? 1 : 0);
        plan.blocks.push_back({begin, begin + len});
        begin += len;
    }
    return plan;
}

bool carries_pending(const CarryState& state) noexcept {
    return std::any_of(state.carries.begin(), state.carries.end(), [](std::uint8_t c) { return c == 1; });
}

std::size_t IterationRecord::total_ops() const noexcept {
    return std::accumulate(ops_per_worker.begin(), ops_per_worker.end(), std::size_t{0});
}

std::size_t IterationRecord::carries_set() const noexcept {
    return std::accumulate(carries_per_worker.begin(), carries_per_worker.end(), std::size_t{0});
}

std::size_t ParallelTrace::propagation_iterations() const noexcept {
    const std::size_t fixed = 1 + (overflowed ? 1 : 0);
    return per_iteration.size() > fixed ? per_iteration.size() - fixed : 0;
}

std::size_t ParallelTrace::total_basic_ops() const noexcept {
    std::size_t total = 0;
    for (const auto& rec : per_iteration) {
        total += rec.total_ops();
    }
    return total;
}

std::size_t ParallelTrace::total_carries() const noexcept {
    std::size_t total = 0;
    for (const auto& rec : per_iteration) {
        total += rec.carries_set();
    }
    return total;
}

std::size_t default_worker_count() noexcept {
    return std::max(1u, std::thread::hardware_concurrency());
}

ParallelAdder::ParallelAdder(std::size_t workers, ParallelOptions options)
    : pool_(workers), options_(std::move(options)) {}

ParallelSum ParallelAdder::add(const BigNumber& a, const BigNumber& b) {
    const auto x = a.limbs();
    const auto y = b.limbs();
    const std::size_t n = std::max(x.size(), y.size());
    const std::size_t m = pool_.size();
    const WorkerAssignment plan = plan_assignment(n, m);
    // The overflow position n belongs to whoever owns the top limb.
    const std::size_t top_owner = std::min(n, m) - 1;

    // result[n] receives the overflow limb, if any.
    std::vector<Limb> result(n + 1, 0);

    // Carries are double-buffered: `state.carries` holds the flags consumed in
    // the current iteration, `emitted` collects the flags produced by it. The
    // barrier completion swaps them, so no slot is read and set in the same
    // iteration.
    CarryState state;
    state.carries.assign(n + 1, 0);
    std::vector<std::uint8_t> emitted(n + 1, 0);

    std::vector<WorkerCounters> counters(m);
    std::vector<std::vector<SlotAccess>> accesses(options_.record_slot_access ? m : 0);

    ParallelTrace trace;
    trace.worker_count = m;
    trace.limb_count = n;

    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error_message;
    bool done = false;

    auto fail = [&](std::size_t worker, std::string what) noexcept {
        failed.store(true, std::memory_order_relaxed);
        try {
            std::lock_guard lock(error_mutex);
            if (error_message.empty()) {
                error_message = "worker " + std::to_string(worker) + ": " + what;
            }
        } catch (...) {
        }
    };

    auto on_iteration_end = [&]() noexcept {
        if (failed.load(std::memory_order_relaxed)) {
            done = true;
            return;
        }
        bool produced = false;
        try {
            IterationRecord rec;
            rec.iteration = state.iteration;
            rec.ops_per_worker.reserve(m);
            rec.carries_per_worker.reserve(m);
            for (auto& c : counters) {
                rec.ops_per_worker.push_back(c.ops);
                rec.carries_per_worker.push_back(c.carries);
                produced = produced || c.carries != 0;
                c = WorkerCounters{};
            }
            trace.per_iteration.push_back(std::move(rec));
        } catch (const std::exception& e) {
            fail(m, e.what());
            done = true;
            return;
        }
        state.carries.swap(emitted);
        ++state.iteration;
        done = options_.full_scan_termination ? !carries_pending(state) : !produced;
    };

    std::barrier sync(static_cast<std::ptrdiff_t>(m), on_iteration_end);

    auto first_iteration = [&](std::size_t w, const LimbRange& block) {
        auto& cnt = counters[w];
        for (std::size_t i = block.begin; i < block.end; ++i) {
            Limb sum = (i < x.size() ? x[i] : 0) + (i < y.size() ? y[i] : 0);
            ++cnt.ops;
            std::uint8_t carry = 0;
            if (sum >= kLimbBase) {
                sum -= kLimbBase;
                carry = 1;
                ++cnt.carries;
            }
            result[i] = sum;
            emitted[i + 1] = carry;
            if (options_.record_slot_access) {
                accesses[w].push_back({1, w, i + 1, SlotAccessKind::Write});
            }
        }
    };

    auto carry_iteration = [&](std::size_t w, const LimbRange& block, bool owns_top) {
        auto& cnt = counters[w];
        auto& pending = state.carries;
        const std::size_t t = state.iteration;
        const std::size_t last = owns_top ? n + 1 : block.end;
        for (std::size_t i = block.begin; i < last; ++i) {
            if (pending[i] == 0) {
                continue;
            }
            pending[i] = 0;
            ++cnt.ops;
            if (options_.record_slot_access) {
                accesses[w].push_back({t, w, i, SlotAccessKind::Read});
            }
            if (i == n) {
                result[n] = 1;
                continue;
            }
            if (++result[i] == kLimbBase) {
                result[i] = 0;
                emitted[i + 1] = 1;
                ++cnt.carries;
                if (options_.record_slot_access) {
                    accesses[w].push_back({t, w, i + 1, SlotAccessKind::Write});
                }
            }
        }
    };

    auto worker = [&](std::size_t w) {
        const LimbRange block = plan.blocks[w];
        const bool owns_top = w == top_owner;
        for (;;) {
            if (!failed.load(std::memory_order_relaxed)) {
                try {
                    if (options_.worker_hook) {
                        options_.worker_hook(w, state.iteration);
                    }
                    if (state.iteration == 1) {
                        first_iteration(w, block);
                    } else {
                        carry_iteration(w, block, owns_top);
                    }
                } catch (const std::exception& e) {
                    fail(w, e.what());
                } catch (...) {
                    fail(w, "unknown exception");
                }
            }
            sync.arrive_and_wait();
            if (done) {
                return;
            }
        }
    };

    pool_.run(worker);

    if (failed.load()) {
        throw WorkerPoolFailure("parallel addition failed: " + error_message);
    }

    trace.overflowed = result[n] == 1;
    if (!trace.overflowed) {
        result.pop_back();
    }
    if (options_.record_slot_access) {
        for (auto& per_worker : accesses) {
            trace.slot_accesses.insert(trace.slot_accesses.end(), per_worker.begin(), per_worker.end());
        }
    }
    return {BigNumber::from_trusted_limbs(std::move(result)), std::move(trace)};
}

std::string ParallelAdder::render(const BigNumber& num) {
    const auto limbs = num.limbs();
    const std::size_t n = limbs.size();
    const std::size_t lead = limb_digit_count(limbs.back());
    std::string out(num.digit_len(), '0');

    char buf[kLimbDigits];
    render_limb_padded(limbs.back(), buf);
    std::memcpy(out.data(), buf + (kLimbDigits - lead), lead);
    if (n == 1) {
        return out;
    }

    // Limb i (below the top) starts at lead + (n - 2 - i) * 18.
    const WorkerAssignment plan = plan_assignment(n - 1, pool_.size());
    char* base = out.data() + lead;
    pool_.run([&](std::size_t w) {
        const LimbRange block = plan.blocks[w];
        for (std::size_t i = block.begin; i < block.end; ++i) {
            render_limb_padded(limbs[i], base + (n - 2 - i) * kLimbDigits);
        }
    });
    return out;
}

ParallelSum add_parallel(const BigNumber& a, const BigNumber& b, std::size_t workers,
                         const ParallelOptions& options) {
    ParallelAdder adder(workers, options);
    return adder.add(a, b);
}

}  // namespace tokadd
