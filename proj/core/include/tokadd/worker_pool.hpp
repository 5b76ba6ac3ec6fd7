#pragma once

#include <condition_variable>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace tokadd {

/// Fixed set of workers that run the same job, indexed by worker id.
///
/// Worker 0 is the calling thread; workers 1..size()-1 are owned threads that
/// live as long as the pool and are reused by every run().
class WorkerPool {
public:
    explicit WorkerPool(std::size_t workers);
    ~WorkerPool();

    WorkerPool(const WorkerPool&) = delete;
    WorkerPool& operator=(const WorkerPool&) = delete;

    std::size_t size() const noexcept { return threads_.size() + 1; }

    /// Runs job(id) for every id in [0, size()) and waits for all of them.
    /// If any invocation throws, the first exception (lowest id) is rethrown
    /// once every worker has returned.
    void run(const std::function<void(std::size_t)>& job);

private:
    void thread_main(std::size_t id);

    std::vector<std::thread> threads_;
    std::mutex mutex_;
    std::condition_variable start_cv_;
    std::condition_variable done_cv_;
    const std::function<void(std::size_t)>* job_ = nullptr;
    std::size_t generation_ = 0;
    std::size_t pending_ = 0;
    bool stopping_ = false;
    std::vector<std::exception_ptr> errors_;
};

}  // namespace tokadd
