#include "tokadd/worker_pool.hpp"

#include <algorithm>
#include <stdexcept>

namespace tokadd {

WorkerPool::WorkerPool(std::size_t workers) {
    if (workers == 0) {
        throw std::invalid_argument("worker pool needs at least one worker");
    }
    errors_.resize(workers);
    threads_.reserve(workers - 1);
    for (std::size_t id = 1; id < workers; ++id) {
        threads_.emplace_back(&WorkerPool::thread_main, this, id);
    }
}

WorkerPool::~WorkerPool() {
    {
        std::lock_guard lock(mutex_);
        stopping_ = true;
    }
    start_cv_.notify_all();
    for (auto& t : threads_) {
        t.join();
    }
}

void WorkerPool::run(const std::function<void(std::size_t)>& job) {
    {
        std::lock_guard lock(mutex_);
        job_ = &job;
        pending_ = threads_.size();
        ++generation_;
        std::fill(errors_.begin(), errors_.end(), nullptr);
    }
    start_cv_.notify_all();

    try {
        job(0);
    } catch (...) {
        errors_[0] = std::current_exception();
    }

    std::unique_lock lock(mutex_);
    done_cv_.wait(lock, [this] { return pending_ == 0; });
    job_ = nullptr;
    for (const auto& e : errors_) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

void WorkerPool::thread_main(std::size_t id) {
    std::size_t seen = 0;
    for (;;) {
        const std::function<void(std::size_t)>* job = nullptr;
        {
            std::unique_lock lock(mutex_);
            start_cv_.wait(lock, [&] { return stopping_ || generation_ != seen; });
            if (stopping_) {
                return;
            }
            seen = generation_;
            job = job_;
        }

        std::exception_ptr error;
        try {
            (*job)(id);
        } catch (...) {
            error = std::current_exception();
        }

        {
            std::lock_guard lock(mutex_);
            errors_[id] = std::move(error);
            --pending_;
        }
        done_cv_.notify_one();
    }
}

}  // namespace tokadd
