// Copyright 2026 The twotree-enum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "twotree/worker_pool.h"

#include <stdexcept>

namespace twotree {

WorkerPool::WorkerPool(int workers) {
  if (workers < 1) throw std::invalid_argument("worker count must be >= 1");
  threads_.reserve(workers - 1);
  for (int k = 1; k < workers; ++k) {
    threads_.emplace_back([this] { worker_loop(); });
  }
}

WorkerPool::~WorkerPool() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stop_ = true;
  }
  wake_.notify_all();
  for (auto& t : threads_) t.join();
}

// Claims and runs indices of the current job until none are left.
void WorkerPool::drain() {
  std::unique_lock<std::mutex> lock(mu_);
  ++busy_;
  while (next_ < count_) {
    const std::size_t k = next_++;
    const auto* task = task_;
    lock.unlock();
    try {
      (*task)(k);
    } catch (...) {
      lock.lock();
      if (!error_) error_ = std::current_exception();
      next_ = count_;
      ++finished_;
      continue;
    }
    lock.lock();
    ++finished_;
  }
  --busy_;
  if (busy_ == 0) done_.notify_all();
}

void WorkerPool::worker_loop() {
  std::size_t seen = 0;
  for (;;) {
    {
      std::unique_lock<std::mutex> lock(mu_);
      wake_.wait(lock, [&] { return stop_ || epoch_ != seen; });
      if (stop_) return;
      seen = epoch_;
    }
    drain();
  }
}

void WorkerPool::run(std::size_t count,
                     const std::function<void(std::size_t)>& task) {
  if (count == 0) return;
  {
    std::lock_guard<std::mutex> lock(mu_);
    task_ = &task;
    count_ = count;
    next_ = 0;
    finished_ = 0;
    error_ = nullptr;
    ++epoch_;
  }
  wake_.notify_all();
  drain();
  std::exception_ptr error;
  {
    std::unique_lock<std::mutex> lock(mu_);
    done_.wait(lock, [&] { return busy_ == 0 && next_ >= count_; });
    task_ = nullptr;
    count_ = 0;
    error = error_;
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace twotree
