// Copyright 2026 The halin-enum Authors
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

#include "halin/task_pool.h"

#include <algorithm>

namespace halin {
namespace {

thread_local const TaskPool* tls_pool = nullptr;
thread_local int tls_index = -1;

// splitmix64 step; cheap per-worker randomness for victim selection.
std::uint64_t NextRandom(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

TaskPool::TaskPool(Options options) : options_(options) {
  const std::size_t n = std::max<std::size_t>(1, options_.workers);
  for (std::size_t i = 0; i < n; ++i) {
    queues_.push_back(std::make_unique<Queue>());
  }
  threads_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    threads_.emplace_back([this, i] { WorkerLoop(i); });
  }
}

TaskPool::~TaskPool() {
  {
    std::lock_guard lock(sleep_mu_);
    stop_ = true;
  }
  work_cv_.notify_all();
  for (std::thread& t : threads_) t.join();
}

int TaskPool::CurrentWorker() const {
  return tls_pool == this ? tls_index : -1;
}

bool TaskPool::Submit(Task& task) {
  if (options_.max_queued != 0 &&
      queued_.load(std::memory_order_relaxed) >= options_.max_queued) {
    return false;
  }
  const int self = CurrentWorker();
  const std::size_t target =
      self >= 0 ? static_cast<std::size_t>(self)
                : next_external_.fetch_add(1) % queues_.size();
  pending_.fetch_add(1);
  {
    std::lock_guard lock(queues_[target]->mu);
    queues_[target]->tasks.push_back(std::move(task));
  }
  {
    std::lock_guard lock(sleep_mu_);
    queued_.fetch_add(1);
  }
  work_cv_.notify_one();
  return true;
}

bool TaskPool::TryPop(std::size_t index, std::uint64_t& rng, Task& out) {
  {
    Queue& own = *queues_[index];
    std::lock_guard lock(own.mu);
    if (!own.tasks.empty()) {
      auto it = std::prev(own.tasks.end());
      if (options_.randomize) {
        it = own.tasks.begin() +
             static_cast<std::ptrdiff_t>(NextRandom(rng) % own.tasks.size());
      }
      out = std::move(*it);
      own.tasks.erase(it);
      queued_.fetch_sub(1);
      return true;
    }
  }
  const std::size_t n = queues_.size();
  const std::size_t start = NextRandom(rng) % n;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t victim = (start + k) % n;
    if (victim == index) continue;
    Queue& q = *queues_[victim];
    std::lock_guard lock(q.mu);
    if (q.tasks.empty()) continue;
    out = std::move(q.tasks.front());
    q.tasks.pop_front();
    queued_.fetch_sub(1);
    steals_.fetch_add(1, std::memory_order_relaxed);
    return true;
  }
  return false;
}

void TaskPool::Finish() {
  if (pending_.fetch_sub(1) == 1) {
    std::lock_guard lock(sleep_mu_);
    done_cv_.notify_all();
  }
}

void TaskPool::WorkerLoop(std::size_t index) {
  tls_pool = this;
  tls_index = static_cast<int>(index);
  std::uint64_t rng = options_.seed ^ (0x51ed2701ULL * (index + 1));
  Task task;
  while (true) {
    if (TryPop(index, rng, task)) {
      if (!cancelled()) {
        try {
          task();
        } catch (...) {
          std::lock_guard lock(error_mu_);
          if (!error_) error_ = std::current_exception();
          Cancel();
        }
      }
      task = nullptr;
      executed_.fetch_add(1, std::memory_order_relaxed);
      Finish();
      continue;
    }
    std::unique_lock lock(sleep_mu_);
    work_cv_.wait(lock, [&] { return stop_ || queued_.load() > 0; });
    if (stop_ && queued_.load() == 0) return;
  }
}

void TaskPool::Wait() {
  {
    std::unique_lock lock(sleep_mu_);
    done_cv_.wait(lock, [&] { return pending_.load() == 0; });
  }
  std::lock_guard lock(error_mu_);
  if (error_) {
    std::exception_ptr e = error_;
    error_ = nullptr;
    std::rethrow_exception(e);
  }
}

}  // namespace halin
