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

#ifndef HALIN_TASK_POOL_H_
#define HALIN_TASK_POOL_H_

#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <thread>
#include <vector>

namespace halin {

// Fixed-size work-stealing pool for fork-join task trees. Each worker owns a
// deque; it pops its own work LIFO and steals FIFO from a random victim.
class TaskPool {
 public:
  using Task = std::function<void()>;

  struct Options {
    std::size_t workers = 1;
    // Pop a random entry of the local deque instead of the newest one.
    bool randomize = false;
    std::uint64_t seed = 0;
    // Submit refuses new tasks beyond this many queued ones (0: unbounded).
    std::size_t max_queued = 0;
  };

  explicit TaskPool(Options options);
  ~TaskPool();

  TaskPool(const TaskPool&) = delete;
  TaskPool& operator=(const TaskPool&) = delete;

  // Queues `task`. Returns false, leaving `task` untouched, when the queue
  // limit is reached; the caller should then run it inline.
  bool Submit(Task& task);
  bool Submit(Task&& task) { return Submit(task); }

  // Blocks until every submitted task (and everything they submitted) has
  // finished. Rethrows the first exception a task raised.
  void Wait();

  // Drops queued tasks; running ones finish.
  void Cancel() { cancelled_.store(true, std::memory_order_relaxed); }
  bool cancelled() const { return cancelled_.load(std::memory_order_relaxed); }

  std::size_t workers() const { return queues_.size(); }
  std::uint64_t steals() const { return steals_.load(); }
  std::uint64_t executed() const { return executed_.load(); }

  // Index of the calling worker thread in this pool, or -1 elsewhere.
  int CurrentWorker() const;

 private:
  struct Queue {
    std::mutex mu;
    std::deque<Task> tasks;
  };

  void WorkerLoop(std::size_t index);
  bool TryPop(std::size_t index, std::uint64_t& rng, Task& out);
  void Finish();

  Options options_;
  std::vector<std::unique_ptr<Queue>> queues_;
  std::vector<std::thread> threads_;

  std::mutex sleep_mu_;
  std::condition_variable work_cv_;
  std::condition_variable done_cv_;
  std::atomic<std::size_t> queued_{0};
  std::atomic<std::size_t> pending_{0};
  bool stop_ = false;

  std::atomic<bool> cancelled_{false};
  std::atomic<std::uint64_t> steals_{0};
  std::atomic<std::uint64_t> executed_{0};
  std::atomic<std::size_t> next_external_{0};

  std::mutex error_mu_;
  std::exception_ptr error_;
};

}  // namespace halin

#endif  // HALIN_TASK_POOL_H_
