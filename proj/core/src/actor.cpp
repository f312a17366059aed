// Copyright 2026 The heatbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heatbench/actor.hpp"

#include <algorithm>
#include <thread>

namespace heatbench::actor {

Engine::Engine(std::size_t workers) : workers_(workers), active_(workers) {
  if (workers == 0) {
    throw std::invalid_argument("engine needs at least one worker");
  }
}

void Engine::send(Message& m, Actor& target) {
  if (m.in_flight_.exchange(true, std::memory_order_acq_rel)) {
    resend_events_.fetch_add(1, std::memory_order_relaxed);
    return;
  }
  m.owner_.store(&target, std::memory_order_release);

  std::unique_lock<std::mutex> lck(mtx_);
  ready_.push(&m);
  max_queue_length_ = std::max(max_queue_length_, ready_.size());
  cv_.notify_one();
}

void Engine::run(std::span<const Delivery> bootstrap) {
  {
    std::unique_lock<std::mutex> lck(mtx_);
    if (running_) {
      throw std::logic_error("engine is already running");
    }
    running_ = true;
    active_ = workers_;
    max_queue_length_ = ready_.size();
  }
  handler_invocations_.store(0, std::memory_order_relaxed);
  resend_events_.store(0, std::memory_order_relaxed);
  failure_ = nullptr;

  for (const auto& d : bootstrap) {
    send(*d.message, *d.target);
  }

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers_);
    for (std::size_t k = 0; k < workers_; ++k) {
      pool.emplace_back([this] { worker_loop(); });
    }
  }

  {
    std::unique_lock<std::mutex> lck(mtx_);
    running_ = false;
  }
  if (failure_) {
    std::rethrow_exception(std::exchange(failure_, nullptr));
  }
}

void Engine::worker_loop() {
  for (;;) {
    Message* m = nullptr;
    {
      std::unique_lock<std::mutex> lck(mtx_);
      while (ready_.empty()) {
        --active_;
        if (active_ == 0) {
          cv_.notify_one();
          return;
        }
        cv_.wait(lck);
        ++active_;
      }
      m = ready_.front();
      ready_.pop();
    }

    Actor* a = m->owner_.load(std::memory_order_acquire);
    {
      std::unique_lock<std::mutex> lck(a->guard_);
      m->in_flight_.store(false, std::memory_order_release);
      handler_invocations_.fetch_add(1, std::memory_order_relaxed);
      try {
        if (a->recv_) {
          a->recv_(*m, *a);
        }
      } catch (...) {
        record_failure(std::current_exception());
      }
    }
  }
}

void Engine::record_failure(std::exception_ptr error) {
  std::lock_guard<std::mutex> lck(failure_mtx_);
  if (!failure_) {
    failure_ = std::move(error);
  }
}

std::size_t Engine::ready_size() const {
  std::lock_guard<std::mutex> lck(mtx_);
  return ready_.size();
}

std::size_t Engine::active() const {
  std::lock_guard<std::mutex> lck(mtx_);
  return active_;
}

Diagnostics Engine::diagnostics() const {
  Diagnostics d;
  d.handler_invocations = handler_invocations_.load(std::memory_order_relaxed);
  d.resend_events = resend_events_.load(std::memory_order_relaxed);
  std::lock_guard<std::mutex> lck(mtx_);
  d.max_queue_length = max_queue_length_;
  return d;
}

}  // namespace heatbench::actor
