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

#pragma once

/// Shared-memory actor runtime with ownership-transfer messages.
///
/// A message is a variable, not a value in a mailbox. Sending it hands
/// ownership to the target actor and puts it on the engine's ready queue;
/// a worker thread later clears the in-flight flag and runs the target's
/// handler under that actor's lock. An actor may touch a message only while
/// `access(m, self)` holds, and may send only messages it can access.
///
/// Termination is quiescence: a worker that finds the queue empty leaves the
/// active set, and the last one to leave wakes the next waiter so that the
/// whole pool shuts down in a cascade.

#include <any>
#include <atomic>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <queue>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace heatbench::actor {

class Actor;
class Engine;

/// Unit of ownership transfer. Derive from it (or use `Envelope<T>`) to
/// attach a payload; the runtime only looks at the owner and the flag.
class Message {
 public:
  Message() = default;
  explicit Message(Actor* owner) : owner_(owner) {}
  Message(const Message&) = delete;
  Message& operator=(const Message&) = delete;
  virtual ~Message() = default;

  Actor* owner() const noexcept { return owner_.load(std::memory_order_acquire); }
  bool in_flight() const noexcept { return in_flight_.load(std::memory_order_acquire); }

  /// Reassigns the owner outside of any run, e.g. when rebuilding a
  /// workload for a fresh bootstrap. Not for use while workers are active.
  void reset(Actor* owner) noexcept {
    in_flight_.store(false, std::memory_order_relaxed);
    owner_.store(owner, std::memory_order_release);
  }

 private:
  friend class Engine;
  friend bool access(const Message& m, const Actor& a) noexcept;

  std::atomic<Actor*> owner_{nullptr};
  std::atomic<bool> in_flight_{false};
};

template <typename T>
class Envelope : public Message {
 public:
  Envelope() = default;
  explicit Envelope(Actor* owner, T value = T{}) : Message(owner), value(std::move(value)) {}

  T value;
};

/// Unit of serialized computation: at most one handler invocation per actor
/// runs at any time.
class Actor {
 public:
  using Handler = std::function<void(Message&, Actor&)>;

  explicit Actor(Handler recv, std::any state = {})
      : recv_(std::move(recv)), state_(std::move(state)) {}
  Actor(const Actor&) = delete;
  Actor& operator=(const Actor&) = delete;

  std::any& state() noexcept { return state_; }
  const std::any& state() const noexcept { return state_; }

  template <typename T>
  T& state_as() {
    return std::any_cast<T&>(state_);
  }

 private:
  friend class Engine;

  std::mutex guard_;
  Handler recv_;
  std::any state_;
};

/// True iff `a` owns `m` and `m` is not on delivery. Only meaningful inside
/// a handler running on behalf of `a`.
inline bool access(const Message& m, const Actor& a) noexcept {
  // Owner first: a sender stores the flag before the owner, so observing the
  // new owner implies observing the raised flag.
  return m.owner_.load(std::memory_order_acquire) == &a &&
         !m.in_flight_.load(std::memory_order_acquire);
}

struct Diagnostics {
  std::uint64_t handler_invocations = 0;
  std::uint64_t resend_events = 0;
  std::size_t max_queue_length = 0;
};

struct Delivery {
  Message* message;
  Actor* target;
};

class Engine {
 public:
  /// Throws std::invalid_argument when `workers` is zero.
  explicit Engine(std::size_t workers);
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;
  ~Engine() = default;

  /// Hands `m` to `target`. A message that is already in flight is left
  /// untouched and the event is counted in `diagnostics().resend_events`.
  void send(Message& m, Actor& target);

  /// Performs the bootstrap sends, starts the worker pool and blocks until
  /// quiescence. Resets the diagnostics counters first. Rethrows the first
  /// exception escaping a handler once the pool has drained.
  void run(std::span<const Delivery> bootstrap = {});
  void run(std::initializer_list<Delivery> bootstrap) {
    run(std::span<const Delivery>(bootstrap.begin(), bootstrap.size()));
  }

  std::size_t workers() const noexcept { return workers_; }
  std::size_t ready_size() const;
  std::size_t active() const;
  Diagnostics diagnostics() const;

 private:
  void worker_loop();
  void record_failure(std::exception_ptr error);

  const std::size_t workers_;

  mutable std::mutex mtx_;
  std::condition_variable cv_;
  std::queue<Message*> ready_;
  std::size_t active_;
  std::size_t max_queue_length_ = 0;
  bool running_ = false;

  std::atomic<std::uint64_t> handler_invocations_{0};
  std::atomic<std::uint64_t> resend_events_{0};

  std::mutex failure_mtx_;
  std::exception_ptr failure_;
};

}  // namespace heatbench::actor
