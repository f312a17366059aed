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

#include <cstdint>
#include <map>
#include <mutex>
#include <set>
#include <vector>

#include "heatbench/heat.hpp"

namespace heatbench::testing_support {

/// Records the begin and end of every stencil op against one global sequence
/// and checks the log post hoc against heat::dep_ready.
class ScheduleLog : public heat::OpObserver {
 public:
  void on_begin(heat::Iteration it) override {
    std::lock_guard<std::mutex> lck(mtx_);
    entries_.push_back({it, seq_++, 0});
    open_[it] = entries_.size() - 1;
  }

  void on_end(heat::Iteration it) override {
    std::lock_guard<std::mutex> lck(mtx_);
    entries_[open_.at(it)].end = seq_++;
    open_.erase(it);
  }

  std::size_t size() const { return entries_.size(); }

  std::vector<heat::Iteration> order() const {
    std::vector<heat::Iteration> out;
    for (const auto& e : entries_) out.push_back(e.it);
    return out;
  }

  /// Ops that started before their dependencies had finished, plus any
  /// iteration executed more than once.
  std::size_t violations(int t_max, int h) const {
    std::size_t bad = 0;
    std::set<heat::Iteration> seen;
    for (const auto& op : entries_) {
      if (!seen.insert(op.it).second) ++bad;
      std::set<heat::Iteration> done;
      for (const auto& other : entries_) {
        if (other.end != 0 && other.end < op.begin) done.insert(other.it);
      }
      if (!heat::dep_ready(op.it, done, t_max, h)) ++bad;
    }
    return bad;
  }

 private:
  struct Entry {
    heat::Iteration it;
    std::uint64_t begin;
    std::uint64_t end;
  };

  std::mutex mtx_;
  std::uint64_t seq_ = 1;
  std::vector<Entry> entries_;
  std::map<heat::Iteration, std::size_t> open_;
};

}  // namespace heatbench::testing_support
