// Copyright 2026 The groupcrit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace groupcrit {

struct ComputeOptions {
  /// 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, total) into one contiguous chunk per thread and runs
/// body(state, begin, end) on each with a fresh state from make_state().
/// States come back in chunk order, so an in-order merge is deterministic.
template <typename MakeState, typename Body>
auto parallel_chunks(std::size_t total, unsigned threads, MakeState make_state, Body body) {
  using State = decltype(make_state());
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, total));
  std::vector<State> states;
  states.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) states.push_back(make_state());
  const std::size_t step = (total + workers - 1) / workers;
  if (workers == 1) {
    body(states[0], std::size_t{0}, total);
    return states;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = std::min(total, w * step);
    const std::size_t end = std::min(total, begin + step);
    pool.emplace_back([&, w, begin, end] { body(states[w], begin, end); });
  }
  for (auto& t : pool) t.join();
  return states;
}

}  // namespace groupcrit
