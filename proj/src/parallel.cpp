// Copyright 2026 The tbvqe authors
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

#include "tbvqe/parallel.hpp"

#include <atomic>

#include <omp.h>

namespace tbvqe {

namespace {
std::atomic<int> g_max_threads{0};
// Below this many loop iterations the fork/join overhead dominates.
constexpr std::size_t kParallelGrain = 1u << 12;
} // namespace

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
    const int cap = g_max_threads.load();
    const int hw = omp_get_max_threads();
    if (cap == 0) return hw;
    return cap < hw ? cap : hw;
}

bool use_parallel(std::size_t work) {
    return max_threads() > 1 && work >= kParallelGrain;
}

} // namespace tbvqe
