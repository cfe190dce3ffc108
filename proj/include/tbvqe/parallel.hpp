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

#pragma once

#include <cstddef>

namespace tbvqe {

// Process-wide cap on worker threads used by the OpenMP kernels.
// 0 restores the hardware default. Thread-count changes do not affect
// results: every kernel has a serial reference and the parallel variants
// reduce in a fixed order.
void set_max_threads(int n);
int max_threads();

// True when the parallel kernel variant should be used for a loop of
// `work` iterations. Small problems stay on the serial path; the
// crossover is a grain-size heuristic, not a correctness concern.
bool use_parallel(std::size_t work);

} // namespace tbvqe
