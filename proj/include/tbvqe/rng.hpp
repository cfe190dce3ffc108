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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace tbvqe {

// Named substreams hanging off one root seed, so that independent parts of
// a run (parameter init, sampling per circuit, per trial) draw from
// decorrelated generators while the whole run replays from a single seed.
enum class Stream : std::uint64_t { Init = 1, Sampling = 2, Scratch = 3 };

std::mt19937_64 substream(std::uint64_t root_seed, Stream stream, std::uint64_t a = 0,
                          std::uint64_t b = 0);

/// Sample counts for `shots` draws from the categorical distribution
/// `probs` (non-negative, summing to ~1) by the conditional-binomial
/// method: O(len(probs)) binomial draws instead of O(shots) single draws.
std::vector<std::uint64_t> multinomial_sample(std::span<const double> probs, std::uint64_t shots,
                                              std::mt19937_64& rng);

} // namespace tbvqe
