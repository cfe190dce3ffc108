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

#include "tbvqe/rng.hpp"

#include <algorithm>

namespace tbvqe {

std::mt19937_64 substream(std::uint64_t root_seed, Stream stream, std::uint64_t a,
                          std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(root_seed), static_cast<std::uint32_t>(root_seed >> 32),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(stream)),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32)};
    return std::mt19937_64(seq);
}

std::vector<std::uint64_t> multinomial_sample(std::span<const double> probs, std::uint64_t shots,
                                              std::mt19937_64& rng) {
    std::vector<std::uint64_t> counts(probs.size(), 0);
    if (probs.empty()) return counts;
    std::size_t last_positive = 0;
    double mass_left = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        if (probs[k] > 0.0) {
            mass_left += probs[k];
            last_positive = k;
        }
    }
    std::uint64_t remaining = shots;
    for (std::size_t k = 0; k < last_positive && remaining > 0 && mass_left > 0.0; ++k) {
        if (probs[k] <= 0.0) continue;
        const double p = std::clamp(probs[k] / mass_left, 0.0, 1.0);
        std::uint64_t draw;
        if (p >= 1.0) {
            draw = remaining;
        } else {
            std::binomial_distribution<std::uint64_t> binom(remaining, p);
            draw = binom(rng);
        }
        counts[k] = draw;
        remaining -= draw;
        mass_left -= probs[k];
    }
    counts[last_positive] += remaining;
    return counts;
}

} // namespace tbvqe
