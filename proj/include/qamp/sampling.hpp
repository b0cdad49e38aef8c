// Copyright 2026 The qamp developers
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

#include "qamp/errors.hpp"
#include "qamp/state.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qamp {

/// Measurement simulation over the input register. Deterministic given the
/// seed: the CDF is built in ascending basis-index order and the uniforms
/// come from a fixed 53-bit construction, so histograms are bit-reproducible
/// across platforms.
inline std::map<std::string, uint64_t> sample_x(const SparseState& state, uint64_t shots,
                                                uint64_t seed) {
    const std::map<std::string, Amplitude> marginal = restrict_to_x(state);

    std::vector<std::pair<std::string, double>> cdf;
    cdf.reserve(marginal.size());
    double total = 0.0;
    for (const auto& [pattern, amp] : marginal) {
        total += std::norm(amp);
        cdf.emplace_back(pattern, total);
    }
    if (cdf.empty() || total <= 0.0) {
        throw invariant_error("sample: state has no probability mass");
    }

    std::mt19937_64 rng(seed);
    std::map<std::string, uint64_t> histogram;
    for (uint64_t shot = 0; shot < shots; ++shot) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * total;
        size_t lo = 0;
        size_t hi = cdf.size() - 1;
        while (lo < hi) {
            const size_t mid = (lo + hi) / 2;
            if (cdf[mid].second > u) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        ++histogram[cdf[lo].first];
    }
    return histogram;
}

} // namespace qamp
