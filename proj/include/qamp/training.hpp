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
#include "qamp/gates.hpp"
#include "qamp/layout.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qamp {

/// One known point of the encoded function: input digits and output class.
struct TrainingExample {
    std::vector<int> z;
    ClassLabel cls;

    friend bool operator==(const TrainingExample&, const TrainingExample&) = default;
};

/// Ordered set of examples over a fixed register layout. Inputs are pairwise
/// distinct; construction goes through canonicalize().
struct TrainingSet {
    RegisterLayout layout;
    std::vector<TrainingExample> examples;

    int m() const { return static_cast<int>(examples.size()); }

    friend bool operator==(const TrainingSet& a, const TrainingSet& b) {
        return a.layout == b.layout && a.examples == b.examples;
    }
};

/// Example as read from a file: input digit string plus raw output value.
struct RawExample {
    std::string input;
    int output = 0;
};

/// Canonical class for a raw output value. Binary sets accept the +1/-1
/// convention (+1 -> class 0, -1 -> class 1); 0 is also taken as class 0.
/// For N > 2 only canonical digits 0..N-1 are accepted, so a signed value
/// is never ambiguous.
inline ClassLabel canonical_class(int output, int N) {
    if (N == 2) {
        if (output == 1 || output == 0) return ClassLabel(0, 2);
        if (output == -1) return ClassLabel(1, 2);
        throw validation_error("class: binary output must be 1, -1, or 0 (got " +
                               std::to_string(output) + ")");
    }
    if (output < 0 || output >= N) {
        throw validation_error("class: output " + std::to_string(output) +
                               " out of range for N=" + std::to_string(N) +
                               " (signed outputs are binary-only)");
    }
    return ClassLabel(output, N);
}

/// Validate raw examples against (n, N) and produce the canonical set:
/// inputs parsed to digits, outputs mapped to classes, order preserved.
inline TrainingSet canonicalize(const std::vector<RawExample>& raw, int n, int N) {
    RegisterLayout layout(n, N);
    if (raw.empty()) {
        throw validation_error("training set must contain at least one example");
    }
    TrainingSet ts{layout, {}};
    ts.examples.reserve(raw.size());
    std::set<std::vector<int>> seen;
    for (const RawExample& ex : raw) {
        if (static_cast<int>(ex.input.size()) != n) {
            throw validation_error("example input '" + ex.input + "' has " +
                                   std::to_string(ex.input.size()) + " digits, expected " +
                                   std::to_string(n));
        }
        std::vector<int> z;
        try {
            z = parse_digits(ex.input, N);
        } catch (const validation_error& err) {
            throw validation_error("example input '" + ex.input + "': " + err.what());
        }
        if (!seen.insert(z).second) {
            throw validation_error("duplicate example input '" + ex.input + "'");
        }
        ts.examples.push_back(TrainingExample{std::move(z), canonical_class(ex.output, N)});
    }
    return ts;
}

} // namespace qamp
