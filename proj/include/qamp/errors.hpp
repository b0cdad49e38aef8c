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

#include <stdexcept>
#include <string>

namespace qamp {

/// Rejected input: bad dimensions, out-of-range digits, malformed files,
/// duplicate training inputs. Maps to CLI exit code 1.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A runtime check the algorithm guarantees has failed: norm drift, stray
/// amplitude mass, verification mismatch. Maps to CLI exit code 2.
class invariant_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace qamp
