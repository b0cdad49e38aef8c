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

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace qamp {

using Amplitude = std::complex<double>;

/// Wire vocabulary for gate records. The letters match the netlist format:
/// F = unconditional flip, F0 = shift-if-control-zero, F1 = flip-if-control-one,
/// S = generation rotation, A = value-conditioned double-controlled flip.
enum class GateKind { F, F0, F1, S, A };

inline std::string gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::F: return "F";
    case GateKind::F0: return "F0";
    case GateKind::F1: return "F1";
    case GateKind::S: return "S";
    case GateKind::A: return "A";
    }
    return "?";
}

inline GateKind gate_kind(const std::string& name) {
    if (name == "F") return GateKind::F;
    if (name == "F0") return GateKind::F0;
    if (name == "F1") return GateKind::F1;
    if (name == "S") return GateKind::S;
    if (name == "A") return GateKind::A;
    throw validation_error("unknown gate kind '" + name + "'");
}

/// Construction parameters, interpreted per kind:
///   F  - none
///   F0 - radix (states the shifted target cycles through)
///   F1 - none
///   S  - s (class), p (examples still to process), N (class count)
///   A  - v1, v2 (condition values), r1, r2 (radices of the conditioned sites)
struct GateParams {
    int s = 0;
    int p = 0;
    int N = 0;
    int radix = 0;
    int v1 = 0;
    int v2 = 0;
    int r1 = 0;
    int r2 = 0;

    friend bool operator==(const GateParams&, const GateParams&) = default;
};

/// Small dense unitary applied to an ordered tuple of register sites.
/// `arity` lists the radix of each operand site; the matrix is row-major
/// over the mixed-radix product space (first operand most significant).
struct LocalOperator {
    GateKind kind = GateKind::F;
    GateParams params;
    std::vector<int> arity;
    std::vector<Amplitude> matrix;

    int dim() const {
        int d = 1;
        for (int r : arity) d *= r;
        return d;
    }

    const Amplitude& at(int row, int col) const {
        return matrix[static_cast<size_t>(row) * static_cast<size_t>(dim()) + static_cast<size_t>(col)];
    }
    Amplitude& at(int row, int col) {
        return matrix[static_cast<size_t>(row) * static_cast<size_t>(dim()) + static_cast<size_t>(col)];
    }
};

/// Max entrywise residual of U†U against the identity.
inline double unitarity_residual(const LocalOperator& op) {
    const int d = op.dim();
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            Amplitude dot{0.0, 0.0};
            for (int k = 0; k < d; ++k) {
                dot += std::conj(op.at(k, i)) * op.at(k, j);
            }
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

inline bool is_unitary(const LocalOperator& op, double tol) { return unitarity_residual(op) <= tol; }

} // namespace qamp
