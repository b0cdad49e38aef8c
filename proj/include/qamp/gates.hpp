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
#include "qamp/local_operator.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qamp {

/// Output class of a training example: one of N values, encoded on the unit
/// circle as exp(2*pi*i*s/N). For N=2 this is the familiar +1/-1 encoding
/// (s=0 -> +1, s=1 -> -1).
struct ClassLabel {
    int s = 0;
    int N = 2;

    ClassLabel() = default;
    ClassLabel(int s_, int N_) : s(s_), N(N_) {
        if (N < 2) {
            throw validation_error("class: N must be >= 2 (got " + std::to_string(N) + ")");
        }
        if (s < 0 || s >= N) {
            throw validation_error("class: s=" + std::to_string(s) + " out of range for N=" +
                                   std::to_string(N));
        }
    }

    /// Unit-circle point for this class. The axis-aligned cases come out
    /// exact so binary and quaternary encodings stay free of rounding.
    Amplitude phase() const {
        if (s == 0) return {1.0, 0.0};
        if (2 * s == N) return {-1.0, 0.0};
        if (4 * s == N) return {0.0, 1.0};
        if (4 * s == 3 * N) return {0.0, -1.0};
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(N));
    }

    friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

namespace detail {

inline LocalOperator identity_operator(GateKind kind, GateParams params, std::vector<int> arity) {
    LocalOperator op;
    op.kind = kind;
    op.params = params;
    op.arity = std::move(arity);
    const int d = op.dim();
    op.matrix.assign(static_cast<size_t>(d) * static_cast<size_t>(d), Amplitude{0.0, 0.0});
    for (int i = 0; i < d; ++i) {
        op.at(i, i) = 1.0;
    }
    return op;
}

} // namespace detail

/// Single-site flip |0> <-> |1>.
inline LocalOperator x_gate() {
    LocalOperator op;
    op.kind = GateKind::F;
    op.arity = {2};
    op.matrix = {0.0, 1.0, 1.0, 0.0};
    return op;
}

/// Shift the second site by +1 mod `radix` when the first (2-state) site is
/// |0>; leave it alone when the control is |1>. Block-diagonal [[C, 0], [0, I]]
/// with C the +1 cyclic permutation. For radix 2 this is the anti-controlled NOT.
inline LocalOperator anti_cshift_gate(int radix) {
    if (radix < 2) {
        throw validation_error("anti_cshift: radix must be >= 2 (got " + std::to_string(radix) + ")");
    }
    GateParams params;
    params.radix = radix;
    LocalOperator op = detail::identity_operator(GateKind::F0, params, {2, radix});
    for (int q = 0; q < radix; ++q) {
        op.at(q, q) = 0.0;
        op.at((q + 1) % radix, q) = 1.0;
    }
    return op;
}

/// Flip the second site when the first is |1>; the standard CNOT.
inline LocalOperator cnot_gate() {
    LocalOperator op = detail::identity_operator(GateKind::F1, GateParams{}, {2, 2});
    op.at(2, 2) = 0.0;
    op.at(3, 3) = 0.0;
    op.at(2, 3) = 1.0;
    op.at(3, 2) = 1.0;
    return op;
}

/// Two-qubit rotation that splits one example branch off the generator.
/// Acting on (c1, c2), it leaves the |00>,|01> block untouched and rotates
/// the |10>,|11> block:
///
///   |10> -> sqrt((p-1)/p) |10> + (phase/sqrt(p)) |11>
///
/// where `p` counts the examples still to process (including the current one)
/// and `phase` is the class point on the unit circle. The upper-right entry
/// carries the conjugate phase, which keeps the two rotated columns orthogonal
/// for complex phases.
inline LocalOperator generation_gate(const ClassLabel& cls, int p) {
    if (p < 1) {
        throw validation_error("generation: p must be >= 1 (got " + std::to_string(p) + ")");
    }
    GateParams params;
    params.s = cls.s;
    params.p = p;
    params.N = cls.N;
    LocalOperator op = detail::identity_operator(GateKind::S, params, {2, 2});
    const double keep = std::sqrt(static_cast<double>(p - 1) / static_cast<double>(p));
    const Amplitude split = cls.phase() / std::sqrt(static_cast<double>(p));
    op.at(2, 2) = keep;
    op.at(2, 3) = -std::conj(split);
    op.at(3, 2) = split;
    op.at(3, 3) = keep;
    return op;
}

/// Flip the third (2-state) site exactly when the first two sites hold the
/// condition values (v1, v2); every other basis state is a fixed point.
/// The conditioned sites may have any radices r1, r2 >= 2.
inline LocalOperator ccnot_gate(int v1, int v2, int r1, int r2) {
    if (r1 < 2 || r2 < 2) {
        throw validation_error("ccnot: radices must be >= 2 (got " + std::to_string(r1) + ", " +
                               std::to_string(r2) + ")");
    }
    if (v1 < 0 || v1 >= r1 || v2 < 0 || v2 >= r2) {
        throw validation_error("ccnot: condition (" + std::to_string(v1) + ", " + std::to_string(v2) +
                               ") out of range for radices (" + std::to_string(r1) + ", " +
                               std::to_string(r2) + ")");
    }
    GateParams params;
    params.v1 = v1;
    params.v2 = v2;
    params.r1 = r1;
    params.r2 = r2;
    LocalOperator op = detail::identity_operator(GateKind::A, params, {r1, r2, 2});
    const int block = (v1 * r2 + v2) * 2;
    op.at(block, block) = 0.0;
    op.at(block + 1, block + 1) = 0.0;
    op.at(block, block + 1) = 1.0;
    op.at(block + 1, block) = 1.0;
    return op;
}

} // namespace qamp
