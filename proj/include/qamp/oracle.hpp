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

#include "qamp/encoder.hpp"
#include "qamp/errors.hpp"
#include "qamp/layout.hpp"
#include "qamp/state.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

// Brute-force verification path. Everything here works on fully materialized
// vectors and matrices and never goes through the sparse application code,
// so the two implementations can check each other.

namespace qamp {

/// Full state vector, one amplitude per basis index.
struct DenseState {
    RegisterLayout layout;
    std::vector<Amplitude> amplitudes;
};

/// Total-dimension operator matrix, row-major.
struct GlobalMatrix {
    uint64_t dim = 0;
    std::vector<Amplitude> matrix;

    const Amplitude& at(uint64_t row, uint64_t col) const { return matrix[row * dim + col]; }
    Amplitude& at(uint64_t row, uint64_t col) { return matrix[row * dim + col]; }
};

/// Memory guards. States are cheap; matrices are quadratic, so their cap is
/// much lower (2^12 is a quarter-gigabyte matrix already).
constexpr uint64_t dense_state_dim_limit = UINT64_C(1) << 18;
constexpr uint64_t global_matrix_dim_limit = UINT64_C(1) << 12;

inline DenseState dense_zero_state(const RegisterLayout& layout) {
    if (layout.total_dim() > dense_state_dim_limit) {
        throw validation_error("oracle: dimension " + std::to_string(layout.total_dim()) +
                               " exceeds the dense-state guard");
    }
    DenseState state{layout, std::vector<Amplitude>(layout.total_dim(), Amplitude{0.0, 0.0})};
    state.amplitudes[0] = 1.0;
    return state;
}

/// Lift a local operator to the full space: entry (J, I) is op[j, i] whenever
/// J and I agree on every non-target site and restrict to sub-indices j, i on
/// the targets.
inline GlobalMatrix global_matrix(const LocalOperator& op, const std::vector<int>& targets,
                                  const RegisterLayout& layout) {
    const uint64_t dim = layout.total_dim();
    if (dim > global_matrix_dim_limit) {
        throw validation_error("oracle: dimension " + std::to_string(dim) +
                               " exceeds the global-matrix guard");
    }
    if (targets.size() != op.arity.size()) {
        throw validation_error("oracle: operator arity does not match target count");
    }
    for (size_t a = 0; a < targets.size(); ++a) {
        if (layout.site_radix(targets[a]) != op.arity[a]) {
            throw validation_error("oracle: operand radix mismatch at site " +
                                   layout.site_name(targets[a]));
        }
        for (size_t b = a + 1; b < targets.size(); ++b) {
            if (targets[a] == targets[b]) {
                throw validation_error("oracle: duplicate target site");
            }
        }
    }

    const int sub_dim = op.dim();
    std::vector<int> sub_weights(targets.size(), 1);
    for (int a = static_cast<int>(targets.size()) - 2; a >= 0; --a) {
        sub_weights[static_cast<size_t>(a)] =
            sub_weights[static_cast<size_t>(a) + 1] * op.arity[static_cast<size_t>(a) + 1];
    }

    GlobalMatrix global;
    global.dim = dim;
    global.matrix.assign(dim * dim, Amplitude{0.0, 0.0});
    for (uint64_t col = 0; col < dim; ++col) {
        int sub_col = 0;
        uint64_t base = col;
        for (size_t a = 0; a < targets.size(); ++a) {
            const int d = layout.digit(col, targets[a]);
            sub_col += d * sub_weights[a];
            base -= static_cast<uint64_t>(d) * layout.site_weight(targets[a]);
        }
        for (int sub_row = 0; sub_row < sub_dim; ++sub_row) {
            uint64_t row = base;
            int rest = sub_row;
            for (size_t a = 0; a < targets.size(); ++a) {
                row += static_cast<uint64_t>(rest / sub_weights[a]) * layout.site_weight(targets[a]);
                rest %= sub_weights[a];
            }
            global.at(row, col) = op.at(sub_row, sub_col);
        }
    }
    return global;
}

/// Plain dense matrix-vector product.
inline DenseState apply_global(const GlobalMatrix& matrix, const DenseState& state) {
    const uint64_t dim = state.layout.total_dim();
    if (matrix.dim != dim) {
        throw validation_error("oracle: matrix dimension does not match state");
    }
    DenseState out{state.layout, std::vector<Amplitude>(dim, Amplitude{0.0, 0.0})};
    for (uint64_t row = 0; row < dim; ++row) {
        Amplitude sum{0.0, 0.0};
        const Amplitude* row_data = matrix.matrix.data() + row * dim;
        for (uint64_t col = 0; col < dim; ++col) {
            sum += row_data[col] * state.amplitudes[col];
        }
        out.amplitudes[row] = sum;
    }
    return out;
}

inline double dense_norm(const DenseState& state) {
    double sum = 0.0;
    for (const Amplitude& amp : state.amplitudes) {
        sum += std::norm(amp);
    }
    return std::sqrt(sum);
}

inline double global_unitarity_residual(const GlobalMatrix& matrix) {
    const uint64_t dim = matrix.dim;
    double worst = 0.0;
    for (uint64_t i = 0; i < dim; ++i) {
        for (uint64_t j = 0; j < dim; ++j) {
            Amplitude dot{0.0, 0.0};
            for (uint64_t k = 0; k < dim; ++k) {
                dot += std::conj(matrix.at(k, i)) * matrix.at(k, j);
            }
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

/// Largest |dense_i - sparse_i| over all basis indices.
inline double dense_vs_sparse_diff(const DenseState& dense, const SparseState& sparse) {
    if (dense.layout != sparse.layout) {
        throw validation_error("oracle: states have different layouts");
    }
    double worst = 0.0;
    auto it = sparse.entries.begin();
    for (uint64_t index = 0; index < dense.layout.total_dim(); ++index) {
        Amplitude expected{0.0, 0.0};
        if (it != sparse.entries.end() && it->first == index) {
            expected = it->second;
            ++it;
        }
        worst = std::max(worst, std::abs(dense.amplitudes[index] - expected));
    }
    return worst;
}

inline double dense_mass_c11(const DenseState& state) {
    const RegisterLayout& layout = state.layout;
    double sum = 0.0;
    for (uint64_t index = 0; index < layout.total_dim(); ++index) {
        if (layout.digit(index, layout.c1_site()) == 1 && layout.digit(index, layout.c2_site()) == 1) {
            sum += std::norm(state.amplitudes[index]);
        }
    }
    return sum;
}

inline double dense_mass_outside_cleared_ancillae(const DenseState& state) {
    const RegisterLayout& layout = state.layout;
    double sum = 0.0;
    for (uint64_t index = 0; index < layout.total_dim(); ++index) {
        bool clear = layout.digit(index, layout.c1_site()) == 0 &&
                     layout.digit(index, layout.c2_site()) == 0;
        for (int k = 1; clear && k <= layout.g_width(); ++k) {
            clear = layout.digit(index, layout.g_site(k)) == 0;
        }
        if (!clear) {
            sum += std::norm(state.amplitudes[index]);
        }
    }
    return sum;
}

/// Replay an event trace with full matrices, starting from dense |0...0>.
inline DenseState dense_replay(const RegisterLayout& layout, const std::vector<GateEvent>& events) {
    DenseState state = dense_zero_state(layout);
    for (const GateEvent& ev : events) {
        state = apply_global(global_matrix(make_operator(ev), ev.targets, layout), state);
    }
    return state;
}

/// Encode through the dense path only: take the gate schedule and multiply
/// it out matrix by matrix.
inline DenseState dense_encode(const TrainingSet& ts) {
    EncodeOptions options;
    options.check_invariants = false;
    return dense_replay(ts.layout, encode(ts, options).events);
}

// ---------------------------------------------------------------------------
// Step-by-step comparison of the sparse run against the dense replay.

constexpr size_t no_failure = std::numeric_limits<size_t>::max();

struct StepComparison {
    double diff = 0.0;        // sparse snapshot vs dense vector after the event
    double dense_norm = 0.0;  // norm of the dense vector after the event
};

struct CompareReport {
    bool pass = true;
    size_t first_failure = no_failure;
    std::string failure;
    double max_diff = 0.0;
    double final_stray_mass = 0.0;
    std::vector<StepComparison> steps;
};

/// Dense replay of `events`, checked after every event against the sparse
/// snapshots. The dense side independently confirms that no c=11 branch
/// exists when a generation gate arrives, that the norm stays 1, and that the
/// final state leaves the ancillae empty.
inline CompareReport compare_trace(const RegisterLayout& layout, const std::vector<GateEvent>& events,
                                   const std::vector<SparseState>& snapshots, double tol) {
    if (snapshots.size() != events.size()) {
        throw validation_error("compare: snapshot count does not match event count (trace required)");
    }
    CompareReport report;
    report.steps.reserve(events.size());
    DenseState dense = dense_zero_state(layout);

    auto fail = [&](size_t index, const std::string& why) {
        if (report.pass) {
            report.pass = false;
            report.first_failure = index;
            report.failure = why;
        }
    };

    for (size_t k = 0; k < events.size(); ++k) {
        const GateEvent& ev = events[k];
        if (ev.kind == GateKind::S) {
            const double mass = dense_mass_c11(dense);
            if (mass > tol) {
                fail(k, "c=11 mass " + std::to_string(mass) + " before generation event");
            }
        }
        dense = apply_global(global_matrix(make_operator(ev), ev.targets, layout), dense);

        StepComparison step;
        step.dense_norm = dense_norm(dense);
        step.diff = dense_vs_sparse_diff(dense, snapshots[k]);
        report.max_diff = std::max(report.max_diff, step.diff);
        if (std::abs(step.dense_norm - 1.0) > tol) {
            fail(k, "dense norm " + std::to_string(step.dense_norm));
        }
        if (step.diff > tol) {
            fail(k, "sparse/dense difference " + std::to_string(step.diff));
        }
        report.steps.push_back(step);
    }

    report.final_stray_mass = dense_mass_outside_cleared_ancillae(dense);
    if (report.final_stray_mass > tol) {
        fail(events.size(), "final ancilla mass " + std::to_string(report.final_stray_mass));
    }
    return report;
}

inline CompareReport compare_step_by_step(const TrainingSet& ts, double tol = default_tolerance) {
    EncodeOptions options;
    options.trace = true;
    const EncodeReport run = encode(ts, options);
    return compare_trace(ts.layout, run.events, run.snapshots, tol);
}

} // namespace qamp
