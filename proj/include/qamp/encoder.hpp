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
#include "qamp/state.hpp"
#include "qamp/training.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qamp {

/// One elementary gate application: kind, construction parameters, and the
/// register sites it acts on. Replaying a recorded event stream from the
/// all-zeros state reproduces an encoding exactly.
struct GateEvent {
    GateKind kind = GateKind::F;
    GateParams params;
    std::vector<int> targets;

    friend bool operator==(const GateEvent&, const GateEvent&) = default;
};

/// Rebuild the operator matrix described by an event.
inline LocalOperator make_operator(const GateEvent& event) {
    switch (event.kind) {
    case GateKind::F: return x_gate();
    case GateKind::F0: return anti_cshift_gate(event.params.radix);
    case GateKind::F1: return cnot_gate();
    case GateKind::S: return generation_gate(ClassLabel(event.params.s, event.params.N), event.params.p);
    case GateKind::A: return ccnot_gate(event.params.v1, event.params.v2, event.params.r1, event.params.r2);
    }
    throw validation_error("event: unknown gate kind");
}

inline SparseState apply_event(const SparseState& state, const GateEvent& event) {
    return apply_local(state, make_operator(event), event.targets);
}

// ---------------------------------------------------------------------------
// Gate schedules for the compound steps. Planners only enumerate events; the
// executor below (and the step wrappers) apply them.

/// Retarget the generator branch's x register from `prev` to `cur` and mark
/// its control register for generation. Each x site gets one shift event per
/// +1 rotation needed, so sites already in place produce no events.
inline std::vector<GateEvent> plan_flip(const RegisterLayout& layout, const std::vector<int>& prev,
                                        const std::vector<int>& cur) {
    const int n = layout.n();
    if (static_cast<int>(prev.size()) != n || static_cast<int>(cur.size()) != n) {
        throw validation_error("flip: input widths do not match layout");
    }
    const int N = layout.radix();
    std::vector<GateEvent> events;
    for (int j = n; j >= 1; --j) {
        const int from = prev[static_cast<size_t>(j - 1)];
        const int to = cur[static_cast<size_t>(j - 1)];
        if (from < 0 || from >= N || to < 0 || to >= N) {
            throw validation_error("flip: digit out of range at position " + std::to_string(j));
        }
        const int turns = ((to - from) % N + N) % N;
        GateEvent ev;
        ev.kind = GateKind::F0;
        ev.params.radix = N;
        ev.targets = {layout.c2_site(), layout.x_site(j)};
        for (int t = 0; t < turns; ++t) {
            events.push_back(ev);
        }
    }
    GateEvent mark;
    mark.kind = GateKind::F0;
    mark.params.radix = 2;
    mark.targets = {layout.c2_site(), layout.c1_site()};
    events.push_back(std::move(mark));
    return events;
}

/// Compute "x register equals z" into the last g qubit through a chain of
/// value-conditioned flips; n-1 events.
inline std::vector<GateEvent> plan_and(const RegisterLayout& layout, const std::vector<int>& z) {
    const int n = layout.n();
    if (static_cast<int>(z.size()) != n) {
        throw validation_error("and: input width does not match layout");
    }
    const int N = layout.radix();
    std::vector<GateEvent> events;
    GateEvent head;
    head.kind = GateKind::A;
    head.params.v1 = z[0];
    head.params.v2 = z[1];
    head.params.r1 = N;
    head.params.r2 = N;
    head.targets = {layout.x_site(1), layout.x_site(2), layout.g_site(1)};
    events.push_back(std::move(head));
    for (int k = 3; k <= n; ++k) {
        GateEvent link;
        link.kind = GateKind::A;
        link.params.v1 = z[static_cast<size_t>(k - 1)];
        link.params.v2 = 1;
        link.params.r1 = N;
        link.params.r2 = 2;
        link.targets = {layout.x_site(k), layout.g_site(k - 2), layout.g_site(k - 1)};
        events.push_back(std::move(link));
    }
    return events;
}

/// The same gates as plan_and in exactly reversed order; every gate is its
/// own inverse, so this undoes the match chain.
inline std::vector<GateEvent> plan_and_dagger(const RegisterLayout& layout, const std::vector<int>& z) {
    std::vector<GateEvent> events = plan_and(layout, z);
    std::reverse(events.begin(), events.end());
    return events;
}

/// Flip c1 on branches whose match bit g_{n-1} is set: the freshly generated
/// branch becomes permanent and the generator returns to idle.
inline GateEvent plan_save(const RegisterLayout& layout) {
    GateEvent ev;
    ev.kind = GateKind::F1;
    ev.targets = {layout.g_site(layout.n() - 1), layout.c1_site()};
    return ev;
}

inline GateEvent plan_generation(const RegisterLayout& layout, const ClassLabel& cls, int p) {
    GateEvent ev;
    ev.kind = GateKind::S;
    ev.params.s = cls.s;
    ev.params.p = p;
    ev.params.N = cls.N;
    ev.targets = {layout.c1_site(), layout.c2_site()};
    return ev;
}

/// The closing c2 flip that returns every permanent branch to c=00.
inline GateEvent plan_final_flip(const RegisterLayout& layout) {
    GateEvent ev;
    ev.kind = GateKind::F;
    ev.targets = {layout.c2_site()};
    return ev;
}

// ---------------------------------------------------------------------------
// Step wrappers: apply one compound step and return the new state plus the
// events it took.

struct StepResult {
    SparseState state;
    std::vector<GateEvent> events;
};

namespace detail {

inline StepResult run_events(const SparseState& state, std::vector<GateEvent> events) {
    StepResult result{state, std::move(events)};
    for (const GateEvent& ev : result.events) {
        result.state = apply_event(result.state, ev);
    }
    return result;
}

} // namespace detail

inline StepResult flip_step(const SparseState& state, const std::vector<int>& prev,
                            const std::vector<int>& cur) {
    return detail::run_events(state, plan_flip(state.layout, prev, cur));
}

inline StepResult and_step(const SparseState& state, const std::vector<int>& z) {
    return detail::run_events(state, plan_and(state.layout, z));
}

inline StepResult and_dagger_step(const SparseState& state, const std::vector<int>& z) {
    return detail::run_events(state, plan_and_dagger(state.layout, z));
}

inline StepResult save_step(const SparseState& state) {
    return detail::run_events(state, {plan_save(state.layout)});
}

// ---------------------------------------------------------------------------
// Full encoding.

struct EncodeOptions {
    /// Keep a state snapshot after every event.
    bool trace = false;
    /// Runtime checks after every event. Defaults to on for n <= 6.
    std::optional<bool> check_invariants;
};

/// Result of an encoding run. op_count excludes the initial state
/// preparation; replaying `events` from the all-zeros state reproduces
/// `final_state` bit for bit.
struct EncodeReport {
    SparseState final_state;
    uint64_t op_count = 0;
    std::vector<GateEvent> events;
    std::vector<SparseState> snapshots;
};

/// Upper bound on the elementary operations an encoding takes:
/// (N+1)mn + m + 1, which for N=2 is m(3n+1) + 1.
inline uint64_t op_count_bound(int n, int N, int m) {
    return static_cast<uint64_t>(N + 1) * static_cast<uint64_t>(m) * static_cast<uint64_t>(n) +
           static_cast<uint64_t>(m) + 1;
}

/// The target state directly: amplitude phase(s_i)/sqrt(m) on each
/// |z_i, 0, 00> and nothing anywhere else.
inline SparseState expected_state(const TrainingSet& ts) {
    SparseState state(ts.layout);
    const double scale = 1.0 / std::sqrt(static_cast<double>(ts.m()));
    for (const TrainingExample& ex : ts.examples) {
        BasisLabel label;
        label.x = ex.z;
        label.g.assign(static_cast<size_t>(ts.layout.g_width()), 0);
        label.c = {0, 0};
        state.entries[index_of(ts.layout, label)] = ex.cls.phase() * scale;
    }
    return state;
}

/// Run the full gate schedule: for each example, retarget the generator,
/// split off the example's branch with the matching phase, mark it via the
/// g chain, save it as permanent, and unwind the chain; one closing c2 flip
/// returns all ancillae to zero.
inline EncodeReport encode(const TrainingSet& ts, const EncodeOptions& options = {}) {
    const RegisterLayout& layout = ts.layout;
    const int n = layout.n();
    const int m = ts.m();
    if (m < 1) {
        throw validation_error("encode: training set is empty");
    }
    const bool check = options.check_invariants.value_or(n <= 6);

    EncodeReport report{zero_state(layout), 0, {}, {}};
    SparseState& state = report.final_state;

    auto describe = [&](const GateEvent& ev) {
        std::string text = gate_name(ev.kind) + "(";
        for (size_t t = 0; t < ev.targets.size(); ++t) {
            text += (t ? "," : "") + layout.site_name(ev.targets[t]);
        }
        return text + ")";
    };

    auto run = [&](const GateEvent& ev) {
        state = apply_event(state, ev);
        report.events.push_back(ev);
        if (options.trace) {
            report.snapshots.push_back(state);
        }
        if (check) {
            const double norm = l2_norm(state);
            if (std::abs(norm - 1.0) > default_tolerance) {
                throw invariant_error("encode: norm " + std::to_string(norm) + " after event " +
                                      std::to_string(report.events.size() - 1) + " " +
                                      describe(ev));
            }
        }
    };

    auto entry_has_c11 = [&](uint64_t index) {
        return layout.digit(index, layout.c1_site()) == 1 && layout.digit(index, layout.c2_site()) == 1;
    };

    std::vector<int> prev(static_cast<size_t>(n), 0);
    for (int i = 1; i <= m; ++i) {
        const TrainingExample& ex = ts.examples[static_cast<size_t>(i - 1)];
        const int p = m - i + 1;

        for (const GateEvent& ev : plan_flip(layout, prev, ex.z)) {
            run(ev);
        }
        if (check) {
            for (const auto& [index, amp] : state.entries) {
                if (entry_has_c11(index)) {
                    throw invariant_error("encode: branch with c=11 present before generation event " +
                                          std::to_string(report.events.size()));
                }
            }
        }
        run(plan_generation(layout, ex.cls, p));
        for (const GateEvent& ev : plan_and(layout, ex.z)) {
            run(ev);
        }
        run(plan_save(layout));
        for (const GateEvent& ev : plan_and_dagger(layout, ex.z)) {
            run(ev);
        }
        if (check && state.entries.size() > static_cast<size_t>(i) + 1) {
            throw invariant_error("encode: support " + std::to_string(state.entries.size()) +
                                  " exceeds " + std::to_string(i + 1) + " after example " +
                                  std::to_string(i));
        }
        prev = ex.z;
    }
    run(plan_final_flip(layout));

    report.op_count = report.events.size();
    return report;
}

} // namespace qamp
