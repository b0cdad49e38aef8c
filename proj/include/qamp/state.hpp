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
#include "qamp/layout.hpp"
#include "qamp/local_operator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace qamp {

/// Stored amplitudes at or below this magnitude are pruned.
constexpr double drop_tolerance = 1e-15;
/// Operational tolerance for norm and comparison checks.
constexpr double default_tolerance = 1e-12;

/// State vector keyed by basis index; only nonzero amplitudes are stored.
/// Entries iterate in ascending index order, which keeps every downstream
/// computation deterministic.
struct SparseState {
    RegisterLayout layout;
    std::map<uint64_t, Amplitude> entries;

    explicit SparseState(RegisterLayout l) : layout(std::move(l)) {}
};

inline SparseState zero_state(const RegisterLayout& layout) {
    SparseState state(layout);
    state.entries.emplace(0, Amplitude{1.0, 0.0});
    return state;
}

inline double l2_norm(const SparseState& state) {
    double sum = 0.0;
    for (const auto& [index, amp] : state.entries) {
        sum += std::norm(amp);
    }
    return std::sqrt(sum);
}

/// New state with `op` applied to the given ordered sites. Input is left
/// untouched; amplitudes at or below drop_tolerance are pruned from the result.
inline SparseState apply_local(const SparseState& state, const LocalOperator& op,
                               const std::vector<int>& targets) {
    const RegisterLayout& layout = state.layout;
    if (targets.size() != op.arity.size()) {
        throw validation_error("apply: operator arity " + std::to_string(op.arity.size()) + " but " +
                               std::to_string(targets.size()) + " target sites");
    }
    for (size_t a = 0; a < targets.size(); ++a) {
        const int site = targets[a];
        if (site < 0 || site >= layout.site_count()) {
            throw validation_error("apply: target site " + std::to_string(site) + " out of range");
        }
        if (layout.site_radix(site) != op.arity[a]) {
            throw validation_error("apply: site " + layout.site_name(site) + " has radix " +
                                   std::to_string(layout.site_radix(site)) + ", operator expects " +
                                   std::to_string(op.arity[a]));
        }
        for (size_t b = a + 1; b < targets.size(); ++b) {
            if (targets[b] == site) {
                throw validation_error("apply: duplicate target site " + layout.site_name(site));
            }
        }
    }

    const int dim = op.dim();
    // Mixed-radix weights of the operand tuple, first operand most significant.
    std::vector<int> sub_weights(targets.size(), 1);
    for (int a = static_cast<int>(targets.size()) - 2; a >= 0; --a) {
        sub_weights[static_cast<size_t>(a)] =
            sub_weights[static_cast<size_t>(a) + 1] * op.arity[static_cast<size_t>(a) + 1];
    }

    SparseState out(layout);
    for (const auto& [index, amp] : state.entries) {
        int sub = 0;
        uint64_t base = index;
        for (size_t a = 0; a < targets.size(); ++a) {
            const int d = layout.digit(index, targets[a]);
            sub += d * sub_weights[a];
            base -= static_cast<uint64_t>(d) * layout.site_weight(targets[a]);
        }
        for (int row = 0; row < dim; ++row) {
            const Amplitude& entry = op.at(row, sub);
            if (entry == Amplitude{0.0, 0.0}) {
                continue;
            }
            uint64_t out_index = base;
            int rest = row;
            for (size_t a = 0; a < targets.size(); ++a) {
                const int d = rest / sub_weights[a];
                rest %= sub_weights[a];
                out_index += static_cast<uint64_t>(d) * layout.site_weight(targets[a]);
            }
            out.entries[out_index] += entry * amp;
        }
    }

    for (auto it = out.entries.begin(); it != out.entries.end();) {
        if (std::abs(it->second) <= drop_tolerance) {
            it = out.entries.erase(it);
        } else {
            ++it;
        }
    }
    return out;
}

/// Largest |a_i - b_i| over the union of both supports.
inline double max_amplitude_diff(const SparseState& a, const SparseState& b) {
    if (a.layout != b.layout) {
        throw validation_error("compare: states have different layouts");
    }
    double worst = 0.0;
    auto ia = a.entries.begin();
    auto ib = b.entries.begin();
    while (ia != a.entries.end() || ib != b.entries.end()) {
        if (ib == b.entries.end() || (ia != a.entries.end() && ia->first < ib->first)) {
            worst = std::max(worst, std::abs(ia->second));
            ++ia;
        } else if (ia == a.entries.end() || ib->first < ia->first) {
            worst = std::max(worst, std::abs(ib->second));
            ++ib;
        } else {
            worst = std::max(worst, std::abs(ia->second - ib->second));
            ++ia;
            ++ib;
        }
    }
    return worst;
}

/// Probability mass on basis states whose label satisfies the predicate.
template <typename Predicate>
double mass_on(const SparseState& state, Predicate&& pred) {
    double sum = 0.0;
    for (const auto& [index, amp] : state.entries) {
        if (pred(label_of(state.layout, index))) {
            sum += std::norm(amp);
        }
    }
    return sum;
}

inline bool ancillae_clear(const BasisLabel& label) {
    if (label.c[0] != 0 || label.c[1] != 0) return false;
    return std::all_of(label.g.begin(), label.g.end(), [](int b) { return b == 0; });
}

/// Amplitudes re-keyed by the x digit string. Requires the g and c registers
/// to carry no amplitude mass beyond `tol`.
inline std::map<std::string, Amplitude> restrict_to_x(const SparseState& state,
                                                      double tol = default_tolerance) {
    const double stray = mass_on(state, [](const BasisLabel& l) { return !ancillae_clear(l); });
    if (stray > tol) {
        throw invariant_error("ancillae not restored: mass " + std::to_string(stray) +
                              " outside g=0,c=00");
    }
    std::map<std::string, Amplitude> out;
    for (const auto& [index, amp] : state.entries) {
        const BasisLabel label = label_of(state.layout, index);
        if (!ancillae_clear(label)) {
            continue;
        }
        out[digit_string(label.x)] += amp;
    }
    return out;
}

} // namespace qamp
