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

#include "qamp/encoder.hpp"
#include "qamp/gates.hpp"
#include "qamp/io.hpp"
#include "qamp/oracle.hpp"
#include "qamp/sampling.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace qamp;

std::string format_entry(const Amplitude& amp) {
    if (amp.imag() == 0.0) return format_double(amp.real());
    std::string text = format_double(amp.real());
    text += amp.imag() < 0.0 ? "-" : "+";
    text += format_double(std::abs(amp.imag())) + "i";
    return text;
}

void print_matrix(const std::string& title, const LocalOperator& op) {
    const int dim = op.dim();
    std::cout << title << " (" << dim << "x" << dim << ")\n";
    for (int row = 0; row < dim; ++row) {
        for (int col = 0; col < dim; ++col) {
            std::cout << (col > 0 ? " " : "") << format_entry(op.at(row, col));
        }
        std::cout << "\n";
    }
}

void emit_dump(const std::string& dump, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << dump;
    } else {
        write_file(out_path, dump);
    }
}

int run_encode(const std::string& path, const std::string& out_path, const std::string& trace_path,
               const std::string& netlist_path, double tol) {
    const TrainingSet ts = parse_training(read_file(path));
    EncodeOptions options;
    options.trace = !trace_path.empty();
    const EncodeReport report = encode(ts, options);
    emit_dump(format_amplitude_dump(restrict_to_x(report.final_state, tol)), out_path);
    if (!netlist_path.empty()) {
        write_file(netlist_path, serialize_netlist(ts.layout, report.events));
    }
    if (!trace_path.empty()) {
        write_file(trace_path, format_trace(ts.layout, report.events, report.snapshots));
    }
    return 0;
}

int run_verify(const std::string& path, double tol, bool steps) {
    const TrainingSet ts = parse_training(read_file(path));
    EncodeOptions options;
    options.trace = true;
    const EncodeReport report = encode(ts, options);
    const CompareReport cmp = compare_trace(ts.layout, report.events, report.snapshots, tol);
    const double final_diff = max_amplitude_diff(report.final_state, expected_state(ts));
    const bool pass = cmp.pass && final_diff <= tol;

    if (steps) {
        for (size_t k = 0; k < report.events.size(); ++k) {
            std::cout << "event " << (k + 1) << ": diff " << format_double(cmp.steps[k].diff)
                      << " norm " << format_double(cmp.steps[k].dense_norm) << " "
                      << describe_event(ts.layout, report.events[k]) << "\n";
        }
    }
    std::cout << "events            " << report.op_count << "\n";
    std::cout << "max step diff     " << format_double(cmp.max_diff) << "\n";
    std::cout << "final state diff  " << format_double(final_diff) << "\n";
    std::cout << "final stray mass  " << format_double(cmp.final_stray_mass) << "\n";
    std::cout << "tolerance         " << format_double(tol) << "\n";
    std::cout << "result            " << (pass ? "pass" : "FAIL") << "\n";
    if (!pass) {
        if (cmp.first_failure != no_failure) {
            std::cerr << "error: first failing event " << (cmp.first_failure + 1) << ": "
                      << cmp.failure << "\n";
        } else {
            std::cerr << "error: final state differs from the expected superposition by "
                      << format_double(final_diff) << "\n";
        }
        return 2;
    }
    return 0;
}

int run_sample(const std::string& path, uint64_t shots, uint64_t seed) {
    const TrainingSet ts = parse_training(read_file(path));
    const EncodeReport report = encode(ts);
    std::cout << format_histogram(sample_x(report.final_state, shots, seed), shots, seed);
    return 0;
}

int run_replay(const std::string& path, const std::string& out_path, double tol) {
    const ParsedNetlist parsed = parse_netlist(read_file(path));
    SparseState state = zero_state(parsed.layout);
    for (const GateEvent& ev : parsed.events) {
        state = apply_local(state, make_operator(ev), ev.targets);
    }
    emit_dump(format_amplitude_dump(restrict_to_x(state, tol)), out_path);
    return 0;
}

int run_gate_check(double tol) {
    size_t checked = 0;
    size_t failures = 0;
    double worst = 0.0;
    auto check = [&](const std::string& title, const LocalOperator& op) {
        const double residual = unitarity_residual(op);
        worst = std::max(worst, residual);
        ++checked;
        if (residual > tol) {
            ++failures;
            std::cout << "FAIL " << title << " residual " << format_double(residual) << "\n";
        }
    };

    check("F", x_gate());
    check("F1", cnot_gate());
    for (int radix = 2; radix <= 8; ++radix) {
        check("F0 radix=" + std::to_string(radix), anti_cshift_gate(radix));
        for (int s = 0; s < radix; ++s) {
            for (int p = 1; p <= 16; ++p) {
                check("S s=" + std::to_string(s) + " p=" + std::to_string(p) +
                          " N=" + std::to_string(radix),
                      generation_gate(ClassLabel(s, radix), p));
            }
        }
        for (int r2 : {radix, 2}) {
            for (int v1 = 0; v1 < radix; ++v1) {
                for (int v2 = 0; v2 < r2; ++v2) {
                    check("A v1=" + std::to_string(v1) + " v2=" + std::to_string(v2) +
                              " r1=" + std::to_string(radix) + " r2=" + std::to_string(r2),
                          ccnot_gate(v1, v2, radix, r2));
                }
            }
        }
    }

    std::cout << "checked " << checked << " matrices, max residual " << format_double(worst)
              << ", tolerance " << format_double(tol) << "\n";
    if (failures > 0) {
        std::cerr << "error: " << failures << " matrices failed the unitarity check\n";
        return 2;
    }
    std::cout << "result pass\n";
    return 0;
}

constexpr int param_unset = INT_MIN;

int run_gate_print(const std::string& gate, int radix, int s, int p, int v1, int v2, int r1, int r2) {
    auto need = [&](int value, const std::string& flag) {
        if (value == param_unset) {
            throw validation_error("gates: " + gate + " requires --" + flag);
        }
        return value;
    };
    const GateKind kind = gate_kind(gate);
    switch (kind) {
    case GateKind::F:
        print_matrix("F", x_gate());
        break;
    case GateKind::F1:
        print_matrix("F1", cnot_gate());
        break;
    case GateKind::F0: {
        const int r = need(radix, "N");
        print_matrix("F0 radix=" + std::to_string(r), anti_cshift_gate(r));
        break;
    }
    case GateKind::S: {
        const int r = need(radix, "N");
        int cls = need(s, "s");
        if (r >= 2) cls = ((cls % r) + r) % r;
        const int split = need(p, "p");
        print_matrix("S s=" + std::to_string(cls) + " p=" + std::to_string(split) +
                         " N=" + std::to_string(r),
                     generation_gate(ClassLabel(cls, r), split));
        break;
    }
    case GateKind::A: {
        const int a1 = need(v1, "v1");
        const int a2 = need(v2, "v2");
        const int b1 = need(r1, "r1");
        const int b2 = need(r2, "r2");
        print_matrix("A v1=" + std::to_string(a1) + " v2=" + std::to_string(a2) +
                         " r1=" + std::to_string(b1) + " r2=" + std::to_string(b2),
                     ccnot_gate(a1, a2, b1, b2));
        break;
    }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qamp: initialize a quantum register's amplitude distribution from examples"};
    app.require_subcommand(1);

    std::string in_path;
    std::string out_path;
    std::string trace_path;
    std::string netlist_path;
    double tol = default_tolerance;
    bool steps = false;
    uint64_t shots = 100000;
    uint64_t seed = 0;
    bool check = false;
    std::string gate;
    int radix = param_unset;
    int s = param_unset;
    int p = param_unset;
    int v1 = param_unset;
    int v2 = param_unset;
    int r1 = param_unset;
    int r2 = param_unset;

    CLI::App* cmd_encode = app.add_subcommand("encode", "Encode a training file and dump amplitudes");
    cmd_encode->add_option("file", in_path, "training file (text or structured)")->required();
    cmd_encode->add_option("--out", out_path, "write the amplitude dump here instead of stdout");
    cmd_encode->add_option("--trace", trace_path, "write per-event state snapshots to this file");
    cmd_encode->add_option("--netlist", netlist_path, "write the gate event stream to this file");
    cmd_encode->add_option("--tol", tol, "ancilla cleanup tolerance");

    CLI::App* cmd_verify = app.add_subcommand("verify", "Check the encoding against the dense oracle");
    cmd_verify->add_option("file", in_path, "training file (text or structured)")->required();
    cmd_verify->add_option("--tol", tol, "comparison tolerance");
    cmd_verify->add_flag("--steps", steps, "print one row per event");

    CLI::App* cmd_sample = app.add_subcommand("sample", "Measure the encoded state repeatedly");
    cmd_sample->add_option("file", in_path, "training file (text or structured)")->required();
    cmd_sample->add_option("--shots", shots, "number of measurements");
    cmd_sample->add_option("--seed", seed, "random seed");

    CLI::App* cmd_replay = app.add_subcommand("replay", "Re-run a netlist from |0...0> and dump amplitudes");
    cmd_replay->add_option("file", in_path, "netlist file")->required();
    cmd_replay->add_option("--out", out_path, "write the amplitude dump here instead of stdout");
    cmd_replay->add_option("--tol", tol, "ancilla cleanup tolerance");

    CLI::App* cmd_gates = app.add_subcommand("gates", "Print gate matrices or sweep them for unitarity");
    cmd_gates->add_flag("--check", check, "run the unitarity sweep (N <= 8, p <= 16)");
    cmd_gates->add_option("--gate", gate, "gate to print: F, F0, F1, S, A");
    cmd_gates->add_option("--N", radix, "qudit radix (also the F0 shift radix)");
    cmd_gates->add_option("--s", s, "class index for S (reduced mod N)");
    cmd_gates->add_option("--p", p, "remaining-example count for S");
    cmd_gates->add_option("--v1", v1, "first condition value for A");
    cmd_gates->add_option("--v2", v2, "second condition value for A");
    cmd_gates->add_option("--r1", r1, "first condition radix for A");
    cmd_gates->add_option("--r2", r2, "second condition radix for A");
    cmd_gates->add_option("--tol", tol, "unitarity tolerance for --check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (cmd_encode->parsed()) return run_encode(in_path, out_path, trace_path, netlist_path, tol);
        if (cmd_verify->parsed()) return run_verify(in_path, tol, steps);
        if (cmd_sample->parsed()) return run_sample(in_path, shots, seed);
        if (cmd_replay->parsed()) return run_replay(in_path, out_path, tol);
        if (cmd_gates->parsed()) {
            if (check) return run_gate_check(tol);
            if (gate.empty()) {
                throw validation_error("gates: pass --gate NAME or --check");
            }
            return run_gate_print(gate, radix, s, p, v1, v2, r1, r2);
        }
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
