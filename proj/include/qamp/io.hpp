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
#include "qamp/training.hpp"

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

// Text formats. Every parser is total: each line either contributes to the
// result or raises a validation error that names the line.

namespace qamp {

/// 17 significant digits round-trip a double exactly.
inline std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

inline std::string format_signed(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%+.17g", value);
    return buffer;
}

namespace detail {

inline int parse_int_token(const std::string& token, const std::string& where) {
    size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(token, &consumed);
    } catch (const std::exception&) {
        throw validation_error(where + ": expected an integer, got '" + token + "'");
    }
    if (consumed != token.size()) {
        throw validation_error(where + ": expected an integer, got '" + token + "'");
    }
    return value;
}

/// Strips a trailing CR, a '#' comment, and surrounding whitespace.
inline std::string clean_line(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) return {};
    const size_t last = line.find_last_not_of(" \t");
    return line.substr(first, last - first + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> fields;
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Training sets

/// 'line 1: n N', then one 'z s' line per example. '#' starts a comment.
inline TrainingSet parse_training_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    int n = 0;
    int radix = 0;
    std::vector<RawExample> raw;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = detail::clean_line(line);
        if (content.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        const std::vector<std::string> fields = detail::split_fields(content);
        if (!have_header) {
            if (fields.size() != 2) {
                throw validation_error(where + ": expected header 'n N'");
            }
            n = detail::parse_int_token(fields[0], where);
            radix = detail::parse_int_token(fields[1], where);
            have_header = true;
        } else {
            if (fields.size() != 2) {
                throw validation_error(where + ": expected 'z s'");
            }
            raw.push_back(RawExample{fields[0], detail::parse_int_token(fields[1], where)});
        }
    }
    if (!have_header) {
        throw validation_error("line 1: missing header 'n N'");
    }
    return canonicalize(raw, n, radix);
}

/// Output token convention: binary classes serialize as +-1, every other
/// radix as the canonical digit. parse_training_* accept both spellings for
/// binary, so serialize/parse round-trips are stable.
inline std::string class_token(const ClassLabel& cls) {
    if (cls.N == 2) return cls.s == 0 ? "1" : "-1";
    return std::to_string(cls.s);
}

inline std::string serialize_training_text(const TrainingSet& ts) {
    std::string out = std::to_string(ts.layout.n()) + " " + std::to_string(ts.layout.radix()) + "\n";
    for (const TrainingExample& ex : ts.examples) {
        out += digit_string(ex.z) + " " + class_token(ex.cls) + "\n";
    }
    return out;
}

inline TrainingSet parse_training_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(std::string("structured input: ") + e.what());
    }
    if (!doc.is_object()) {
        throw validation_error("structured input: top level must be an object");
    }
    auto require_int = [&](const nlohmann::json& node, const std::string& key) -> int {
        if (!node.contains(key) || !node[key].is_number_integer()) {
            throw validation_error("structured input: missing integer field '" + key + "'");
        }
        return node[key].get<int>();
    };
    const int n = require_int(doc, "n");
    const int radix = require_int(doc, "N");
    if (!doc.contains("examples") || !doc["examples"].is_array()) {
        throw validation_error("structured input: missing array field 'examples'");
    }
    std::vector<RawExample> raw;
    for (const nlohmann::json& item : doc["examples"]) {
        if (!item.is_object() || !item.contains("input") || !item["input"].is_string()) {
            throw validation_error("structured input: each example needs a string 'input'");
        }
        raw.push_back(RawExample{item["input"].get<std::string>(), require_int(item, "output")});
    }
    return canonicalize(raw, n, radix);
}

inline std::string serialize_training_json(const TrainingSet& ts) {
    nlohmann::ordered_json doc;
    doc["n"] = ts.layout.n();
    doc["N"] = ts.layout.radix();
    doc["examples"] = nlohmann::ordered_json::array();
    for (const TrainingExample& ex : ts.examples) {
        nlohmann::ordered_json item;
        item["input"] = digit_string(ex.z);
        item["output"] = ex.cls.N == 2 ? (ex.cls.s == 0 ? 1 : -1) : ex.cls.s;
        doc["examples"].push_back(item);
    }
    return doc.dump(2) + "\n";
}

/// Structured files start with '{'; everything else is the line format.
inline TrainingSet parse_training(const std::string& text) {
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        return parse_training_json(text);
    }
    return parse_training_text(text);
}

// ---------------------------------------------------------------------------
// Amplitude dumps

/// One row per x pattern, ascending: pattern, re, im, magnitude, phase.
inline std::string format_amplitude_dump(const std::map<std::string, Amplitude>& marginal) {
    std::string out = "# x re im magnitude phase\n";
    for (const auto& [pattern, amp] : marginal) {
        out += pattern + " " + format_double(amp.real()) + " " + format_double(amp.imag()) + " " +
               format_double(std::abs(amp)) + " " + format_double(std::arg(amp)) + "\n";
    }
    return out;
}

inline std::map<std::string, Amplitude> parse_amplitude_dump(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::map<std::string, Amplitude> marginal;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string content = detail::clean_line(line);
        if (content.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        const std::vector<std::string> fields = detail::split_fields(content);
        if (fields.size() != 5) {
            throw validation_error(where + ": expected 'x re im magnitude phase'");
        }
        double re = 0.0;
        double im = 0.0;
        try {
            size_t c1 = 0;
            size_t c2 = 0;
            re = std::stod(fields[1], &c1);
            im = std::stod(fields[2], &c2);
            if (c1 != fields[1].size() || c2 != fields[2].size()) {
                throw validation_error(where + ": malformed amplitude");
            }
        } catch (const validation_error&) {
            throw;
        } catch (const std::exception&) {
            throw validation_error(where + ": malformed amplitude");
        }
        if (!marginal.emplace(fields[0], Amplitude{re, im}).second) {
            throw validation_error(where + ": duplicate pattern '" + fields[0] + "'");
        }
    }
    return marginal;
}

// ---------------------------------------------------------------------------
// Netlists

inline nlohmann::ordered_json netlist_record(const RegisterLayout& layout, const GateEvent& ev) {
    nlohmann::ordered_json record;
    record["gate"] = gate_name(ev.kind);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    switch (ev.kind) {
    case GateKind::F:
    case GateKind::F1:
        break;
    case GateKind::F0:
        params["radix"] = ev.params.radix;
        break;
    case GateKind::S:
        params["s"] = ev.params.s;
        params["p"] = ev.params.p;
        params["N"] = ev.params.N;
        break;
    case GateKind::A:
        params["v1"] = ev.params.v1;
        params["v2"] = ev.params.v2;
        params["r1"] = ev.params.r1;
        params["r2"] = ev.params.r2;
        break;
    }
    record["params"] = params;
    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (int site : ev.targets) {
        targets.push_back(layout.site_name(site));
    }
    record["targets"] = targets;
    return record;
}

/// One record per line, in application order. No other lines, so the line
/// count equals the operation count.
inline std::string serialize_netlist(const RegisterLayout& layout, const std::vector<GateEvent>& events) {
    std::string out;
    for (const GateEvent& ev : events) {
        out += netlist_record(layout, ev).dump() + "\n";
    }
    return out;
}

struct ParsedNetlist {
    RegisterLayout layout;
    std::vector<GateEvent> events;
};

namespace detail {

struct RawNetlistRecord {
    GateKind kind = GateKind::F;
    GateParams params;
    std::vector<std::string> targets;
};

inline RawNetlistRecord parse_netlist_record(const std::string& line, int line_no) {
    const std::string where = "netlist line " + std::to_string(line_no);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
        throw validation_error(where + ": " + e.what());
    }
    if (!doc.is_object() || doc.size() != 3 || !doc.contains("gate") || !doc.contains("params") ||
        !doc.contains("targets")) {
        throw validation_error(where + ": record needs exactly gate, params, targets");
    }
    if (!doc["gate"].is_string() || !doc["params"].is_object() || !doc["targets"].is_array()) {
        throw validation_error(where + ": malformed record fields");
    }

    RawNetlistRecord record;
    record.kind = gate_kind(doc["gate"].get<std::string>());

    const nlohmann::json& params = doc["params"];
    auto need = [&](const char* key) -> int {
        if (!params.contains(key) || !params[key].is_number_integer()) {
            throw validation_error(where + ": missing integer parameter '" + key + "'");
        }
        return params[key].get<int>();
    };
    size_t expected_params = 0;
    size_t expected_targets = 0;
    switch (record.kind) {
    case GateKind::F:
        expected_targets = 1;
        break;
    case GateKind::F1:
        expected_targets = 2;
        break;
    case GateKind::F0:
        record.params.radix = need("radix");
        expected_params = 1;
        expected_targets = 2;
        break;
    case GateKind::S:
        record.params.s = need("s");
        record.params.p = need("p");
        record.params.N = need("N");
        expected_params = 3;
        expected_targets = 2;
        break;
    case GateKind::A:
        record.params.v1 = need("v1");
        record.params.v2 = need("v2");
        record.params.r1 = need("r1");
        record.params.r2 = need("r2");
        expected_params = 4;
        expected_targets = 3;
        break;
    }
    if (params.size() != expected_params) {
        throw validation_error(where + ": unexpected parameters for gate " + gate_name(record.kind));
    }
    if (doc["targets"].size() != expected_targets) {
        throw validation_error(where + ": gate " + gate_name(record.kind) + " takes " +
                               std::to_string(expected_targets) + " targets");
    }
    for (const nlohmann::json& t : doc["targets"]) {
        if (!t.is_string()) {
            throw validation_error(where + ": targets must be site names");
        }
        record.targets.push_back(t.get<std::string>());
    }
    return record;
}

/// A netlist fixes its own layout: AND records carry the x radix as r1, and
/// the widest x/g site name fixes n.
inline RegisterLayout infer_netlist_layout(const std::vector<RawNetlistRecord>& records) {
    int max_x = 0;
    int max_g = 0;
    int radix = 0;
    for (const RawNetlistRecord& record : records) {
        if (record.kind == GateKind::A && radix == 0) {
            radix = record.params.r1;
        }
        for (const std::string& name : record.targets) {
            if (name.size() < 2 || (name[0] != 'x' && name[0] != 'g')) continue;
            const int k = parse_int_token(name.substr(1), "netlist site '" + name + "'");
            if (name[0] == 'x') {
                max_x = std::max(max_x, k);
            } else {
                max_g = std::max(max_g, k);
            }
        }
    }
    const int n = std::max(max_x, max_g + 1);
    if (n < 2 || radix == 0) {
        throw validation_error("netlist: cannot infer the register layout (no AND records)");
    }
    return make_layout(n, radix);
}

} // namespace detail

inline ParsedNetlist parse_netlist(const std::string& text,
                                   std::optional<RegisterLayout> layout = std::nullopt) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<detail::RawNetlistRecord> records;
    std::vector<int> line_numbers;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        records.push_back(detail::parse_netlist_record(line, line_no));
        line_numbers.push_back(line_no);
    }
    if (records.empty()) {
        throw validation_error("netlist: no records");
    }

    ParsedNetlist parsed{layout ? *layout : detail::infer_netlist_layout(records), {}};
    parsed.events.reserve(records.size());
    for (size_t k = 0; k < records.size(); ++k) {
        GateEvent ev;
        ev.kind = records[k].kind;
        ev.params = records[k].params;
        for (const std::string& name : records[k].targets) {
            try {
                ev.targets.push_back(parsed.layout.site_named(name));
            } catch (const validation_error& e) {
                throw validation_error("netlist line " + std::to_string(line_numbers[k]) + ": " +
                                       e.what());
            }
        }
        parsed.events.push_back(std::move(ev));
    }
    return parsed;
}

// ---------------------------------------------------------------------------
// Human-readable descriptions

inline std::string describe_event(const RegisterLayout& layout, const GateEvent& ev) {
    std::string text = gate_name(ev.kind);
    switch (ev.kind) {
    case GateKind::F:
    case GateKind::F1:
        break;
    case GateKind::F0:
        text += "(radix=" + std::to_string(ev.params.radix) + ")";
        break;
    case GateKind::S:
        text += "(s=" + std::to_string(ev.params.s) + ",p=" + std::to_string(ev.params.p) +
                ",N=" + std::to_string(ev.params.N) + ")";
        break;
    case GateKind::A:
        text += "(v1=" + std::to_string(ev.params.v1) + ",v2=" + std::to_string(ev.params.v2) +
                ",r1=" + std::to_string(ev.params.r1) + ",r2=" + std::to_string(ev.params.r2) + ")";
        break;
    }
    text += " @ ";
    for (size_t a = 0; a < ev.targets.size(); ++a) {
        if (a > 0) text += ",";
        text += layout.site_name(ev.targets[a]);
    }
    return text;
}

/// Signed amplitude pair next to the |x,g,c> label, one basis state per line.
inline std::string format_state_lines(const SparseState& state, const std::string& indent = "  ") {
    std::string out;
    for (const auto& [index, amp] : state.entries) {
        const BasisLabel label = label_of(state.layout, index);
        out += indent + format_signed(amp.real()) + " " + format_signed(amp.imag()) + " |" +
               digit_string(label.x) + "," + digit_string(label.g) + "," +
               std::string{digit_char(label.c[0]), digit_char(label.c[1])} + ">\n";
    }
    return out;
}

inline std::string format_trace(const RegisterLayout& layout, const std::vector<GateEvent>& events,
                                const std::vector<SparseState>& snapshots) {
    if (events.size() != snapshots.size()) {
        throw validation_error("trace: snapshot count does not match event count");
    }
    std::string out = "# trace: " + std::to_string(events.size()) + " events\n";
    for (size_t k = 0; k < events.size(); ++k) {
        out += "event " + std::to_string(k + 1) + ": " + describe_event(layout, events[k]) + "\n";
        out += format_state_lines(snapshots[k]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Histograms

inline std::string format_histogram(const std::map<std::string, uint64_t>& histogram, uint64_t shots,
                                    uint64_t seed) {
    std::string out = "# shots " + std::to_string(shots) + " seed " + std::to_string(seed) + "\n";
    for (const auto& [pattern, count] : histogram) {
        out += pattern + " " + std::to_string(count) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw validation_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw validation_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw validation_error("failed writing '" + path + "'");
    }
}

} // namespace qamp
