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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qamp {

/// Dimensions and site ordering of a register built from three groups:
/// an n-site data register x (radix N each), an (n-1)-qubit scratch
/// register g, and a two-qubit control register c.
///
/// Sites are ordered x1..xn, g1..g_{n-1}, c1, c2 with x1 most significant
/// in the mixed-radix basis index, so total_dim = N^n * 2^(n+1).
class RegisterLayout {
public:
    RegisterLayout(int n, int radix) : n_(n), radix_(radix) {
        if (n < 2) {
            throw validation_error("layout: n must be >= 2 (got " + std::to_string(n) +
                                   "); the scratch register needs at least one qubit");
        }
        if (radix < 2) {
            throw validation_error("layout: radix must be >= 2 (got " + std::to_string(radix) + ")");
        }
        if (radix > 36) {
            throw validation_error("layout: radix must be <= 36 (got " + std::to_string(radix) +
                                   "); digit strings use one character per site");
        }
        site_radices_.assign(static_cast<size_t>(2 * n + 1), 2);
        for (int j = 0; j < n; ++j) {
            site_radices_[static_cast<size_t>(j)] = radix;
        }
        // Weight of a site = product of all radices to its right.
        weights_.assign(site_radices_.size(), 1);
        total_dim_ = 1;
        for (int i = static_cast<int>(site_radices_.size()) - 1; i >= 0; --i) {
            weights_[static_cast<size_t>(i)] = total_dim_;
            const uint64_t r = static_cast<uint64_t>(site_radices_[static_cast<size_t>(i)]);
            if (total_dim_ > UINT64_C(1) << 62 || total_dim_ * r / r != total_dim_) {
                throw validation_error("layout: dimension overflow for n=" + std::to_string(n) +
                                       ", radix=" + std::to_string(radix));
            }
            total_dim_ *= r;
        }
    }

    int n() const { return n_; }
    int radix() const { return radix_; }
    int g_width() const { return n_ - 1; }
    int c_width() const { return 2; }
    int site_count() const { return 2 * n_ + 1; }
    uint64_t total_dim() const { return total_dim_; }
    const std::vector<int>& site_radices() const { return site_radices_; }

    // Site indices, 1-based register coordinates.
    int x_site(int j) const { return j - 1; }
    int g_site(int k) const { return n_ + k - 1; }
    int c1_site() const { return 2 * n_ - 1; }
    int c2_site() const { return 2 * n_; }

    int site_radix(int site) const { return site_radices_[static_cast<size_t>(site)]; }
    uint64_t site_weight(int site) const { return weights_[static_cast<size_t>(site)]; }

    /// Digit held at `site` within a basis index.
    int digit(uint64_t index, int site) const {
        return static_cast<int>((index / weights_[static_cast<size_t>(site)]) %
                                static_cast<uint64_t>(site_radices_[static_cast<size_t>(site)]));
    }

    /// Symbolic name "x3", "g1", "c2" used in netlists and traces.
    std::string site_name(int site) const {
        if (site < 0 || site >= site_count()) {
            throw validation_error("layout: site index " + std::to_string(site) + " out of range");
        }
        if (site < n_) {
            return "x" + std::to_string(site + 1);
        }
        if (site < 2 * n_ - 1) {
            return "g" + std::to_string(site - n_ + 1);
        }
        return site == c1_site() ? "c1" : "c2";
    }

    /// Inverse of site_name.
    int site_named(const std::string& name) const {
        if (name.size() < 2) {
            throw validation_error("layout: bad site name '" + name + "'");
        }
        int k = 0;
        try {
            k = std::stoi(name.substr(1));
        } catch (const std::exception&) {
            throw validation_error("layout: bad site name '" + name + "'");
        }
        switch (name[0]) {
        case 'x':
            if (k < 1 || k > n_) break;
            return x_site(k);
        case 'g':
            if (k < 1 || k > g_width()) break;
            return g_site(k);
        case 'c':
            if (k < 1 || k > 2) break;
            return k == 1 ? c1_site() : c2_site();
        default:
            break;
        }
        throw validation_error("layout: site '" + name + "' does not exist for n=" + std::to_string(n_));
    }

    friend bool operator==(const RegisterLayout& a, const RegisterLayout& b) {
        return a.n_ == b.n_ && a.radix_ == b.radix_;
    }
    friend bool operator!=(const RegisterLayout& a, const RegisterLayout& b) { return !(a == b); }

private:
    int n_;
    int radix_;
    std::vector<int> site_radices_;
    std::vector<uint64_t> weights_;
    uint64_t total_dim_;
};

inline RegisterLayout make_layout(int n, int radix) { return RegisterLayout(n, radix); }

/// Per-register digits of one basis state: x digits, g bits, and the
/// control pair (c1, c2).
struct BasisLabel {
    std::vector<int> x;
    std::vector<int> g;
    std::array<int, 2> c{0, 0};

    friend bool operator==(const BasisLabel& a, const BasisLabel& b) {
        return a.x == b.x && a.g == b.g && a.c == b.c;
    }
};

inline char digit_char(int d) { return d < 10 ? static_cast<char>('0' + d) : static_cast<char>('a' + d - 10); }

inline int char_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'z') return ch - 'a' + 10;
    return -1;
}

inline uint64_t index_of(const RegisterLayout& layout, const BasisLabel& label) {
    if (static_cast<int>(label.x.size()) != layout.n() ||
        static_cast<int>(label.g.size()) != layout.g_width()) {
        throw validation_error("label: register widths do not match layout");
    }
    uint64_t index = 0;
    int site = 0;
    auto pack = [&](int d) {
        const int r = layout.site_radix(site);
        if (d < 0 || d >= r) {
            throw validation_error("label: digit " + std::to_string(d) + " out of range for site " +
                                   layout.site_name(site) + " (radix " + std::to_string(r) + ")");
        }
        index += static_cast<uint64_t>(d) * layout.site_weight(site);
        ++site;
    };
    for (int d : label.x) pack(d);
    for (int d : label.g) pack(d);
    pack(label.c[0]);
    pack(label.c[1]);
    return index;
}

inline BasisLabel label_of(const RegisterLayout& layout, uint64_t index) {
    if (index >= layout.total_dim()) {
        throw validation_error("label: index " + std::to_string(index) + " out of range (dim " +
                               std::to_string(layout.total_dim()) + ")");
    }
    BasisLabel label;
    label.x.resize(static_cast<size_t>(layout.n()));
    label.g.resize(static_cast<size_t>(layout.g_width()));
    for (int j = 0; j < layout.n(); ++j) {
        label.x[static_cast<size_t>(j)] = layout.digit(index, layout.x_site(j + 1));
    }
    for (int k = 0; k < layout.g_width(); ++k) {
        label.g[static_cast<size_t>(k)] = layout.digit(index, layout.g_site(k + 1));
    }
    label.c[0] = layout.digit(index, layout.c1_site());
    label.c[1] = layout.digit(index, layout.c2_site());
    return label;
}

inline std::vector<int> parse_digits(const std::string& text, int radix) {
    std::vector<int> digits;
    digits.reserve(text.size());
    for (char ch : text) {
        const int d = char_digit(ch);
        if (d < 0 || d >= radix) {
            throw validation_error("digit '" + std::string(1, ch) + "' out of range for radix " +
                                   std::to_string(radix));
        }
        digits.push_back(d);
    }
    return digits;
}

inline std::string digit_string(const std::vector<int>& digits) {
    std::string s;
    s.reserve(digits.size());
    for (int d : digits) s.push_back(digit_char(d));
    return s;
}

/// Build a label from "x,g,c" digit strings, e.g. ("01", "0", "10").
inline BasisLabel make_label(const RegisterLayout& layout, const std::string& x, const std::string& g,
                             const std::string& c) {
    if (static_cast<int>(x.size()) != layout.n() || static_cast<int>(g.size()) != layout.g_width() ||
        c.size() != 2) {
        throw validation_error("label: digit string widths do not match layout");
    }
    BasisLabel label;
    label.x = parse_digits(x, layout.radix());
    label.g = parse_digits(g, 2);
    const auto cd = parse_digits(c, 2);
    label.c = {cd[0], cd[1]};
    return label;
}

inline uint64_t basis_index(const RegisterLayout& layout, const std::string& x, const std::string& g,
                            const std::string& c) {
    return index_of(layout, make_label(layout, x, g, c));
}

} // namespace qamp
