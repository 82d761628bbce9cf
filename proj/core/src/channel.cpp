// wbslope - wideband-slope analysis of K-user Gaussian interference channels
// Copyright (C) 2026 the wbslope authors
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
// ------------------------------------------------------------------------

#include "wbslope/channel.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "wbslope/rng.hpp"

namespace wbslope {

namespace {

constexpr double kPi = std::numbers::pi;

std::string entry(const char* name, int j, int i) {
    std::ostringstream os;
    os << name << "[" << j + 1 << "][" << i + 1 << "]";
    return os.str();
}

void validate(const Channel& ch) {
    if (ch.k < 1)
        throw std::invalid_argument("make_channel: k must be at least 1");
    const std::size_t n = static_cast<std::size_t>(ch.k) * ch.k;
    if (ch.gain_sq.size() != n || ch.phase.size() != n)
        throw std::invalid_argument("make_channel: gain_sq and phase must have k*k entries");
    for (int j = 0; j < ch.k; ++j) {
        for (int i = 0; i < ch.k; ++i) {
            const double g = ch.gain(j, i);
            const double p = ch.phase_at(j, i);
            if (!std::isfinite(g) || g < 0.0)
                throw std::invalid_argument("make_channel: " + entry("gain_sq", j, i) +
                                            " must be finite and nonnegative");
            if (j == i && g <= 0.0)
                throw std::invalid_argument("make_channel: direct " + entry("gain_sq", j, i) +
                                            " must be strictly positive");
            if (!std::isfinite(p) || p < -kPi || p >= kPi)
                throw std::invalid_argument("make_channel: " + entry("phase", j, i) +
                                            " must lie in [-pi, pi)");
            if (j == i && p != 0.0)
                throw std::invalid_argument("make_channel: diagonal " + entry("phase", j, i) +
                                            " must be zero");
        }
    }
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

Channel make_channel(int k, std::vector<double> gain_sq, std::vector<double> phase) {
    Channel ch{k, std::move(gain_sq), std::move(phase)};
    validate(ch);
    return ch;
}

Channel make_symmetric(int k, double a) {
    return make_symmetric(k, a, std::vector<double>(static_cast<std::size_t>(k) * k, 0.0));
}

Channel make_symmetric(int k, double a, const std::vector<double>& phase) {
    if (k < 2)
        throw std::invalid_argument("make_symmetric: k must be at least 2");
    if (!std::isfinite(a) || a < 0.0)
        throw std::invalid_argument("make_symmetric: a must be finite and nonnegative");
    std::vector<double> g(static_cast<std::size_t>(k) * k, a);
    for (int j = 0; j < k; ++j) g[static_cast<std::size_t>(j) * k + j] = 1.0;
    return make_channel(k, std::move(g), phase);
}

Channel sample_random(int k, double a, std::uint64_t seed) {
    if (k < 2)
        throw std::invalid_argument("sample_random: k must be at least 2");
    if (!std::isfinite(a) || a < 0.0)
        throw std::invalid_argument("sample_random: a must be finite and nonnegative");
    SplitMix64 rng(seed);
    std::vector<double> g(static_cast<std::size_t>(k) * k, a);
    std::vector<double> p(static_cast<std::size_t>(k) * k, 0.0);
    for (int j = 0; j < k; ++j) {
        g[static_cast<std::size_t>(j) * k + j] = 1.0;
        for (int i = 0; i < k; ++i)
            if (i != j) p[static_cast<std::size_t>(j) * k + i] = rng.next_angle();
    }
    return make_channel(k, std::move(g), std::move(p));
}

void save_channel(const Channel& ch, const std::filesystem::path& dest) {
    std::ofstream out(dest);
    if (!out)
        throw std::runtime_error("save_channel: cannot open " + dest.string());
    out << "wbslope-channel v1\n";
    out << "k=" << ch.k << "\n";
    for (int j = 0; j < ch.k; ++j)
        for (int i = 0; i < ch.k; ++i)
            out << "g " << j + 1 << " " << i + 1 << " " << fmt17(ch.gain(j, i)) << "\n";
    for (int j = 0; j < ch.k; ++j)
        for (int i = 0; i < ch.k; ++i)
            out << "p " << j + 1 << " " << i + 1 << " " << fmt17(ch.phase_at(j, i)) << "\n";
    if (!out)
        throw std::runtime_error("save_channel: write failed for " + dest.string());
}

Channel load_channel(const std::filesystem::path& src) {
    std::ifstream in(src);
    if (!in)
        throw std::runtime_error("load_channel: cannot open " + src.string());

    auto fail = [&src](int line, const std::string& msg) -> std::runtime_error {
        return std::runtime_error("load_channel: " + src.string() + ":" +
                                  std::to_string(line) + ": " + msg);
    };

    std::string text;
    int lineno = 0;

    if (!std::getline(in, text)) throw fail(1, "empty file");
    ++lineno;
    if (text != "wbslope-channel v1")
        throw fail(lineno, "expected header 'wbslope-channel v1'");

    if (!std::getline(in, text)) throw fail(lineno + 1, "missing 'k=' line");
    ++lineno;
    if (text.rfind("k=", 0) != 0) throw fail(lineno, "expected 'k=<int>'");
    int k = 0;
    try {
        std::size_t pos = 0;
        k = std::stoi(text.substr(2), &pos);
        if (pos != text.size() - 2) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw fail(lineno, "malformed user count '" + text + "'");
    }
    if (k < 1) throw fail(lineno, "k must be at least 1");

    const std::size_t n = static_cast<std::size_t>(k) * k;
    std::vector<double> gain(n, 0.0), phase(n, 0.0);
    std::vector<bool> seen_g(n, false), seen_p(n, false);

    while (std::getline(in, text)) {
        ++lineno;
        if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(text);
        std::string kind;
        int j = 0, i = 0;
        std::string value;
        if (!(ls >> kind >> j >> i >> value) || (kind != "g" && kind != "p"))
            throw fail(lineno, "expected 'g <j> <i> <value>' or 'p <j> <i> <value>'");
        std::string rest;
        if (ls >> rest) throw fail(lineno, "trailing content '" + rest + "'");
        if (j < 1 || j > k || i < 1 || i > k)
            throw fail(lineno, "indices out of range for k=" + std::to_string(k));
        char* end = nullptr;
        const double v = std::strtod(value.c_str(), &end);
        if (end == value.c_str() || *end != '\0')
            throw fail(lineno, "malformed number '" + value + "'");
        const std::size_t idx = static_cast<std::size_t>(j - 1) * k + (i - 1);
        auto& seen = (kind == "g") ? seen_g : seen_p;
        if (seen[idx])
            throw fail(lineno, "duplicate entry " + kind + " " + std::to_string(j) + " " +
                               std::to_string(i));
        seen[idx] = true;
        ((kind == "g") ? gain : phase)[idx] = v;
    }

    for (std::size_t idx = 0; idx < n; ++idx)
        if (!seen_g[idx] || !seen_p[idx])
            throw fail(lineno, "incomplete channel: missing " +
                               std::string(!seen_g[idx] ? "g" : "p") + " entry " +
                               std::to_string(idx / k + 1) + " " + std::to_string(idx % k + 1));

    try {
        return make_channel(k, std::move(gain), std::move(phase));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error("load_channel: " + src.string() + ": " + e.what());
    }
}

}  // namespace wbslope
