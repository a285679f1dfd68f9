// Copyright 2026 The qclogic Authors
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

#include "qclogic/gates/word_format.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <optional>

namespace qclogic::gates {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void parse_error(std::string_view statement, const std::string &why) {
    fail(ErrorKind::ParseError, "gate '" + std::string(statement) + "': " + why);
}

std::size_t parse_index(std::string_view token, std::string_view statement) {
    token = trim(token);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        parse_error(statement, "bad wire '" + std::string(token) + "'");
    }
    return value;
}

double parse_param(std::string_view token, std::string_view statement) {
    token = trim(token);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        parse_error(statement, "bad parameter '" + std::string(token) + "'");
    }
    return value;
}

struct PendingGate {
    GateSpec spec;
    bool default_wires = false;
};

PendingGate parse_gate(std::string_view statement) {
    std::size_t pos = 0;
    while (pos < statement.size() &&
           std::isalnum(static_cast<unsigned char>(statement[pos]))) {
        ++pos;
    }
    if (pos == 0) {
        parse_error(statement, "expected a gate name");
    }
    PendingGate out{{gate_kind_from_name(statement.substr(0, pos)), 0.0, {}}, false};
    std::string_view rest = trim(statement.substr(pos));

    if (!rest.empty() && rest.front() == '(') {
        const auto close = rest.find(')');
        if (close == std::string_view::npos) parse_error(statement, "unclosed '('");
        out.spec.param = parse_param(rest.substr(1, close - 1), statement);
        rest = trim(rest.substr(close + 1));
        if (!is_parameterized(out.spec.kind)) {
            parse_error(statement, "gate takes no parameter");
        }
    } else if (is_parameterized(out.spec.kind)) {
        parse_error(statement, "missing parameter");
    }

    if (rest.empty()) {
        out.default_wires = true;
        for (std::size_t w = 0; w < gate_arity(out.spec.kind); ++w) out.spec.wires.push_back(w);
        return out;
    }
    if (rest.front() != '[' || rest.back() != ']') {
        parse_error(statement, "expected '[wires]'");
    }
    std::string_view list = rest.substr(1, rest.size() - 2);
    while (true) {
        const auto comma = list.find(',');
        out.spec.wires.push_back(parse_index(list.substr(0, comma), statement));
        if (comma == std::string_view::npos) break;
        list.remove_prefix(comma + 1);
    }
    return out;
}

} // namespace

GateWord parse_word(std::string_view text) {
    std::optional<std::size_t> width;
    std::vector<PendingGate> pending;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find_first_of(";\n", start);
        if (end == std::string_view::npos) end = text.size();
        const std::string_view statement = trim(text.substr(start, end - start));
        start = end + 1;
        if (statement.empty()) continue;
        if (statement.starts_with("width")) {
            const auto eq = statement.find('=');
            if (eq == std::string_view::npos) parse_error(statement, "expected width=<n>");
            if (width) parse_error(statement, "width given twice");
            width = parse_index(statement.substr(eq + 1), statement);
            continue;
        }
        pending.push_back(parse_gate(statement));
    }

    std::size_t needed = 1;
    for (const auto &g : pending) {
        for (const auto w : g.spec.wires) needed = std::max(needed, w + 1);
    }
    const std::size_t w = width.value_or(needed);

    std::vector<GateSpec> gates;
    gates.reserve(pending.size());
    for (auto &g : pending) {
        if (g.default_wires && g.spec.kind == GateKind::QFT) {
            for (std::size_t i = 0; i < w; ++i) g.spec.wires.push_back(i);
        }
        gates.push_back(std::move(g.spec));
    }
    return GateWord(w, std::move(gates));
}

std::string format_spec(const GateSpec &spec) {
    std::string out(gate_name(spec.kind));
    if (is_parameterized(spec.kind)) {
        std::array<char, 32> buf{};
        const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), spec.param);
        (void)ec;
        out += "(" + std::string(buf.data(), ptr) + ")";
    }
    out += "[";
    for (std::size_t i = 0; i < spec.wires.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(spec.wires[i]);
    }
    out += "]";
    return out;
}

std::string format_word(const GateWord &word) {
    std::string out = "width=" + std::to_string(word.width());
    for (const auto &g : word.gates()) {
        out += "; " + format_spec(g);
    }
    return out;
}

} // namespace qclogic::gates
