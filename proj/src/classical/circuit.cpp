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

#include "qclogic/classical/circuit.hpp"

#include <algorithm>
#include <cctype>

#include "qclogic/error.hpp"

namespace qclogic::classical {

BitString::BitString(std::size_t length, std::uint64_t value)
    : length_(length), value_(value) {
    if (length > 64) {
        fail(ErrorKind::SizeCapExceeded, "bit strings are limited to 64 bits");
    }
    if (length < 64 && (value >> length) != 0) {
        fail(ErrorKind::InvalidArgument,
             "value " + std::to_string(value) + " does not fit in " +
                 std::to_string(length) + " bits");
    }
}

BitString BitString::parse(std::string_view text) {
    std::uint64_t v = 0;
    for (const char c : text) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::ParseError, "bad bit string '" + std::string(text) + "'");
        }
        v = (v << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return BitString(text.size(), v);
}

bool BitString::operator[](std::size_t i) const {
    if (i >= length_) {
        fail(ErrorKind::IndexOutOfRange, "bit index out of range");
    }
    return ((value_ >> (length_ - 1 - i)) & 1U) != 0;
}

std::string BitString::str() const {
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if ((*this)[i]) {
            s[i] = '1';
        }
    }
    return s;
}

bool eval_gate(BoolGate gate, std::span<const bool> args) {
    const std::size_t want = gate == BoolGate::Not ? 1 : 2;
    if (args.size() != want) {
        fail(ErrorKind::ArityMismatch,
             "gate takes " + std::to_string(want) + " arguments, got " +
                 std::to_string(args.size()));
    }
    switch (gate) {
    case BoolGate::Or: return args[0] || args[1];
    case BoolGate::And: return args[0] && args[1];
    case BoolGate::Not: return !args[0];
    }
    return false;
}

// ---- BoolCircuit ----

BoolCircuit BoolCircuit::input(std::size_t arity, std::size_t index) {
    if (index >= arity) {
        fail(ErrorKind::ArityMismatch,
             "input x" + std::to_string(index) + " outside arity " +
                 std::to_string(arity));
    }
    return BoolCircuit(arity, {Node{Op::Input, static_cast<std::uint32_t>(index), 0}});
}

BoolCircuit BoolCircuit::binary(Op op, const BoolCircuit &lhs, const BoolCircuit &rhs) {
    if (lhs.arity_ != rhs.arity_) {
        fail(ErrorKind::ArityMismatch, "operands have different arity");
    }
    std::vector<Node> nodes = lhs.nodes_;
    const auto offset = static_cast<std::uint32_t>(nodes.size());
    for (Node n : rhs.nodes_) {
        if (n.op != Op::Input) {
            n.a += offset;
            if (n.op != Op::Not) {
                n.b += offset;
            }
        }
        nodes.push_back(n);
    }
    nodes.push_back(Node{op, offset - 1, static_cast<std::uint32_t>(nodes.size() - 1)});
    return BoolCircuit(lhs.arity_, std::move(nodes));
}

BoolCircuit BoolCircuit::lor(const BoolCircuit &lhs, const BoolCircuit &rhs) {
    return binary(Op::Or, lhs, rhs);
}

BoolCircuit BoolCircuit::land(const BoolCircuit &lhs, const BoolCircuit &rhs) {
    return binary(Op::And, lhs, rhs);
}

BoolCircuit BoolCircuit::lnot(const BoolCircuit &operand) {
    std::vector<Node> nodes = operand.nodes_;
    nodes.push_back(Node{Op::Not, static_cast<std::uint32_t>(nodes.size() - 1), 0});
    return BoolCircuit(operand.arity_, std::move(nodes));
}

BoolCircuit BoolCircuit::with_arity(std::size_t arity) const {
    if (arity < arity_) {
        fail(ErrorKind::ArityMismatch, "cannot shrink circuit arity");
    }
    return BoolCircuit(arity, nodes_);
}

std::string BoolCircuit::str() const {
    std::vector<std::string> text(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node &n = nodes_[i];
        switch (n.op) {
        case Op::Input: text[i] = "x" + std::to_string(n.a); break;
        case Op::Not: text[i] = "(not " + text[n.a] + ")"; break;
        case Op::Or: text[i] = "(or " + text[n.a] + " " + text[n.b] + ")"; break;
        case Op::And: text[i] = "(and " + text[n.a] + " " + text[n.b] + ")"; break;
        }
    }
    return text.back();
}

// ---- parsing ----

namespace {

class SexprParser {
  public:
    explicit SexprParser(std::string_view text) : text_(text) {}

    // Parses into a neutral tree first so the arity can be fixed before
    // circuits are assembled.
    struct Expr {
        BoolCircuit::Op op;
        std::size_t input = 0;
        std::vector<Expr> args;
    };

    Expr parse_all() {
        Expr e = parse_expr();
        skip_space();
        if (pos_ != text_.size()) {
            error("trailing text");
        }
        return e;
    }

  private:
    [[noreturn]] void error(const std::string &what) const {
        fail(ErrorKind::ParseError,
             what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::string atom() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')') {
            ++pos_;
        }
        if (start == pos_) {
            error("expected a symbol");
        }
        std::string s(text_.substr(start, pos_ - start));
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    }

    Expr parse_expr() {
        skip_space();
        if (pos_ >= text_.size()) {
            error("unexpected end of input");
        }
        if (text_[pos_] != '(') {
            const std::string sym = atom();
            if (sym.size() < 2 || sym[0] != 'x' ||
                !std::all_of(sym.begin() + 1, sym.end(),
                             [](unsigned char c) { return std::isdigit(c); })) {
                error("unknown symbol '" + sym + "'");
            }
            return Expr{BoolCircuit::Op::Input, std::stoul(sym.substr(1)), {}};
        }
        ++pos_;
        const std::string head = atom();
        Expr e{};
        std::size_t want = 2;
        if (head == "or") {
            e.op = BoolCircuit::Op::Or;
        } else if (head == "and") {
            e.op = BoolCircuit::Op::And;
        } else if (head == "not") {
            e.op = BoolCircuit::Op::Not;
            want = 1;
        } else {
            error("unknown operator '" + head + "'");
        }
        skip_space();
        while (pos_ < text_.size() && text_[pos_] != ')') {
            e.args.push_back(parse_expr());
            skip_space();
        }
        if (pos_ >= text_.size()) {
            error("missing ')'");
        }
        ++pos_;
        if (e.args.size() != want) {
            fail(ErrorKind::ArityMismatch,
                 "'" + head + "' takes " + std::to_string(want) + " operands, got " +
                     std::to_string(e.args.size()));
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::size_t max_input(const SexprParser::Expr &e) {
    std::size_t m = e.op == BoolCircuit::Op::Input ? e.input : 0;
    for (const auto &a : e.args) {
        m = std::max(m, max_input(a));
    }
    return m;
}

BoolCircuit build(const SexprParser::Expr &e, std::size_t arity) {
    switch (e.op) {
    case BoolCircuit::Op::Input: return BoolCircuit::input(arity, e.input);
    case BoolCircuit::Op::Not: return BoolCircuit::lnot(build(e.args[0], arity));
    case BoolCircuit::Op::Or:
        return BoolCircuit::lor(build(e.args[0], arity), build(e.args[1], arity));
    case BoolCircuit::Op::And:
        return BoolCircuit::land(build(e.args[0], arity), build(e.args[1], arity));
    }
    fail(ErrorKind::ParseError, "bad expression");
}

} // namespace

BoolCircuit parse_circuit(std::string_view text, std::optional<std::size_t> arity) {
    const SexprParser::Expr e = SexprParser(text).parse_all();
    const std::size_t needed = max_input(e) + 1;
    const std::size_t n = arity.value_or(needed);
    if (n < needed) {
        fail(ErrorKind::ArityMismatch,
             "circuit uses x" + std::to_string(needed - 1) + " but arity is " +
                 std::to_string(n));
    }
    return build(e, n);
}

bool eval_circuit(const BoolCircuit &c, const BitString &x) {
    if (x.length() != c.arity()) {
        fail(ErrorKind::ArityMismatch,
             "input has " + std::to_string(x.length()) + " bits, circuit arity is " +
                 std::to_string(c.arity()));
    }
    const auto &nodes = c.nodes();
    std::vector<bool> value(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto &n = nodes[i];
        switch (n.op) {
        case BoolCircuit::Op::Input: value[i] = x[n.a]; break;
        case BoolCircuit::Op::Not: {
            const bool args[] = {value[n.a]};
            value[i] = eval_gate(BoolGate::Not, args);
            break;
        }
        case BoolCircuit::Op::Or: {
            const bool args[] = {value[n.a], value[n.b]};
            value[i] = eval_gate(BoolGate::Or, args);
            break;
        }
        case BoolCircuit::Op::And: {
            const bool args[] = {value[n.a], value[n.b]};
            value[i] = eval_gate(BoolGate::And, args);
            break;
        }
        }
    }
    return value.back();
}

EqualityResult equal_functions(const BoolCircuit &f, const BoolCircuit &g) {
    const BoolCircuit fs[] = {f};
    const BoolCircuit gs[] = {g};
    return equal_functions(fs, gs);
}

EqualityResult equal_functions(std::span<const BoolCircuit> f,
                               std::span<const BoolCircuit> g) {
    if (f.empty() || f.size() != g.size()) {
        fail(ErrorKind::ArityMismatch, "functions have different output counts");
    }
    const std::size_t arity = f.front().arity();
    for (const auto *side : {&f, &g}) {
        for (const auto &c : *side) {
            if (c.arity() != arity) {
                fail(ErrorKind::ArityMismatch, "functions have different arity");
            }
        }
    }
    if (arity > kMaxExhaustiveInputs) {
        fail(ErrorKind::SizeCapExceeded,
             "exhaustive comparison limited to " + std::to_string(kMaxExhaustiveInputs) +
                 " inputs");
    }
    const std::uint64_t count = std::uint64_t{1} << arity;
    for (std::uint64_t v = 0; v < count; ++v) {
        const BitString x(arity, v);
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (eval_circuit(f[k], x) != eval_circuit(g[k], x)) {
                return {false, x};
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace qclogic::classical
