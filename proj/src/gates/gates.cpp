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

#include "qclogic/gates/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cmath>
#include <numbers>
#include <string>

namespace qclogic::gates {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::UnitaryGate;

std::string_view gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::T: return "T";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::R: return "R";
    case GateKind::XX: return "XX";
    case GateKind::Toffoli: return "TOFFOLI";
    case GateKind::QFT: return "QFT";
    }
    return "?";
}

GateKind gate_kind_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (upper == "H") return GateKind::H;
    if (upper == "T") return GateKind::T;
    if (upper == "X") return GateKind::X;
    if (upper == "Z") return GateKind::Z;
    if (upper == "CNOT" || upper == "CX") return GateKind::CNOT;
    if (upper == "R") return GateKind::R;
    if (upper == "XX") return GateKind::XX;
    if (upper == "TOFFOLI" || upper == "CCX") return GateKind::Toffoli;
    if (upper == "QFT") return GateKind::QFT;
    fail(ErrorKind::UnknownGate, "unknown gate '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
    case GateKind::XX: return 2;
    case GateKind::Toffoli: return 3;
    case GateKind::QFT: return 0;
    default: return 1;
    }
}

bool is_parameterized(GateKind kind) noexcept {
    return kind == GateKind::R || kind == GateKind::XX;
}

void check_spec(const GateSpec &spec, std::size_t width) {
    const std::size_t arity = gate_arity(spec.kind);
    const std::string name(gate_name(spec.kind));
    if (arity == 0 ? spec.wires.empty() : spec.wires.size() != arity) {
        fail(ErrorKind::InvalidWire, name + " placed on " + std::to_string(spec.wires.size()) +
                                         " wires");
    }
    for (std::size_t i = 0; i < spec.wires.size(); ++i) {
        if (spec.wires[i] >= width) {
            fail(ErrorKind::InvalidWire, name + " wire " + std::to_string(spec.wires[i]) +
                                             " outside width " + std::to_string(width));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (spec.wires[i] == spec.wires[j]) {
                fail(ErrorKind::InvalidWire, name + " repeats wire " +
                                                 std::to_string(spec.wires[i]));
            }
        }
    }
    if (!std::isfinite(spec.param)) {
        fail(ErrorKind::InvalidArgument, name + " parameter is not finite");
    }
}

ComplexMatrix qft_matrix(std::size_t n) {
    if (n == 0) {
        fail(ErrorKind::InvalidArgument, "QFT size must be positive");
    }
    const auto dim = static_cast<Eigen::Index>(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    Eigen::MatrixXcd f(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            // Reduce ab mod n before scaling so large products stay exact.
            const auto k = static_cast<double>((static_cast<std::uint64_t>(a) *
                                                static_cast<std::uint64_t>(b)) %
                                               n);
            f(a, b) = scale * std::polar(1.0, 2.0 * std::numbers::pi * k /
                                                  static_cast<double>(n));
        }
    }
    return ComplexMatrix(std::move(f));
}

ComplexMatrix local_matrix(const GateSpec &spec) {
    const double s = 1.0 / std::numbers::sqrt2;
    const Complex i(0.0, 1.0);
    switch (spec.kind) {
    case GateKind::H: return ComplexMatrix::from_rows({{s, s}, {s, -s}});
    case GateKind::T:
        return ComplexMatrix::diagonal({1.0, std::polar(1.0, std::numbers::pi / 4)});
    case GateKind::X: return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    case GateKind::Z: return ComplexMatrix::diagonal({1.0, -1.0});
    case GateKind::R: return ComplexMatrix::diagonal({1.0, std::polar(1.0, spec.param)});
    case GateKind::CNOT:
        return ComplexMatrix::from_rows(
            {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    case GateKind::XX: {
        // exp(-i phi X(x)X / 2) = cos(phi/2) 1 - i sin(phi/2) X(x)X
        const Complex c = std::cos(spec.param / 2);
        const Complex t = -i * std::sin(spec.param / 2);
        return ComplexMatrix::from_rows(
            {{c, 0, 0, t}, {0, c, t, 0}, {0, t, c, 0}, {t, 0, 0, c}});
    }
    case GateKind::Toffoli: {
        Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(8, 8);
        m(6, 6) = 0.0;
        m(7, 7) = 0.0;
        m(6, 7) = 1.0;
        m(7, 6) = 1.0;
        return ComplexMatrix(std::move(m));
    }
    case GateKind::QFT: return qft_matrix(std::size_t{1} << spec.wires.size());
    }
    fail(ErrorKind::UnknownGate, "unhandled gate kind");
}

namespace {

// Left-multiplies `m` by `local` acting on `wires` of a width-qubit register.
void apply_local(const Eigen::MatrixXcd &local, const std::vector<std::size_t> &wires,
                 std::size_t width, Eigen::MatrixXcd &m) {
    const std::size_t k = wires.size();
    const std::size_t sub = std::size_t{1} << k;
    const std::size_t dim = std::size_t{1} << width;
    std::size_t wire_mask = 0;
    std::vector<std::size_t> offsets(sub, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t bit = std::size_t{1} << (width - 1 - wires[j]);
        wire_mask |= bit;
        for (std::size_t s = 0; s < sub; ++s) {
            if ((s >> (k - 1 - j)) & 1U) {
                offsets[s] |= bit;
            }
        }
    }
    Eigen::MatrixXcd block(static_cast<Eigen::Index>(sub), m.cols());
    for (std::size_t base = 0; base < dim; ++base) {
        if (base & wire_mask) {
            continue;
        }
        for (std::size_t s = 0; s < sub; ++s) {
            block.row(static_cast<Eigen::Index>(s)) =
                m.row(static_cast<Eigen::Index>(base | offsets[s]));
        }
        block = (local * block).eval();
        for (std::size_t s = 0; s < sub; ++s) {
            m.row(static_cast<Eigen::Index>(base | offsets[s])) =
                block.row(static_cast<Eigen::Index>(s));
        }
    }
}

void check_width(std::size_t width) {
    if (width == 0 || width > kMaxWidth) {
        fail(ErrorKind::InvalidWire, "register width " + std::to_string(width) +
                                         " outside 1.." + std::to_string(kMaxWidth));
    }
}

Eigen::MatrixXcd identity_of_width(std::size_t width) {
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << width);
    return Eigen::MatrixXcd::Identity(dim, dim);
}

} // namespace

UnitaryGate elementary(const GateSpec &spec, std::size_t width) {
    check_width(width);
    check_spec(spec, width);
    Eigen::MatrixXcd m = identity_of_width(width);
    apply_local(local_matrix(spec).eigen(), spec.wires, width, m);
    return UnitaryGate::validate(ComplexMatrix(std::move(m)));
}

// ---- GateWord ----

GateWord::GateWord(std::size_t width, std::vector<GateSpec> gates)
    : width_(width), gates_(std::move(gates)) {
    check_width(width_);
    for (const auto &g : gates_) {
        check_spec(g, width_);
    }
}

GateWord GateWord::then(const GateSpec &spec) const {
    std::vector<GateSpec> gates = gates_;
    gates.push_back(spec);
    return GateWord(width_, std::move(gates));
}

GateWord GateWord::then(const GateWord &later) const {
    if (later.width_ != width_) {
        fail(ErrorKind::DimensionMismatch, "concatenating words of different width");
    }
    std::vector<GateSpec> gates = gates_;
    gates.insert(gates.end(), later.gates_.begin(), later.gates_.end());
    return GateWord(width_, std::move(gates));
}

GateWord GateWord::widened(std::size_t width) const { return GateWord(width, gates_); }

UnitaryGate compose_word(const GateWord &word) {
    Eigen::MatrixXcd m = identity_of_width(word.width());
    for (const auto &g : word.gates()) {
        apply_local(local_matrix(g).eigen(), g.wires, word.width(), m);
    }
    return UnitaryGate::validate(ComplexMatrix(std::move(m)));
}

// ---- generator sets ----

GeneratorSet GeneratorSet::g1() {
    return {"G1", {{GateKind::H, {}}, {GateKind::T, {}}}};
}

GeneratorSet GeneratorSet::g2(std::vector<double> grid) {
    return {"G2", {{GateKind::CNOT, {}}, {GateKind::H, {}}, {GateKind::R, std::move(grid)}}};
}

GeneratorSet GeneratorSet::g3(std::vector<double> grid) {
    return {"G3", {{GateKind::XX, grid}, {GateKind::R, grid}}};
}

std::vector<GateSpec> instantiate(const GeneratorSet &g, std::size_t width) {
    check_width(width);
    if (g.members.empty()) {
        fail(ErrorKind::InvalidArgument, "generator set '" + g.label + "' is empty");
    }
    std::vector<GateSpec> out;
    for (const auto &t : g.members) {
        std::vector<double> params = t.grid;
        if (is_parameterized(t.kind)) {
            if (params.empty()) {
                fail(ErrorKind::UnboundedParameter,
                     std::string(gate_name(t.kind)) + " needs a finite parameter grid");
            }
        } else {
            params = {0.0};
        }
        for (const double p : params) {
            switch (t.kind) {
            case GateKind::CNOT:
                for (std::size_t a = 0; a < width; ++a)
                    for (std::size_t b = 0; b < width; ++b)
                        if (a != b) out.push_back({t.kind, p, {a, b}});
                break;
            case GateKind::XX:
                for (std::size_t a = 0; a < width; ++a)
                    for (std::size_t b = a + 1; b < width; ++b)
                        out.push_back({t.kind, p, {a, b}});
                break;
            case GateKind::Toffoli:
                for (std::size_t a = 0; a < width; ++a)
                    for (std::size_t b = a + 1; b < width; ++b)
                        for (std::size_t c = 0; c < width; ++c)
                            if (c != a && c != b) out.push_back({t.kind, p, {a, b, c}});
                break;
            case GateKind::QFT: {
                GateSpec spec{t.kind, p, {}};
                for (std::size_t w = 0; w < width; ++w) spec.wires.push_back(w);
                out.push_back(std::move(spec));
                break;
            }
            default:
                for (std::size_t a = 0; a < width; ++a) out.push_back({t.kind, p, {a}});
                break;
            }
        }
    }
    for (const auto &spec : out) {
        check_spec(spec, width);
    }
    return out;
}

std::vector<GateWord> enumerate_polynomials(const GeneratorSet &g, std::size_t width,
                                            std::size_t max_len, std::size_t cap) {
    const std::vector<GateSpec> letters = instantiate(g, width);
    const std::size_t k = letters.size();

    std::size_t total = 0;
    std::size_t level = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
        total += level;
        if (total > cap) {
            fail(ErrorKind::EnumerationCapExceeded,
                 "more than " + std::to_string(cap) + " words up to length " +
                     std::to_string(max_len));
        }
        if (len < max_len && level > cap / k) {
            fail(ErrorKind::EnumerationCapExceeded,
                 "more than " + std::to_string(cap) + " words up to length " +
                     std::to_string(max_len));
        }
        level *= k;
    }

    std::vector<GateWord> out;
    out.reserve(total);
    out.emplace_back(width);
    std::size_t prev_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t prev_end = out.size();
        for (std::size_t w = prev_begin; w < prev_end; ++w) {
            for (const auto &letter : letters) {
                out.push_back(out[w].then(letter));
            }
        }
        prev_begin = prev_end;
    }
    return out;
}

double toffoli_truth_value(const qcore::DensityOperator &rho,
                           const qcore::DensityOperator &sigma) {
    if (rho.dim() != 2 || sigma.dim() != 2) {
        fail(ErrorKind::DimensionMismatch, "Toffoli truth value takes two qubit states");
    }
    const auto ancilla = qcore::DensityOperator::basis_state(2, 0);
    const auto input = qcore::tensor(qcore::tensor(rho, sigma), ancilla);
    const auto toffoli = elementary({GateKind::Toffoli, 0.0, {0, 1, 2}}, 3);
    const auto event = qcore::tensor(qcore::Projector::identity(4), qcore::Projector::basis(2, 1));
    return qcore::born(qcore::conjugate(toffoli, input), event);
}

} // namespace qclogic::gates
