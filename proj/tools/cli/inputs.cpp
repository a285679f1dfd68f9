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

#include "cli/inputs.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qclogic/gates/word_format.hpp"
#include "qclogic/qcore/matrix_json.hpp"

namespace qclogic::cli {

namespace {

std::string strip_brackets(const std::string &text) {
    if (text.size() >= 2 && text.front() == '|' && text.back() == '>') {
        return text.substr(1, text.size() - 2);
    }
    return text;
}

void require_dim(std::size_t got, std::size_t want, const std::string &what) {
    if (got != want) {
        fail(ErrorKind::DimensionMismatch, what + " has dimension " + std::to_string(got) +
                                               ", the gates act on " + std::to_string(want));
    }
}

qcore::ComplexMatrix read_matrix(const std::string &source, const std::string &what) {
    return qcore::matrix_from_json(read_document(source, what));
}

} // namespace

bool is_ket_label(const std::string &text) {
    const std::string body = strip_brackets(text);
    if (body.empty()) return false;
    return body.find_first_not_of("01+-") == std::string::npos;
}

qcore::Ket ket_from_label(const std::string &text) {
    if (!is_ket_label(text)) {
        fail(ErrorKind::ParseError, "'" + text + "' is not a ket label over {0,1,+,-}");
    }
    const std::string body = strip_brackets(text);
    const double s = 1.0 / std::numbers::sqrt2;
    qcore::Ket out = qcore::Ket::Ones(1);
    for (const char c : body) {
        qcore::Ket q(2);
        switch (c) {
        case '0': q << 1.0, 0.0; break;
        case '1': q << 0.0, 1.0; break;
        case '+': q << s, s; break;
        default: q << s, -s; break;
        }
        qcore::Ket next(out.size() * 2);
        for (Eigen::Index i = 0; i < out.size(); ++i) {
            next(2 * i) = out(i) * q(0);
            next(2 * i + 1) = out(i) * q(1);
        }
        out = std::move(next);
    }
    return out;
}

qcore::DensityOperator read_state(const std::string &source, std::size_t dim, double tol) {
    if (is_ket_label(source)) {
        auto state = qcore::DensityOperator::pure(ket_from_label(source), tol);
        require_dim(state.dim(), dim, "state '" + source + "'");
        return state;
    }
    auto state = qcore::DensityOperator::validate(read_matrix(source, "state"), tol);
    require_dim(state.dim(), dim, "state");
    return state;
}

qcore::Projector read_event(const std::string &source, std::size_t dim, double tol) {
    if (is_ket_label(source)) {
        auto event = qcore::Projector::onto(ket_from_label(source), tol);
        require_dim(event.dim(), dim, "event '" + source + "'");
        return event;
    }
    auto event = qcore::Projector::validate(read_matrix(source, "event"), tol);
    require_dim(event.dim(), dim, "event");
    return event;
}

gates::GateWord read_word(const std::string &source) {
    std::error_code ec;
    if (!source.empty() && std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        return gates::parse_word(buf.str());
    }
    return gates::parse_word(source);
}

Json read_document(const std::string &source, const std::string &what) {
    return load_json_argument(source, what);
}

} // namespace qclogic::cli
