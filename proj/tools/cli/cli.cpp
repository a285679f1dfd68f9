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

#include "cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cli/inputs.hpp"
#include "cli/render.hpp"
#include "qclogic/algorithms/deutsch_jozsa.hpp"
#include "qclogic/algorithms/period.hpp"
#include "qclogic/classical/circuit.hpp"
#include "qclogic/gates/word_format.hpp"
#include "qclogic/logic/embedding.hpp"
#include "qclogic/logic/report_json.hpp"
#include "qclogic/omlattice/lattice_json.hpp"
#include "qclogic/qcore/algebra.hpp"

namespace qclogic::cli {

namespace {

struct Globals {
    double tol = kDefaultTolerance;
    std::string format = "json";
    std::string out_path;
};

struct Outcome {
    Json report;
    int exit_code = kExitHolds;
};

// ---- check-equiv ----

struct CheckEquivArgs {
    std::string word_a;
    std::string word_b;
    std::string relation = "total";
    std::string state;
    std::string event;
};

Outcome check_equiv(const CheckEquivArgs &a, const Globals &g) {
    auto wa = read_word(a.word_a);
    auto wb = read_word(a.word_b);
    const std::size_t width = std::max(wa.width(), wb.width());
    wa = wa.widened(width);
    wb = wb.widened(width);
    const auto u = gates::compose_word(wa);
    const auto v = gates::compose_word(wb);
    const std::size_t dim = u.dim();

    logic::TruthContext ctx;
    if (!a.state.empty()) ctx.state = read_state(a.state, dim, g.tol);
    if (!a.event.empty()) ctx.event = read_event(a.event, dim, g.tol);

    Outcome o;
    if (a.relation == "hierarchy") {
        if (!ctx.state || !ctx.event) {
            fail(ErrorKind::InvalidArgument, "hierarchy needs --state and --event");
        }
        o.report = logic::hierarchy_to_json(logic::hierarchy_check(u, v, *ctx.state, *ctx.event, g.tol));
    } else {
        const auto report = logic::compare(logic::relation_from_name(a.relation), u, v, ctx, g.tol);
        o.report = logic::report_to_json(report);
        o.exit_code = report.holds ? kExitHolds : kExitNegative;
    }
    o.report["words"] = {gates::format_word(wa), gates::format_word(wb)};
    return o;
}

// ---- quotient ----

struct QuotientArgs {
    std::string generators = "g1";
    std::vector<double> grid;
    std::size_t width = 1;
    std::size_t max_len = 2;
    std::vector<std::string> words;
    std::string relation = "rho_P";
    std::string state;
    std::string event;
    std::size_t cap = gates::kDefaultEnumerationCap;
};

Outcome quotient(const QuotientArgs &a, const Globals &g) {
    std::vector<gates::GateWord> words;
    if (!a.words.empty()) {
        std::size_t width = 1;
        for (const auto &w : a.words) {
            words.push_back(read_word(w));
            width = std::max(width, words.back().width());
        }
        for (auto &w : words) w = w.widened(width);
    } else {
        gates::GeneratorSet set = a.generators == "g1"   ? gates::GeneratorSet::g1()
                                  : a.generators == "g2" ? gates::GeneratorSet::g2(a.grid)
                                                         : gates::GeneratorSet::g3(a.grid);
        words = gates::enumerate_polynomials(set, a.width, a.max_len, a.cap);
    }
    const auto relation = logic::relation_from_name(a.relation);
    const std::size_t dim = std::size_t{1} << words.front().width();
    const auto rho = read_state(a.state, dim, g.tol);
    std::optional<qcore::Projector> event;
    if (!a.event.empty()) event = read_event(a.event, dim, g.tol);

    Outcome o;
    o.report = logic::quotient_to_json(logic::quotient(words, relation, rho, event, g.tol));
    o.report["word_count"] = words.size();
    o.report["tolerance"] = g.tol;
    return o;
}

// ---- run-dj / run-period ----

Outcome run_dj(const std::string &spec) {
    const auto f = (spec.size() == 2 && spec[0] == 'f' && spec[1] >= '1' && spec[1] <= '4')
                       ? algorithms::OracleFunction::one_bit(spec[1] - '0')
                       : algorithms::OracleFunction::from_json(read_document(spec, "oracle"));
    const auto run = algorithms::deutsch_jozsa(f);
    Outcome o;
    o.report = algorithms::run_result_to_json(run.result);
    o.report["function"] = f.to_json();
    return o;
}

struct PeriodArgs {
    std::string spec;
    std::size_t n = 0;
    std::size_t r = 0;
    std::string mode = "mixture";
    std::optional<std::uint64_t> y0;
    std::size_t samples = 8;
    std::uint64_t seed = 0x5eed;
    bool any_modulus = false;
};

Outcome run_period(const PeriodArgs &a) {
    const bool pow2 = !a.any_modulus;
    algorithms::PeriodicSpec spec;
    if (!a.spec.empty()) {
        spec = algorithms::PeriodicSpec::from_json(read_document(a.spec, "period spec"), pow2);
    } else if (a.n > 0 && a.r > 0) {
        spec = algorithms::PeriodicSpec::canonical(a.n, a.r, pow2);
    } else {
        fail(ErrorKind::InvalidArgument, "give a spec document or both --N and --r");
    }
    algorithms::PeriodOptions options;
    options.mode = a.mode == "branching" ? algorithms::PeriodMode::Branching
                                         : algorithms::PeriodMode::Mixture;
    options.y0 = a.y0;
    options.samples = a.samples;
    options.seed = a.seed;
    options.require_power_of_two = pow2;
    const auto run = algorithms::period_find(spec, options);
    Outcome o;
    o.report = algorithms::run_result_to_json(run.result);
    o.report["estimated_period"] = run.estimated_period;
    o.report["samples"] = run.samples;
    o.report["spec"] = spec.to_json();
    o.report["mode"] = a.mode;
    return o;
}

// ---- lattice-verify ----

struct LatticeArgs {
    std::string file;
    std::string builtin;
    std::string export_path;
};

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path);
    if (!out) fail(ErrorKind::InvalidArgument, "cannot write '" + path + "'");
    out << text;
}

Outcome lattice_verify(const LatticeArgs &a) {
    if (a.file.empty() == a.builtin.empty()) {
        fail(ErrorKind::InvalidArgument, "give exactly one of a lattice file or --builtin");
    }
    Outcome o;
    o.report["source"] = a.builtin.empty() ? a.file : "builtin:" + a.builtin;
    omlattice::LatticePtr lattice;
    if (!a.builtin.empty()) {
        lattice = omlattice::builtin_lattice(a.builtin);
    } else {
        try {
            lattice = omlattice::lattice_from_json(read_document(a.file, "lattice"), false);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::LawViolation) throw;
            o.report["laws"] = Json::array({{{"law", "construction"},
                                             {"passed", false},
                                             {"required", true},
                                             {"detail", e.what()}}});
            o.report["all_required_pass"] = false;
            o.exit_code = kExitNegative;
            return o;
        }
    }
    const auto laws = omlattice::check_laws(*lattice);
    bool ok = true;
    for (const auto &law : laws) {
        if (law.required && !law.passed) ok = false;
        if (law.law == "orthomodular") o.report["orthomodular"] = law.passed;
        if (law.law == "distributive") o.report["distributive"] = law.passed;
    }
    o.report["size"] = lattice->size();
    o.report["laws"] = omlattice::laws_to_json(*lattice, laws);
    o.report["all_required_pass"] = ok;
    o.exit_code = ok ? kExitHolds : kExitNegative;
    if (!a.export_path.empty()) {
        write_file(a.export_path, dump_report(omlattice::lattice_to_json(*lattice)));
    }
    return o;
}

// ---- boolean-recover / truth-table ----

std::vector<classical::BoolCircuit> parse_circuits(const std::vector<std::string> &texts,
                                                   std::optional<std::size_t> arity) {
    std::vector<classical::BoolCircuit> out;
    std::size_t n = arity.value_or(0);
    for (const auto &t : texts) {
        out.push_back(classical::parse_circuit(t, arity));
        n = std::max(n, out.back().arity());
    }
    for (auto &c : out) c = c.with_arity(n);
    return out;
}

std::string output_bits(const std::vector<classical::BoolCircuit> &cs, const classical::BitString &x) {
    std::string s;
    for (const auto &c : cs) s += classical::eval_circuit(c, x) ? '1' : '0';
    return s;
}

Outcome boolean_recover(const std::vector<std::string> &texts, std::optional<std::size_t> arity) {
    const auto circuits = parse_circuits(texts, arity);
    const std::size_t n = circuits.front().arity();
    const std::size_t m = circuits.size();
    const auto embedding = logic::classical_embedding(circuits);

    Outcome o;
    Json rows = Json::array();
    bool all_match = true;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const classical::BitString input(n, x);
        const auto rho = logic::embedded_input(input, classical::BitString(m, 0));
        Json quantum = Json::array();
        std::string classical_bits = output_bits(circuits, input);
        bool match = true;
        for (std::size_t j = 0; j < m; ++j) {
            const double tv = logic::truth_value(embedding, rho, logic::wire_event(n + m, n + j));
            quantum.push_back(tv);
            if (tv != (classical_bits[j] == '1' ? 1.0 : 0.0)) match = false;
        }
        all_match = all_match && match;
        rows.push_back({{"x", input.str()}, {"quantum", std::move(quantum)},
                        {"classical", classical_bits}, {"match", match}});
    }
    o.report["rows"] = std::move(rows);
    o.report["matches"] = all_match;
    o.report["inputs"] = n;
    o.report["outputs"] = m;
    if (n + m <= 3) {
        const std::size_t dim = std::size_t{1} << (n + m);
        std::vector<qcore::Projector> basis;
        for (std::size_t i = 0; i < dim; ++i) basis.push_back(qcore::Projector::basis(dim, i));
        o.report["boolean_algebra_size"] = qcore::boolean_projections(basis).size();
    }
    o.exit_code = all_match ? kExitHolds : kExitNegative;
    return o;
}

constexpr std::size_t kMaxTableArity = 16;

Outcome truth_table(const std::vector<std::string> &texts, const std::vector<std::string> &compare,
                    std::optional<std::size_t> arity) {
    auto circuits = parse_circuits(texts, arity);
    Outcome o;
    Json outputs = Json::array();
    for (const auto &c : circuits) outputs.push_back(c.str());
    o.report["outputs"] = std::move(outputs);

    if (!compare.empty()) {
        auto other = parse_circuits(compare, arity);
        const std::size_t n = std::max(circuits.front().arity(), other.front().arity());
        for (auto &c : circuits) c = c.with_arity(n);
        for (auto &c : other) c = c.with_arity(n);
        const auto result = classical::equal_functions(circuits, other);
        o.report["arity"] = n;
        o.report["equal"] = result.equal;
        o.report["witness"] = result.witness ? Json(result.witness->str()) : Json(nullptr);
        if (result.witness) {
            o.report["lhs"] = output_bits(circuits, *result.witness);
            o.report["rhs"] = output_bits(other, *result.witness);
        }
        o.exit_code = result.equal ? kExitHolds : kExitNegative;
        return o;
    }

    const std::size_t n = circuits.front().arity();
    if (n > kMaxTableArity) {
        fail(ErrorKind::SizeCapExceeded, "truth tables are printed for at most " +
                                             std::to_string(kMaxTableArity) + " inputs");
    }
    Json rows = Json::array();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
        const classical::BitString input(n, x);
        rows.push_back({{"x", input.str()}, {"f", output_bits(circuits, input)}});
    }
    o.report["arity"] = n;
    o.report["rows"] = std::move(rows);
    return o;
}

void emit(const Outcome &o, const Globals &g, std::ostream &out) {
    const std::string text = g.format == "table" ? render_table(o.report) : dump_report(o.report);
    if (g.out_path.empty()) {
        out << text;
    } else {
        write_file(g.out_path, text);
    }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Probabilistic truth values, gate equivalences and orthomodular lattices",
                 "qclogic"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--tol", g.tol, "Comparison tolerance (max-entry norm)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    app.add_option("--out", g.out_path, "Write the report to this file");

    CheckEquivArgs ce;
    auto *ce_cmd = app.add_subcommand("check-equiv", "Compare two gate words under a relation");
    ce_cmd->add_option("word_a", ce.word_a, "First gate word (text or file)")->required();
    ce_cmd->add_option("word_b", ce.word_b, "Second gate word (text or file)")->required();
    ce_cmd->add_option("--relation", ce.relation,
                       "total|rho|P|rho_P|leq_rho|leq_P|leq_rho_P|hierarchy")
        ->check(CLI::IsMember({"total", "rho", "P", "rho_P", "leq_rho", "leq_P", "leq_rho_P",
                               "hierarchy", "equiv_total", "equiv_rho", "equiv_P",
                               "equiv_rho_P"}));
    ce_cmd->add_option("--state", ce.state, "Ket label, matrix literal or file");
    ce_cmd->add_option("--event", ce.event, "Ket label, matrix literal or file");

    QuotientArgs qa;
    auto *q_cmd = app.add_subcommand("quotient", "Partition gate words into equivalence classes");
    q_cmd->add_option("--generators", qa.generators, "g1|g2|g3")
        ->check(CLI::IsMember({"g1", "g2", "g3"}));
    q_cmd->add_option("--grid", qa.grid, "Parameter grid for R and XX")->delimiter(',');
    q_cmd->add_option("--width", qa.width, "Register width")->check(CLI::Range(1, 10));
    q_cmd->add_option("--max-len", qa.max_len, "Longest word enumerated");
    q_cmd->add_option("--cap", qa.cap, "Enumeration cap");
    q_cmd->add_option("--word", qa.words, "Explicit word (repeatable) instead of enumeration");
    q_cmd->add_option("--relation", qa.relation, "rho|rho_P")
        ->check(CLI::IsMember({"rho", "rho_P", "equiv_rho", "equiv_rho_P"}));
    q_cmd->add_option("--state", qa.state, "Reference state")->required();
    q_cmd->add_option("--event", qa.event, "Event (rho_P only)");

    std::string dj_spec;
    auto *dj_cmd = app.add_subcommand("run-dj", "Deutsch's problem for a one-bit function");
    dj_cmd->add_option("spec", dj_spec, "f1..f4, an oracle JSON literal or file")->required();

    PeriodArgs pa;
    auto *p_cmd = app.add_subcommand("run-period", "Period finding with the QFT");
    p_cmd->add_option("spec", pa.spec, "Period spec JSON literal or file");
    p_cmd->add_option("--N", pa.n, "Modulus (with --r, f(x) = x mod r)");
    p_cmd->add_option("--r", pa.r, "Period");
    p_cmd->add_option("--mode", pa.mode, "mixture|branching")
        ->check(CLI::IsMember({"mixture", "branching"}));
    p_cmd->add_option("--y0", pa.y0, "Measured second-register value (branching)");
    p_cmd->add_option("--samples", pa.samples, "Samples for the gcd estimate");
    p_cmd->add_option("--seed", pa.seed, "Sampler seed");
    p_cmd->add_flag("--any-modulus", pa.any_modulus, "Allow N that is not a power of two");

    LatticeArgs la;
    auto *l_cmd = app.add_subcommand("lattice-verify", "Run the orthomodular law battery");
    l_cmd->add_option("file", la.file, "Lattice JSON file or literal");
    l_cmd->add_option("--builtin", la.builtin, "bool1..bool4|mo2|diag1|diag2");
    l_cmd->add_option("--export", la.export_path, "Also write the lattice as JSON");

    std::vector<std::string> br_circuits;
    std::optional<std::size_t> br_arity;
    auto *br_cmd = app.add_subcommand(
        "boolean-recover", "Compare embedded reversible circuits with classical evaluation");
    br_cmd->add_option("circuits", br_circuits, "One S-expression per output")->required();
    br_cmd->add_option("--arity", br_arity, "Input count");

    std::vector<std::string> tt_circuits;
    std::vector<std::string> tt_compare;
    std::optional<std::size_t> tt_arity;
    auto *tt_cmd = app.add_subcommand("truth-table", "Tabulate or compare Boolean circuits");
    tt_cmd->add_option("circuits", tt_circuits, "One S-expression per output")->required();
    tt_cmd->add_option("--compare", tt_compare, "Circuits to compare against");
    tt_cmd->add_option("--arity", tt_arity, "Input count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitHolds : kExitUsage;
    }

    try {
        Outcome o;
        if (*ce_cmd) o = check_equiv(ce, g);
        else if (*q_cmd) o = quotient(qa, g);
        else if (*dj_cmd) o = run_dj(dj_spec);
        else if (*p_cmd) o = run_period(pa);
        else if (*l_cmd) o = lattice_verify(la);
        else if (*br_cmd) o = boolean_recover(br_circuits, br_arity);
        else o = truth_table(tt_circuits, tt_compare, tt_arity);
        emit(o, g, out);
        return o.exit_code;
    } catch (const Error &e) {
        err << "qclogic: " << e.what() << "\n";
    } catch (const Json::exception &e) {
        err << "qclogic: malformed JSON: " << e.what() << "\n";
    } catch (const std::exception &e) {
        err << "qclogic: " << e.what() << "\n";
    }
    return kExitUsage;
}

} // namespace qclogic::cli
