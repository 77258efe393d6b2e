// polspin: polarization dyads, Pauli algebra checks, case-study
// reproduction ledger, and grid sweeps. Text output is a rendering of the
// JSON; JSON carries the full-precision values.

#include <cstdio>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "polspin/jones.hpp"
#include "polspin/pauli.hpp"
#include "polspin/reproduce.hpp"
#include "polspin/sweep.hpp"

using nlohmann::json;
using namespace polspin;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

json to_json(const Complex& c) { return {{"re", c.real()}, {"im", c.imag()}}; }

json to_json(const CMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json to_json(const ScalarMatch& m) {
    json out = {{"matched", m.matched}, {"residual", m.residual}};
    if (m.matched) out["scale"] = to_json(m.scale);
    return out;
}

json to_json(const DyadParams& p) {
    return {{"a", p.a}, {"b", p.b}, {"alpha", p.alpha}, {"c", p.c}, {"d", p.d}, {"beta", p.beta}};
}

std::string reading_name(Reading r) { return r == Reading::Phase ? "phase" : "literal-complex"; }

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::Case1: return "case1";
        case CaseId::Case2: return "case2";
        case CaseId::Case3: return "case3";
    }
    return "?";
}

std::string pauli_name(CaseId id) {
    switch (id) {
        case CaseId::Case1: return "sigma_x";
        case CaseId::Case2: return "sigma_y";
        case CaseId::Case3: return "sigma_z";
    }
    return "?";
}

json to_json(const CaseReport& r) {
    return {{"case", case_name(r.case_id)},
            {"reading", reading_name(r.reading)},
            {"construction", to_string(r.construction)},
            {"params", to_json(r.params)},
            {"prefactor", r.prefactor},
            {"claimed_target", pauli_name(r.case_id)},
            {"computed", to_json(r.computed)},
            {"claimed", to_json(r.claimed)},
            {"exact_match", r.exact_match},
            {"scalar_match", to_json(r.scalar_match)}};
}

std::string fmt_complex(const Complex& c) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%+.6g%+.6gi", c.real(), c.imag());
    return buf;
}

void print_matrix(const CMatrix& m, const std::string& indent) {
    for (int i = 0; i < m.dim(); ++i) {
        std::cout << indent << "[";
        for (int j = 0; j < m.dim(); ++j)
            std::cout << (j ? "  " : " ") << fmt_complex(m.at(i, j));
        std::cout << " ]\n";
    }
}

void emit(const json& doc, bool as_json) {
    if (as_json) std::cout << doc.dump(2) << "\n";
}

// ---- states ----

int cmd_states(bool as_json) {
    struct Entry {
        const char* name;
        const char* description;
        StandardState state;
    };
    const Entry entries[] = {
        {"LinearX", "linear polarization along +x", StandardState::LinearX},
        {"LinearY", "linear polarization along +y", StandardState::LinearY},
        {"CircularRight", "right circular polarization", StandardState::CircularRight},
        {"CircularLeft", "left circular polarization", StandardState::CircularLeft},
    };
    json doc = json::array();
    for (const Entry& e : entries) {
        const JonesVector j = standard_state(e.state);
        doc.push_back({{"name", e.name},
                       {"description", e.description},
                       {"ex_re", j.ex.real()},
                       {"ex_im", j.ex.imag()},
                       {"ey_re", j.ey.real()},
                       {"ey_im", j.ey.imag()}});
        if (!as_json)
            std::cout << e.name << ": (" << fmt_complex(j.ex) << ", " << fmt_complex(j.ey)
                      << ")  " << e.description << "\n";
    }
    emit(doc, as_json);
    return kExitOk;
}

// ---- verify ----

bool projector_invariants_hold(double tol, double* max_residual) {
    std::mt19937_64 rng(20240817);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        Complex ex{dist(rng), dist(rng)}, ey{dist(rng), dist(rng)};
        if (std::norm(ex) + std::norm(ey) < 1e-6) continue;
        const JonesVector j = make_jones(ex, ey);
        const CMatrix d = outer_conj(j, j);
        worst = std::max(worst, max_abs(mat_sub(d, adjoint(d))));
        worst = std::max(worst, max_abs(mat_sub(mat_mul(d, d), d)));
        worst = std::max(worst, std::abs(trace(d) - Complex{1.0, 0.0}));
    }
    *max_residual = worst;
    return worst <= tol;
}

int cmd_verify(double tol, bool as_json) {
    if (tol <= 0.0) {
        std::cerr << "verify: tol must be positive\n";
        return kExitBadInput;
    }
    const AlgebraReport report = verify_algebra(tol);
    double projector_residual = 0.0;
    const bool projectors_ok = projector_invariants_hold(tol, &projector_residual);
    const bool all_ok = report.squares_ok && report.anticommutation_ok &&
                        report.commutation_ok && projectors_ok;

    json doc = {{"squares_ok", report.squares_ok},
                {"anticommutation_ok", report.anticommutation_ok},
                {"commutation_ok", report.commutation_ok},
                {"max_residual", report.max_residual},
                {"projector_invariants_ok", projectors_ok},
                {"projector_max_residual", projector_residual},
                {"tol", tol}};
    if (!as_json) {
        std::cout << "squares:          " << (report.squares_ok ? "ok" : "FAIL") << "\n"
                  << "anticommutation:  " << (report.anticommutation_ok ? "ok" : "FAIL") << "\n"
                  << "commutation:      " << (report.commutation_ok ? "ok" : "FAIL") << "\n"
                  << "projectors:       " << (projectors_ok ? "ok" : "FAIL") << "\n"
                  << "max residual:     " << std::max(report.max_residual, projector_residual)
                  << "\n";
    }
    emit(doc, as_json);
    return all_ok ? kExitOk : kExitCheckFailed;
}

// ---- reproduce ----

int cmd_reproduce(const std::string& case_filter, double tol, bool strict, bool as_json) {
    if (tol <= 0.0) {
        std::cerr << "reproduce: tol must be positive\n";
        return kExitBadInput;
    }
    std::vector<CaseId> wanted;
    if (case_filter == "all")
        wanted = {CaseId::Case1, CaseId::Case2, CaseId::Case3};
    else if (case_filter == "1")
        wanted = {CaseId::Case1};
    else if (case_filter == "2")
        wanted = {CaseId::Case2};
    else if (case_filter == "3")
        wanted = {CaseId::Case3};
    else {
        std::cerr << "reproduce: unknown case '" << case_filter << "' (use 1|2|3|all)\n";
        return kExitBadInput;
    }

    json cases = json::array();
    bool any_mismatch = false;
    for (CaseId id : wanted)
        for (Reading reading : {Reading::Phase, Reading::LiteralComplex}) {
            const CaseReport report = run_case(id, reading, tol);
            any_mismatch = any_mismatch || !report.exact_match;
            cases.push_back(to_json(report));
            if (!as_json) {
                std::cout << case_name(id) << " [" << reading_name(reading) << "] "
                          << to_string(report.construction) << ", prefactor " << report.prefactor
                          << ", claim " << pauli_name(id) << ": "
                          << (report.exact_match ? "reproduced" : "DISCREPANCY") << "\n";
                std::cout << "  computed:\n";
                print_matrix(report.computed, "    ");
                if (report.scalar_match.matched)
                    std::cout << "  scalar match (prefactor ignored): scale = "
                              << fmt_complex(report.scalar_match.scale) << "\n";
                else
                    std::cout << "  no scalar match against " << pauli_name(id) << "\n";
            }
        }

    json doc = {{"cases", cases}};
    const ProjectorOffDiagonal off = projector_commutator_closed_form(case_params(CaseId::Case2));
    doc["projector_off_diagonal"] = {{"printed", to_json(off.printed)},
                                     {"derived", to_json(off.derived)},
                                     {"agree", std::abs(off.printed - off.derived) < tol}};
    if (!as_json)
        std::cout << "a_I,II closed form at case-2 params: printed " << fmt_complex(off.printed)
                  << " vs derived " << fmt_complex(off.derived)
                  << (std::abs(off.printed - off.derived) < tol ? " (agree)" : " (disagree)")
                  << "\n";
    emit(doc, as_json);
    return (strict && any_mismatch) ? kExitCheckFailed : kExitOk;
}

// ---- sweep ----

int cmd_sweep(const std::string& config_path, bool as_json) {
    SweepConfig cfg;
    try {
        cfg = config_path.empty() ? default_sweep_config() : load_sweep_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "sweep: " << e.what() << "\n";
        return kExitBadInput;
    }

    const SweepResult result = sweep(cfg);
    const SweepSummary summary = summarize(result, cfg.tol);

    json matches = json::array();
    for (const SweepMatch& m : result.matches)
        matches.push_back({{"params", to_json(m.params)},
                           {"construction", to_string(m.construction)},
                           {"combinator", to_string(m.combinator)},
                           {"target", to_string(m.target)},
                           {"scale", to_json(m.scale)}});
    json doc = {{"matches", matches},
                {"evaluated", result.evaluated},
                {"skipped_degenerate", result.skipped_degenerate},
                {"summary",
                 {{"total_matches", summary.total_matches},
                  {"per_target",
                   {{"sigma_x", summary.per_target[0]},
                    {"sigma_y", summary.per_target[1]},
                    {"sigma_z", summary.per_target[2]},
                    {"identity", summary.per_target[3]}}},
                  {"per_combinator",
                   {{"commutator", summary.per_combinator[0]},
                    {"anticommutator", summary.per_combinator[1]},
                    {"difference", summary.per_combinator[2]}}},
                  {"imaginary_scale_projector_matches",
                   summary.imaginary_scale_projector_matches}}}};
    if (!as_json) {
        for (const SweepMatch& m : result.matches)
            std::cout << to_string(m.construction) << " " << to_string(m.combinator) << " -> "
                      << fmt_complex(m.scale) << " * " << to_string(m.target) << "  at (a=" << m.params.a
                      << ", b=" << m.params.b << ", alpha=" << m.params.alpha
                      << ", c=" << m.params.c << ", d=" << m.params.d
                      << ", beta=" << m.params.beta << ")\n";
        std::cout << result.matches.size() << " matches from " << result.evaluated
                  << " candidates (" << result.skipped_degenerate << " degenerate tuples skipped)\n";
    }
    emit(doc, as_json);
    return kExitOk;
}

// ---- field ----

int cmd_field(const std::string& state_name, double phase, bool as_json) {
    StandardState state;
    if (state_name == "LinearX") state = StandardState::LinearX;
    else if (state_name == "LinearY") state = StandardState::LinearY;
    else if (state_name == "CircularRight") state = StandardState::CircularRight;
    else if (state_name == "CircularLeft") state = StandardState::CircularLeft;
    else {
        std::cerr << "field: unknown state '" << state_name
                  << "' (use LinearX|LinearY|CircularRight|CircularLeft)\n";
        return kExitBadInput;
    }
    const auto [fx, fy] = evaluate_field_at_phase(standard_state(state), phase);
    json doc = {{"state", state_name}, {"phase", phase}, {"ex", fx}, {"ey", fy}};
    if (!as_json) std::cout << "(" << fx << ", " << fy << ")\n";
    emit(doc, as_json);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jones-vector dyads, Pauli algebra verification, and parameter sweeps"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    double tol = 1e-9;
    bool strict = false;
    app.add_flag("--json", as_json, "emit a single JSON document");
    app.add_option("--tol", tol, "numeric tolerance");
    app.add_flag("--strict", strict, "treat documented discrepancies as failures");

    auto* states = app.add_subcommand("states", "list the four standard polarization states");

    auto* verify = app.add_subcommand("verify", "check the full spin-matrix algebra");

    std::string case_filter = "all";
    auto* reproduce = app.add_subcommand("reproduce", "case-study reproduction ledger");
    reproduce->add_option("--case", case_filter, "1|2|3|all");

    std::string config_path;
    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep for scalar-multiple Pauli matches");
    sweep_cmd->add_option("--config", config_path, "sweep config file");

    std::string state_name;
    double phase = 0.0;
    auto* field = app.add_subcommand("field", "real field components at a propagation phase");
    field->add_option("state", state_name, "LinearX|LinearY|CircularRight|CircularLeft")
        ->required();
    field->add_option("phase", phase, "propagation phase kz - wt (rad)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (states->parsed()) return cmd_states(as_json);
        if (verify->parsed()) return cmd_verify(tol, as_json);
        if (reproduce->parsed()) return cmd_reproduce(case_filter, tol, strict, as_json);
        if (sweep_cmd->parsed()) return cmd_sweep(config_path, as_json);
        if (field->parsed()) return cmd_field(state_name, phase, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
