#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "polspin/reproduce.hpp"

namespace polspin {

enum class Combinator { Commutator, Anticommutator, Difference };
enum class Target { SigmaX, SigmaY, SigmaZ, Identity };

struct SweepConfig {
    std::vector<double> amplitudes;
    std::vector<double> phases;  // rad
    std::vector<Construction> constructions;
    std::vector<Combinator> combinators;
    std::vector<Target> targets;
    double tol = 1e-9;
    int workers = 1;
};

/// A candidate (params, construction, combinator) whose matrix equals
/// scale * target within tol.
struct SweepMatch {
    DyadParams params;
    Construction construction = Construction::PairDyads;
    Combinator combinator = Combinator::Commutator;
    Target target = Target::SigmaX;
    Complex scale{};
};

struct SweepResult {
    std::vector<SweepMatch> matches;  // sorted (params, construction, combinator, target)
    std::int64_t evaluated = 0;
    std::int64_t skipped_degenerate = 0;
};

struct SweepSummary {
    std::int64_t total_matches = 0;
    std::int64_t per_target[4] = {0, 0, 0, 0};
    std::int64_t per_combinator[3] = {0, 0, 0};
    std::int64_t imaginary_scale_projector_matches = 0;
    std::int64_t skipped_degenerate = 0;
};

/// The simplest-forms grid: amplitudes {0, 1, -1}, quarter-turn
/// phases, every construction/combinator/target.
SweepConfig default_sweep_config();

CMatrix target_matrix(Target t);

/// Exhaustive Cartesian grid evaluation. Output ordering is independent
/// of cfg.workers.
SweepResult sweep(const SweepConfig& cfg);

/// Recomputes the construction from the match's params and checks that it
/// still equals scale * target within tol.
bool verify_match(const SweepMatch& match, double tol);

SweepSummary summarize(const SweepResult& result, double tol = 1e-9);

/// Parses the flat "key = values" config text ('#' comments). Throws
/// std::runtime_error with a line-numbered message on bad input.
SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

std::string to_string(Construction c);
std::string to_string(Combinator c);
std::string to_string(Target t);

}  // namespace polspin
