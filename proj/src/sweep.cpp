#include "polspin/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace polspin {

namespace {

constexpr double kDegenerateNorm = 1e-12;

CMatrix combine(const CMatrix& first, const CMatrix& second, Combinator c) {
    switch (c) {
        case Combinator::Commutator: return commutator(first, second);
        case Combinator::Anticommutator: return anticommutator(first, second);
        case Combinator::Difference: return mat_sub(first, second);
    }
    throw std::invalid_argument("combine: unknown combinator");
}

std::pair<CMatrix, CMatrix> build(const DyadParams& p, Construction c) {
    return (c == Construction::PairDyads) ? build_pair(p, Reading::Phase)
                                          : build_projectors(p, Reading::Phase);
}

struct WorkerTally {
    std::vector<SweepMatch> matches;
    std::int64_t evaluated = 0;
    std::int64_t skipped = 0;
};

// One parameter tuple; index decodes as nested loops over
// (a, b, alpha, c, d, beta) so output order matches the sort contract.
void evaluate_tuple(const SweepConfig& cfg, const DyadParams& p, WorkerTally& tally) {
    if (p.a * p.a + p.b * p.b < kDegenerateNorm || p.c * p.c + p.d * p.d < kDegenerateNorm) {
        ++tally.skipped;
        return;
    }
    for (Construction construction : cfg.constructions) {
        const auto [first, second] = build(p, construction);
        for (Combinator combinator : cfg.combinators) {
            const CMatrix candidate = combine(first, second, combinator);
            ++tally.evaluated;
            for (Target target : cfg.targets) {
                const ScalarMatch match =
                    scalar_multiple_of(candidate, target_matrix(target), cfg.tol);
                if (match.matched)
                    tally.matches.push_back({p, construction, combinator, target, match.scale});
            }
        }
    }
}

void validate(const SweepConfig& cfg) {
    if (cfg.amplitudes.empty() || cfg.phases.empty() || cfg.constructions.empty() ||
        cfg.combinators.empty() || cfg.targets.empty())
        throw std::invalid_argument("sweep: empty grid dimension");
    if (cfg.tol <= 0.0) throw std::invalid_argument("sweep: tol must be positive");
}

}  // namespace

SweepConfig default_sweep_config() {
    SweepConfig cfg;
    cfg.amplitudes = {0.0, 1.0, -1.0};
    cfg.phases = {0.0, std::numbers::pi / 2.0, std::numbers::pi, 3.0 * std::numbers::pi / 2.0};
    cfg.constructions = {Construction::PairDyads, Construction::ProjectorDyads};
    cfg.combinators = {Combinator::Commutator, Combinator::Anticommutator,
                       Combinator::Difference};
    cfg.targets = {Target::SigmaX, Target::SigmaY, Target::SigmaZ, Target::Identity};
    return cfg;
}

CMatrix target_matrix(Target t) {
    switch (t) {
        case Target::SigmaX: return pauli(Axis::X);
        case Target::SigmaY: return pauli(Axis::Y);
        case Target::SigmaZ: return pauli(Axis::Z);
        case Target::Identity: return CMatrix::identity(2);
    }
    throw std::invalid_argument("target_matrix: unknown target");
}

SweepResult sweep(const SweepConfig& cfg) {
    validate(cfg);
    const std::int64_t na = static_cast<std::int64_t>(cfg.amplitudes.size());
    const std::int64_t np = static_cast<std::int64_t>(cfg.phases.size());
    const std::int64_t total = na * na * np * na * na * np;

    auto decode = [&](std::int64_t idx) {
        DyadParams p;
        p.beta = cfg.phases[static_cast<size_t>(idx % np)];
        idx /= np;
        p.d = cfg.amplitudes[static_cast<size_t>(idx % na)];
        idx /= na;
        p.c = cfg.amplitudes[static_cast<size_t>(idx % na)];
        idx /= na;
        p.alpha = cfg.phases[static_cast<size_t>(idx % np)];
        idx /= np;
        p.b = cfg.amplitudes[static_cast<size_t>(idx % na)];
        idx /= na;
        p.a = cfg.amplitudes[static_cast<size_t>(idx)];
        return p;
    };

    const int workers = std::max(1, cfg.workers);
    std::vector<WorkerTally> tallies(static_cast<size_t>(workers));
    auto run_range = [&](int w, std::int64_t begin, std::int64_t end) {
        for (std::int64_t idx = begin; idx < end; ++idx)
            evaluate_tuple(cfg, decode(idx), tallies[static_cast<size_t>(w)]);
    };

    if (workers == 1) {
        run_range(0, 0, total);
    } else {
        // Contiguous index chunks; concatenating per-worker results in
        // chunk order reproduces the serial ordering exactly.
        std::vector<std::thread> pool;
        const std::int64_t chunk = (total + workers - 1) / workers;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(run_range, w, std::min<std::int64_t>(w * chunk, total),
                              std::min<std::int64_t>((w + 1) * chunk, total));
        for (std::thread& t : pool) t.join();
    }

    SweepResult result;
    for (const WorkerTally& tally : tallies) {
        result.matches.insert(result.matches.end(), tally.matches.begin(), tally.matches.end());
        result.evaluated += tally.evaluated;
        result.skipped_degenerate += tally.skipped;
    }
    if (result.evaluated == 0)
        throw std::invalid_argument("sweep: effective grid is empty (all tuples degenerate)");
    return result;
}

bool verify_match(const SweepMatch& match, double tol) {
    const auto [first, second] = build(match.params, match.construction);
    const CMatrix candidate = combine(first, second, match.combinator);
    return max_abs(mat_sub(candidate, scale(match.scale, target_matrix(match.target)))) < tol;
}

SweepSummary summarize(const SweepResult& result, double tol) {
    SweepSummary summary;
    summary.total_matches = static_cast<std::int64_t>(result.matches.size());
    summary.skipped_degenerate = result.skipped_degenerate;
    for (const SweepMatch& m : result.matches) {
        ++summary.per_target[static_cast<int>(m.target)];
        ++summary.per_combinator[static_cast<int>(m.combinator)];
        const bool hermitian_target = is_hermitian(target_matrix(m.target), 0.0);
        if (m.construction == Construction::ProjectorDyads &&
            m.combinator == Combinator::Commutator && hermitian_target &&
            std::abs(m.scale.real()) < tol)
            ++summary.imaginary_scale_projector_matches;
    }
    return summary;
}

namespace {

std::vector<std::string> split_values(const std::string& text) {
    std::istringstream stream(text);
    std::vector<std::string> out;
    std::string token;
    while (stream >> token) out.push_back(token);
    return out;
}

double parse_number(const std::string& token, int line_no) {
    size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &consumed);
    } catch (const std::exception&) {
        consumed = 0;
    }
    if (consumed != token.size())
        throw std::runtime_error("config line " + std::to_string(line_no) + ": bad number '" +
                                 token + "'");
    return value;
}

}  // namespace

SweepConfig parse_sweep_config(std::istream& in) {
    SweepConfig cfg;
    cfg.constructions.clear();
    cfg.combinators.clear();
    cfg.targets.clear();

    std::string line;
    int line_no = 0;
    bool saw_phases = false;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            if (!split_values(line).empty())
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": expected 'key = values'");
            continue;
        }
        const auto keys = split_values(line.substr(0, eq));
        const auto values = split_values(line.substr(eq + 1));
        if (keys.size() != 1)
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected a single key before '='");
        const std::string& key = keys[0];

        if (key == "amplitudes") {
            for (const auto& v : values) cfg.amplitudes.push_back(parse_number(v, line_no));
        } else if (key == "phases_rad" || key == "phases_deg") {
            if (saw_phases)
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": phases given twice");
            saw_phases = true;
            const double unit = (key == "phases_deg") ? std::numbers::pi / 180.0 : 1.0;
            for (const auto& v : values) cfg.phases.push_back(unit * parse_number(v, line_no));
        } else if (key == "combinators") {
            for (const auto& v : values) {
                if (v == "commutator") cfg.combinators.push_back(Combinator::Commutator);
                else if (v == "anticommutator") cfg.combinators.push_back(Combinator::Anticommutator);
                else if (v == "difference") cfg.combinators.push_back(Combinator::Difference);
                else
                    throw std::runtime_error("config line " + std::to_string(line_no) +
                                             ": unknown combinator '" + v + "'");
            }
        } else if (key == "constructions") {
            for (const auto& v : values) {
                if (v == "pair") cfg.constructions.push_back(Construction::PairDyads);
                else if (v == "projector") cfg.constructions.push_back(Construction::ProjectorDyads);
                else
                    throw std::runtime_error("config line " + std::to_string(line_no) +
                                             ": unknown construction '" + v + "'");
            }
        } else if (key == "targets") {
            for (const auto& v : values) {
                if (v == "sigma_x") cfg.targets.push_back(Target::SigmaX);
                else if (v == "sigma_y") cfg.targets.push_back(Target::SigmaY);
                else if (v == "sigma_z") cfg.targets.push_back(Target::SigmaZ);
                else if (v == "identity") cfg.targets.push_back(Target::Identity);
                else
                    throw std::runtime_error("config line " + std::to_string(line_no) +
                                             ": unknown target '" + v + "'");
            }
        } else if (key == "tol") {
            if (values.size() != 1)
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": tol takes one value");
            cfg.tol = parse_number(values[0], line_no);
        } else if (key == "workers") {
            if (values.size() != 1)
                throw std::runtime_error("config line " + std::to_string(line_no) +
                                         ": workers takes one value");
            cfg.workers = static_cast<int>(parse_number(values[0], line_no));
        } else {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": unknown key '" + key + "'");
        }
    }

    if (cfg.constructions.empty())
        cfg.constructions = {Construction::PairDyads, Construction::ProjectorDyads};
    if (cfg.combinators.empty())
        cfg.combinators = {Combinator::Commutator, Combinator::Anticommutator,
                           Combinator::Difference};
    if (cfg.targets.empty())
        cfg.targets = {Target::SigmaX, Target::SigmaY, Target::SigmaZ, Target::Identity};
    if (cfg.amplitudes.empty()) throw std::runtime_error("config: empty amplitude set");
    if (cfg.phases.empty()) throw std::runtime_error("config: empty phase set");
    if (cfg.tol <= 0.0) throw std::runtime_error("config: tol must be positive");
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    return parse_sweep_config(in);
}

std::string to_string(Construction c) {
    return c == Construction::PairDyads ? "pair" : "projector";
}

std::string to_string(Combinator c) {
    switch (c) {
        case Combinator::Commutator: return "commutator";
        case Combinator::Anticommutator: return "anticommutator";
        case Combinator::Difference: return "difference";
    }
    return "?";
}

std::string to_string(Target t) {
    switch (t) {
        case Target::SigmaX: return "sigma_x";
        case Target::SigmaY: return "sigma_y";
        case Target::SigmaZ: return "sigma_z";
        case Target::Identity: return "identity";
    }
    return "?";
}

}  // namespace polspin
