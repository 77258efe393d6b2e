#include "polspin/reproduce.hpp"

#include <numbers>
#include <stdexcept>

namespace polspin {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kExactTol = 1e-12;

struct CaseSpec {
    DyadParams params;
    Construction construction;
    double prefactor;
    Axis claimed_axis;
};

// The stated inputs, with "i" read as unit amplitude at a quarter-turn
// phase: 1)  A=1,B=i,C=1,D=i  2) A=-1,B=i,C=0,D=i  3) A=1,B=0,C=0,D=1.
CaseSpec case_spec(CaseId case_id) {
    switch (case_id) {
        case CaseId::Case1:
            return {{1.0, 1.0, kHalfPi, 1.0, 1.0, kHalfPi}, Construction::PairDyads, 0.5, Axis::X};
        case CaseId::Case2:
            return {{-1.0, 1.0, kHalfPi, 0.0, 1.0, kHalfPi}, Construction::ProjectorDyads, 2.0,
                    Axis::Y};
        case CaseId::Case3:
            return {{1.0, 0.0, 0.0, 0.0, 1.0, 0.0}, Construction::PairDyads, 1.0, Axis::Z};
    }
    throw std::invalid_argument("case_spec: unknown case");
}

}  // namespace

DyadParams case_params(CaseId case_id) { return case_spec(case_id).params; }

CaseReport run_case(CaseId case_id, Reading reading, double tol) {
    const CaseSpec spec = case_spec(case_id);
    CaseReport report;
    report.case_id = case_id;
    report.reading = reading;
    report.construction = spec.construction;
    report.params = spec.params;
    report.prefactor = spec.prefactor;
    report.claimed = pauli(spec.claimed_axis);

    const auto [d_first, d_second] = (spec.construction == Construction::PairDyads)
                                         ? build_pair(spec.params, reading)
                                         : build_projectors(spec.params, reading);
    const CMatrix raw = commutator(d_first, d_second);
    report.computed = scale(spec.prefactor, raw);
    report.exact_match = max_abs(mat_sub(report.computed, report.claimed)) < kExactTol;
    report.scalar_match = scalar_multiple_of(raw, report.claimed, tol);
    return report;
}

DiscrepancyReport discrepancy_report(double tol) {
    DiscrepancyReport report;
    for (CaseId id : {CaseId::Case1, CaseId::Case2, CaseId::Case3})
        for (Reading reading : {Reading::Phase, Reading::LiteralComplex})
            report.cases.push_back(run_case(id, reading, tol));
    report.case2_params = case_params(CaseId::Case2);
    report.case2_off_diagonal = projector_commutator_closed_form(report.case2_params);
    return report;
}

}  // namespace polspin
