#pragma once

#include <vector>

#include "polspin/dyadics.hpp"
#include "polspin/pauli.hpp"

namespace polspin {

enum class CaseId { Case1, Case2, Case3 };
enum class Construction { PairDyads, ProjectorDyads };

/// One case-study verdict: the matrix actually computed from the stated
/// parameters next to the matrix the claim names. The claimed matrix is
/// never assumed correct; computed comes from the dyad arithmetic alone.
struct CaseReport {
    CaseId case_id = CaseId::Case1;
    Reading reading = Reading::Phase;
    Construction construction = Construction::PairDyads;
    DyadParams params;
    double prefactor = 1.0;
    CMatrix computed = CMatrix::zero(2);  // prefactor applied
    CMatrix claimed = CMatrix::zero(2);
    bool exact_match = false;
    ScalarMatch scalar_match;  // raw commutator vs claimed, prefactor ignored
};

/// The six case reports plus the printed-vs-derived a_{I,II} comparison.
struct DiscrepancyReport {
    std::vector<CaseReport> cases;  // ordered (case, reading)
    DyadParams case2_params;
    ProjectorOffDiagonal case2_off_diagonal;
};

DyadParams case_params(CaseId case_id);

CaseReport run_case(CaseId case_id, Reading reading, double tol = 1e-9);

DiscrepancyReport discrepancy_report(double tol = 1e-9);

}  // namespace polspin
