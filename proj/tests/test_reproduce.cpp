#include <doctest.h>

#include <numbers>

#include "polspin/reproduce.hpp"

using namespace polspin;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("case 3 reproduces sigma_z exactly") {
    for (Reading reading : {Reading::Phase, Reading::LiteralComplex}) {
        const CaseReport report = run_case(CaseId::Case3, reading);
        CHECK(report.exact_match);
        CHECK(max_abs(mat_sub(report.computed, pauli(Axis::Z))) == 0.0);
        CHECK(report.scalar_match.matched);
        CHECK(std::abs(report.scalar_match.scale - 1.0) < 1e-12);
        CHECK(report.construction == Construction::PairDyads);
        CHECK(report.prefactor == 1.0);
    }
}

TEST_CASE("case 1 yields the zero matrix under both readings") {
    for (Reading reading : {Reading::Phase, Reading::LiteralComplex}) {
        const CaseReport report = run_case(CaseId::Case1, reading);
        CHECK_FALSE(report.exact_match);
        CHECK(max_abs(report.computed) < 1e-12);
        CHECK_FALSE(report.scalar_match.matched);
        CHECK(report.prefactor == 0.5);
    }
}

TEST_CASE("case 2 cannot match the Hermitian sigma_y") {
    for (Reading reading : {Reading::Phase, Reading::LiteralComplex}) {
        const CaseReport report = run_case(CaseId::Case2, reading);
        CHECK_FALSE(report.exact_match);
        CHECK(report.construction == Construction::ProjectorDyads);

        const auto [d_i, d_ii] = build_projectors(report.params, reading);
        CHECK(is_antihermitian(commutator(d_i, d_ii), 1e-12));
        // any scalar projection onto sigma_y is purely imaginary
        if (report.scalar_match.matched)
            CHECK(std::abs(report.scalar_match.scale.real()) < 1e-9);
    }
}

TEST_CASE("case 2 stated polarization states fare no better") {
    // the claim names left circular (i/sqrt2)(1, i) and linear i(0, 1);
    // global phases drop out of the projectors entirely.
    const JonesVector left = make_jones(I, I * I);
    const JonesVector linear_y = make_jones(0.0, I);
    const CMatrix d_i = outer_conj(left, left);
    const CMatrix d_ii = outer_conj(linear_y, linear_y);
    const CMatrix claimed = pauli(Axis::Y);
    const CMatrix computed = scale(2.0, commutator(d_i, d_ii));
    CHECK(max_abs(mat_sub(computed, claimed)) > 0.5);
    CHECK(is_antihermitian(commutator(d_i, d_ii), 1e-12));
}

TEST_CASE("discrepancy_report") {
    const DiscrepancyReport report = discrepancy_report();
    REQUIRE(report.cases.size() == 6);
    // ordering: (case, reading)
    CHECK(report.cases[0].case_id == CaseId::Case1);
    CHECK(report.cases[0].reading == Reading::Phase);
    CHECK(report.cases[1].reading == Reading::LiteralComplex);
    CHECK(report.cases[4].case_id == CaseId::Case3);

    // case 3 agrees under both readings (B = 0 and C = 0 carry no phase)
    CHECK(max_abs(mat_sub(report.cases[4].computed, report.cases[5].computed)) < 1e-15);
    // case 1 is zero under both readings
    CHECK(max_abs(report.cases[0].computed) < 1e-12);
    CHECK(max_abs(report.cases[1].computed) < 1e-12);

    // the printed a_I,II and the derived entry are both reported
    const ProjectorOffDiagonal off = report.case2_off_diagonal;
    const auto [d_i, d_ii] = build_projectors(report.case2_params, Reading::Phase);
    CHECK(std::abs(off.derived - commutator(d_i, d_ii).at(0, 1)) < 1e-12);
}

TEST_CASE("exact_match implies a unit-scale scalar match") {
    for (CaseId id : {CaseId::Case1, CaseId::Case2, CaseId::Case3})
        for (Reading reading : {Reading::Phase, Reading::LiteralComplex}) {
            const CaseReport report = run_case(id, reading);
            if (!report.exact_match) continue;
            CHECK(report.scalar_match.matched);
            // scalar match ignores the prefactor, so the scale recovers it
            CHECK(std::abs(report.scalar_match.scale * report.prefactor - 1.0) < 1e-9);
        }
}
