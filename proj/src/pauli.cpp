#include "polspin/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace polspin {

namespace {

constexpr Complex kI{0.0, 1.0};

constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

}  // namespace

CMatrix pauli(Axis axis) {
    switch (axis) {
        case Axis::X: return {{0.0, 1.0}, {1.0, 0.0}};
        case Axis::Y: return {{0.0, -kI}, {kI, 0.0}};
        case Axis::Z: return {{1.0, 0.0}, {0.0, -1.0}};
    }
    throw std::invalid_argument("pauli: unknown axis");
}

CMatrix spin_operator(Axis axis, const SpinConfig& cfg) {
    return scale(cfg.hbar / 2.0, pauli(axis));
}

CMatrix ladder(LadderSign sign, const SpinConfig& cfg) {
    const Complex factor = (sign == LadderSign::Plus) ? kI : -kI;
    return mat_add(spin_operator(Axis::X, cfg), scale(factor, spin_operator(Axis::Y, cfg)));
}

double ladder_coefficient(double s, double m, LadderSign sign) {
    const double steps = s - m;
    if (m < -s || m > s || std::abs(steps - std::round(steps)) > 1e-9)
        throw std::invalid_argument("ladder_coefficient: m is not on the ladder -s..s");
    const double shift = (sign == LadderSign::Plus) ? 1.0 : -1.0;
    return std::sqrt(s * (s + 1.0) - m * (m + shift));
}

int levi_civita(Axis j, Axis k, Axis l) {
    if (j == k || k == l || j == l) return 0;
    const int a = static_cast<int>(j), b = static_cast<int>(k), c = static_cast<int>(l);
    return ((b - a + 3) % 3 == 1 && (c - b + 3) % 3 == 1) ? 1 : -1;
}

AlgebraReport verify_algebra(const CMatrix& sx, const CMatrix& sy, const CMatrix& sz,
                             double tol) {
    if (tol <= 0.0) throw std::invalid_argument("verify_algebra: tol must be positive");
    const std::array<CMatrix, 3> sigma{sx, sy, sz};
    AlgebraReport report;
    report.squares_ok = true;
    report.anticommutation_ok = true;
    report.commutation_ok = true;
    const CMatrix eye = CMatrix::identity(2);

    for (const CMatrix& s : sigma) {
        const double r = max_abs(mat_sub(mat_mul(s, s), eye));
        report.max_residual = std::max(report.max_residual, r);
        if (r > tol) report.squares_ok = false;
    }
    for (Axis j : kAxes)
        for (Axis k : kAxes) {
            const CMatrix& mj = sigma[static_cast<size_t>(j)];
            const CMatrix& mk = sigma[static_cast<size_t>(k)];
            const double delta = (j == k) ? 2.0 : 0.0;
            const double r = max_abs(mat_sub(anticommutator(mj, mk), scale(delta, eye)));
            report.max_residual = std::max(report.max_residual, r);
            if (r > tol) report.anticommutation_ok = false;
        }
    for (Axis j : kAxes)
        for (Axis k : kAxes) {
            CMatrix expected = CMatrix::zero(2);
            for (Axis l : kAxes)
                expected = mat_add(expected,
                                   scale(2.0 * kI * static_cast<double>(levi_civita(j, k, l)),
                                         sigma[static_cast<size_t>(l)]));
            const CMatrix& mj = sigma[static_cast<size_t>(j)];
            const CMatrix& mk = sigma[static_cast<size_t>(k)];
            const double r = max_abs(mat_sub(commutator(mj, mk), expected));
            report.max_residual = std::max(report.max_residual, r);
            if (r > tol) report.commutation_ok = false;
        }
    return report;
}

AlgebraReport verify_algebra(double tol) {
    return verify_algebra(pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z), tol);
}

}  // namespace polspin
