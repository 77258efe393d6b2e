#pragma once

#include "polspin/cmatrix.hpp"

namespace polspin {

enum class Axis { X, Y, Z };
enum class LadderSign { Plus, Minus };

struct SpinConfig {
    double hbar = 1.0;
};

/// Aggregated result of the sigma_j^2 = I, anticommutation, and
/// commutation checks.
struct AlgebraReport {
    bool squares_ok = false;
    bool anticommutation_ok = false;
    bool commutation_ok = false;
    double max_residual = 0.0;
};

CMatrix pauli(Axis axis);

/// S_j = (hbar/2) sigma_j.
CMatrix spin_operator(Axis axis, const SpinConfig& cfg = {});

/// S_pm = S_x +- i S_y; at s = 1/2 this is hbar*[[0,1],[0,0]] (Plus) /
/// hbar*[[0,0],[1,0]] (Minus).
CMatrix ladder(LadderSign sign, const SpinConfig& cfg = {});

/// sqrt(s(s+1) - m(m +- 1)); callers apply the hbar factor. Throws when m
/// is not one of -s, -s+1, ..., s.
double ladder_coefficient(double s, double m, LadderSign sign);

int levi_civita(Axis j, Axis k, Axis l);

/// Checks sigma_j^2 = I, {sigma_j,sigma_k} = 2 delta_jk I, and
/// [sigma_j,sigma_k] = 2i eps_jkl sigma_l over all index combinations.
AlgebraReport verify_algebra(double tol);

/// Same checks against caller-supplied candidate matrices (lets tests
/// inject faults).
AlgebraReport verify_algebra(const CMatrix& sx, const CMatrix& sy, const CMatrix& sz, double tol);

}  // namespace polspin
