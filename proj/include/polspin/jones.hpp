#pragma once

#include <utility>

#include "polspin/cmatrix.hpp"

namespace polspin {

/// Normalized two-component complex polarization vector, |ex|^2 + |ey|^2 = 1.
struct JonesVector {
    Complex ex{};
    Complex ey{};
};

struct PlaneWaveParams {
    double k = 1.0;  // wave number, rad/length
    double w = 1.0;  // angular frequency, rad/time
};

enum class StandardState { LinearX, LinearY, CircularRight, CircularLeft };

/// Normalizes (ex, ey) by the root of the summed squared moduli.
/// Throws for the zero vector (polarization undefined).
JonesVector make_jones(Complex ex, Complex ey);

/// The (A, B e^{i delta}) amplitude/phase constructor.
JonesVector from_amplitude_phase(double a, double b, double delta);

JonesVector standard_state(StandardState s);

/// |ex|^2 + |ey|^2; equals 1 for every constructed JonesVector.
double inner_norm(const JonesVector& j);

/// Real field components (Re Ex, Re Ey) at propagation phase kz - wt.
std::pair<double, double> evaluate_field_at_phase(const JonesVector& j, double phase);
std::pair<double, double> evaluate_field(const JonesVector& j, const PlaneWaveParams& p,
                                         double z, double t);

/// True when a = e^{i phi} b for some real phi (within tol entrywise).
bool equal_up_to_global_phase(const JonesVector& a, const JonesVector& b, double tol = 1e-12);

}  // namespace polspin
