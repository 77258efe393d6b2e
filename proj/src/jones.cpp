#include "polspin/jones.hpp"

#include <cmath>
#include <stdexcept>

namespace polspin {

JonesVector make_jones(Complex ex, Complex ey) {
    const double n2 = std::norm(ex) + std::norm(ey);
    if (n2 == 0.0) throw std::invalid_argument("make_jones: zero vector has no polarization state");
    const double inv = 1.0 / std::sqrt(n2);
    return {ex * inv, ey * inv};
}

JonesVector from_amplitude_phase(double a, double b, double delta) {
    return make_jones(Complex{a, 0.0}, b * std::polar(1.0, delta));
}

JonesVector standard_state(StandardState s) {
    constexpr double inv_sqrt2 = 0.70710678118654752440;
    switch (s) {
        case StandardState::LinearX: return {Complex{1.0, 0.0}, Complex{0.0, 0.0}};
        case StandardState::LinearY: return {Complex{0.0, 0.0}, Complex{1.0, 0.0}};
        case StandardState::CircularRight: return {Complex{inv_sqrt2, 0.0}, Complex{0.0, -inv_sqrt2}};
        case StandardState::CircularLeft: return {Complex{inv_sqrt2, 0.0}, Complex{0.0, inv_sqrt2}};
    }
    throw std::invalid_argument("standard_state: unknown state");
}

double inner_norm(const JonesVector& j) {
    return std::norm(j.ex) + std::norm(j.ey);
}

std::pair<double, double> evaluate_field_at_phase(const JonesVector& j, double phase) {
    const Complex propagator = std::polar(1.0, phase);
    return {(j.ex * propagator).real(), (j.ey * propagator).real()};
}

std::pair<double, double> evaluate_field(const JonesVector& j, const PlaneWaveParams& p,
                                         double z, double t) {
    return evaluate_field_at_phase(j, p.k * z - p.w * t);
}

bool equal_up_to_global_phase(const JonesVector& a, const JonesVector& b, double tol) {
    // Phase that aligns the larger component, then compare entrywise.
    const bool use_x = std::abs(b.ex) >= std::abs(b.ey);
    const Complex num = use_x ? a.ex : a.ey;
    const Complex den = use_x ? b.ex : b.ey;
    if (std::abs(den) == 0.0) return std::abs(num) <= tol;
    const Complex phase = num / den;
    if (std::abs(std::abs(phase) - 1.0) > tol) return false;
    return std::abs(a.ex - phase * b.ex) <= tol && std::abs(a.ey - phase * b.ey) <= tol;
}

}  // namespace polspin
