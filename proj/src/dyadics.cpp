#include "polspin/dyadics.hpp"

#include <cmath>
#include <stdexcept>

namespace polspin {

namespace {

constexpr double kDegenerateNorm = 1e-12;

Complex phase(double angle) { return std::polar(1.0, angle); }

struct LiteralAmplitudes {
    Complex a, b, c, d;
};

// The case-study substitution: "B = i" becomes the complex literal
// b*e^{i alpha} while the printed grid keeps its own e^{i alpha} factor.
LiteralAmplitudes literal_amplitudes(const DyadParams& p) {
    return {Complex{p.a, 0.0}, p.b * phase(p.alpha), Complex{p.c, 0.0}, p.d * phase(p.beta)};
}

}  // namespace

CMatrix outer(const std::vector<Complex>& u, const std::vector<Complex>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("outer: mixed vector dimensions");
    if (u.size() != 2 && u.size() != 3) throw std::invalid_argument("outer: dimension must be 2 or 3");
    const int dim = static_cast<int>(u.size());
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            m.set(i, j, u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)]);
    return m;
}

CMatrix outer(const JonesVector& u, const JonesVector& v) {
    return outer(std::vector<Complex>{u.ex, u.ey}, std::vector<Complex>{v.ex, v.ey});
}

CMatrix outer_conj(const JonesVector& u, const JonesVector& v) {
    return outer(std::vector<Complex>{u.ex, u.ey},
                 std::vector<Complex>{std::conj(v.ex), std::conj(v.ey)});
}

Normalizers normalizers(const DyadParams& p) {
    const double n1 = p.a * p.a + p.b * p.b;
    const double n2 = p.c * p.c + p.d * p.d;
    if (n1 < kDegenerateNorm || n2 < kDegenerateNorm)
        throw std::invalid_argument("normalizers: degenerate (near-zero) Jones vector");
    return {1.0 / std::sqrt(n1 * n2), 1.0 / n1, 1.0 / n2};
}

std::pair<CMatrix, CMatrix> build_pair(const DyadParams& p, Reading reading) {
    const Normalizers norm = normalizers(p);
    if (reading == Reading::Phase) {
        const JonesVector j1 = from_amplitude_phase(p.a, p.b, p.alpha);
        const JonesVector j2 = from_amplitude_phase(p.c, p.d, p.beta);
        return {outer(j1, j2), outer(j2, j1)};
    }
    const LiteralAmplitudes lit = literal_amplitudes(p);
    CMatrix d1(2);
    d1.set(0, 0, lit.a * lit.c);
    d1.set(0, 1, lit.a * lit.d * phase(p.beta));
    d1.set(1, 0, lit.b * lit.c * phase(p.alpha));
    d1.set(1, 1, lit.b * lit.d * phase(p.alpha + p.beta));
    d1 = scale(norm.e, d1);
    return {d1, transpose(d1)};
}

std::pair<CMatrix, CMatrix> build_projectors(const DyadParams& p, Reading reading) {
    JonesVector j1, j2;
    if (reading == Reading::Phase) {
        j1 = from_amplitude_phase(p.a, p.b, p.alpha);
        j2 = from_amplitude_phase(p.c, p.d, p.beta);
    } else {
        const LiteralAmplitudes lit = literal_amplitudes(p);
        j1 = make_jones(lit.a, lit.b * phase(p.alpha));
        j2 = make_jones(lit.c, lit.d * phase(p.beta));
    }
    return {outer_conj(j1, j1), outer_conj(j2, j2)};
}

ClosedFormEntries commutator_closed_form(const DyadParams& p) {
    const double a = p.a, b = p.b, c = p.c, d = p.d;
    const Complex ea = phase(p.alpha);
    const Complex eb = phase(p.beta);
    ClosedFormEntries out;
    out.a11 = a * a * eb * eb * d * d - ea * ea * b * b * c * c;
    out.a12 = -a * a * eb * c * d + ea * a * b * (c * c + eb * eb * d * d) -
              b * b * c * d * phase(2.0 * p.alpha + p.beta);
    out.a21 = out.a12;
    out.a22 = b * b * c * c * ea * ea - a * a * d * d * eb * eb;
    return out;
}

ProjectorOffDiagonal projector_commutator_closed_form(const DyadParams& p) {
    const double a = p.a, b = p.b, c = p.c, d = p.d;
    const double f = 1.0 / (a * a + b * b);
    const double g = 1.0 / (c * c + d * d);
    const double a2mb2 = a * a - b * b;
    const double d2mc2 = d * d - c * c;
    ProjectorOffDiagonal out;
    out.printed = f * g * a * b * phase(-(p.alpha + p.beta)) *
                  (a2mb2 * phase(p.alpha) + d2mc2 * phase(p.beta));
    out.derived = f * g *
                  (c * d * phase(-p.beta) * a2mb2 + a * b * phase(-p.alpha) * d2mc2);
    return out;
}

}  // namespace polspin
