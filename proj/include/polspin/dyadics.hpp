#pragma once

#include <utility>
#include <vector>

#include "polspin/cmatrix.hpp"
#include "polspin/jones.hpp"

namespace polspin {

/// The six construction parameters A, B, alpha, C, D, beta.
struct DyadParams {
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;  // rad
    double c = 0.0;
    double d = 0.0;
    double beta = 0.0;  // rad
};

/// E = 1/(sqrt(|A|^2+|B|^2) * sqrt(|C|^2+|D|^2)), F = 1/(|A|^2+|B|^2),
/// G = 1/(|C|^2+|D|^2).
struct Normalizers {
    double e = 0.0;
    double f = 0.0;
    double g = 0.0;
};

/// How the case-study inputs like "B = i" are substituted: as a real
/// amplitude with its own phase (Phase), or as a complex literal pushed
/// into the printed dyad grid with the phase factors still applied on
/// top (LiteralComplex).
enum class Reading { Phase, LiteralComplex };

/// The four closed-form commutator entries; [D1,D2] = E^2 * (a_ij).
struct ClosedFormEntries {
    Complex a11{}, a12{}, a21{}, a22{};
};

/// Off-diagonal (1,2) entry of [D_I, D_II], evaluated two ways: the
/// expression as printed, and the one derived from direct multiplication
/// of the projector dyads. They coincide exactly when CD = AB.
struct ProjectorOffDiagonal {
    Complex printed{};
    Complex derived{};
};

/// Plain outer product M_ij = u_i v_j, no conjugation. Vectors must share
/// a dimension of 2 or 3.
CMatrix outer(const std::vector<Complex>& u, const std::vector<Complex>& v);
CMatrix outer(const JonesVector& u, const JonesVector& v);

/// Conjugated outer product M_ij = u_i conj(v_j).
CMatrix outer_conj(const JonesVector& u, const JonesVector& v);

Normalizers normalizers(const DyadParams& p);

/// The dyad pair (D1, D2) = (J1 J2, J2 J1) under the chosen reading.
std::pair<CMatrix, CMatrix> build_pair(const DyadParams& p, Reading reading);

/// The projector dyads (D_I, D_II) = (J1 J1*, J2 J2*); Hermitian,
/// idempotent, trace 1.
std::pair<CMatrix, CMatrix> build_projectors(const DyadParams& p, Reading reading);

ClosedFormEntries commutator_closed_form(const DyadParams& p);

ProjectorOffDiagonal projector_commutator_closed_form(const DyadParams& p);

}  // namespace polspin
