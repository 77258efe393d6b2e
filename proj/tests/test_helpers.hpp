#pragma once

#include <random>

#include "polspin/cmatrix.hpp"
#include "polspin/dyadics.hpp"

namespace polspin::testing {

inline CMatrix random_matrix(std::mt19937_64& rng, int dim = 2) {
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m.set(i, j, Complex{dist(rng), dist(rng)});
    return m;
}

inline CMatrix random_hermitian(std::mt19937_64& rng, int dim = 2) {
    const CMatrix m = random_matrix(rng, dim);
    return scale(0.5, mat_add(m, adjoint(m)));
}

/// Random parameters away from the degenerate (zero-norm) region.
inline DyadParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> amp(-2.0, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    for (;;) {
        DyadParams p{amp(rng), amp(rng), angle(rng), amp(rng), amp(rng), angle(rng)};
        if (p.a * p.a + p.b * p.b > 1e-2 && p.c * p.c + p.d * p.d > 1e-2) return p;
    }
}

}  // namespace polspin::testing
