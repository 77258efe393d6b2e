#include <doctest.h>

#include "polspin/cmatrix.hpp"
#include "polspin/pauli.hpp"
#include "test_helpers.hpp"

using namespace polspin;
using polspin::testing::random_hermitian;
using polspin::testing::random_matrix;

namespace {
const Complex I{0.0, 1.0};
}

TEST_CASE("mat_mul") {
    const CMatrix sx = pauli(Axis::X);
    CHECK(max_abs(mat_sub(mat_mul(CMatrix::identity(2), sx), sx)) == 0.0);
    CHECK(max_abs(mat_sub(mat_mul(sx, sx), CMatrix::identity(2))) == 0.0);

    const CMatrix up{{0.0, 1.0}, {0.0, 0.0}};
    const CMatrix down{{0.0, 0.0}, {1.0, 0.0}};
    const CMatrix expected{{1.0, 0.0}, {0.0, 0.0}};
    CHECK(max_abs(mat_sub(mat_mul(up, down), expected)) == 0.0);

    CHECK_THROWS_AS(mat_mul(sx, CMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("commutator and anticommutator") {
    const CMatrix sx = pauli(Axis::X), sy = pauli(Axis::Y), sz = pauli(Axis::Z);
    CHECK(max_abs(mat_sub(commutator(sx, sy), scale(2.0 * I, sz))) == 0.0);
    CHECK(max_abs(commutator(sy, sy)) == 0.0);

    // the case-3 dyad pair
    const CMatrix up{{0.0, 1.0}, {0.0, 0.0}};
    const CMatrix down{{0.0, 0.0}, {1.0, 0.0}};
    CHECK(max_abs(mat_sub(commutator(up, down), sz)) == 0.0);

    CHECK(max_abs(mat_sub(anticommutator(sx, sx), scale(2.0, CMatrix::identity(2)))) == 0.0);
    CHECK(max_abs(anticommutator(sx, sy)) == 0.0);

    std::mt19937_64 rng(1);
    const CMatrix m = random_matrix(rng);
    CHECK(max_abs(mat_sub(anticommutator(CMatrix::identity(2), m), scale(2.0, m))) == 0.0);
    CHECK_THROWS_AS(commutator(sx, CMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("commutator antisymmetry and hermiticity properties") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 500; ++trial) {
        const int dim = (trial % 2) ? 2 : 3;
        const CMatrix m = random_matrix(rng, dim), n = random_matrix(rng, dim);
        CHECK(max_abs(mat_add(commutator(m, n), commutator(n, m))) < 1e-12);
        CHECK(max_abs(mat_sub(anticommutator(m, n), anticommutator(n, m))) < 1e-12);

        const CMatrix h = random_hermitian(rng, dim), g = random_hermitian(rng, dim);
        CHECK(is_antihermitian(commutator(h, g), 1e-12));
        CHECK(is_hermitian(anticommutator(h, g), 1e-12));
        CHECK(std::abs(trace(commutator(m, n))) < 1e-10);
    }
}

TEST_CASE("scalar_multiple_of") {
    const CMatrix sy = pauli(Axis::Y), sz = pauli(Axis::Z);

    const ScalarMatch exact = scalar_multiple_of(scale(2.0 * I, sz), sz);
    CHECK(exact.matched);
    CHECK(std::abs(exact.scale - 2.0 * I) < 1e-12);

    CHECK_FALSE(scalar_multiple_of(pauli(Axis::X), sy).matched);

    const CMatrix rot{{0.0, 1.0}, {-1.0, 0.0}};
    const ScalarMatch m = scalar_multiple_of(rot, sy);
    CHECK(m.matched);
    CHECK(std::abs(m.scale - I) < 1e-12);

    CHECK_FALSE(scalar_multiple_of(CMatrix::zero(2), sz).matched);
    CHECK_THROWS_AS(scalar_multiple_of(sz, CMatrix::zero(2)), std::invalid_argument);
}

TEST_CASE("scalar_multiple_of recovers random scales") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> logmag(-6.0, 6.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    const CMatrix targets[] = {pauli(Axis::X), pauli(Axis::Y), pauli(Axis::Z),
                               CMatrix::identity(2)};
    for (int trial = 0; trial < 1000; ++trial) {
        const Complex c = std::pow(10.0, logmag(rng)) * std::polar(1.0, angle(rng));
        const CMatrix& t = targets[trial % 4];
        const ScalarMatch m = scalar_multiple_of(scale(c, t), t, 1e-9 * std::abs(c) + 1e-12);
        CHECK(m.matched);
        CHECK(std::abs(m.scale - c) < 1e-10 * std::abs(c));
    }
}

TEST_CASE("hermiticity predicates") {
    CHECK(is_hermitian(pauli(Axis::Y), 1e-12));
    CHECK(is_antihermitian(commutator(pauli(Axis::X), pauli(Axis::Y)), 1e-12));
    const CMatrix shear{{1.0, 1.0}, {0.0, 1.0}};
    CHECK_FALSE(is_hermitian(shear, 1e-12));
    CHECK_FALSE(is_antihermitian(shear, 1e-12));
}

TEST_CASE("frobenius_distance") {
    const CMatrix sx = pauli(Axis::X), sz = pauli(Axis::Z);
    CHECK(frobenius_distance(sx, sx) == 0.0);
    CHECK(frobenius_distance(sx, CMatrix::zero(2)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(frobenius_distance(sz, CMatrix::identity(2)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(frobenius_distance(sx, CMatrix::zero(3)), std::invalid_argument);

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 500; ++trial) {
        const CMatrix a = random_matrix(rng), b = random_matrix(rng), c = random_matrix(rng);
        CHECK(frobenius_distance(a, c) <=
              frobenius_distance(a, b) + frobenius_distance(b, c) + 1e-9);
    }
}

TEST_CASE("construction rejects bad input") {
    CHECK_THROWS_AS(CMatrix(4), std::invalid_argument);
    CHECK_THROWS_AS(CMatrix({{1.0, 2.0}, {3.0}}), std::invalid_argument);
    CMatrix m(2);
    CHECK_THROWS_AS(m.set(0, 0, Complex{std::nan(""), 0.0}), std::invalid_argument);
}
