#include "polspin/cmatrix.hpp"

#include <algorithm>

namespace polspin {

namespace {

void require_same_dim(const CMatrix& m, const CMatrix& n) {
    if (m.dim() != n.dim()) throw std::invalid_argument("incompatible matrix dimensions");
}

}  // namespace

CMatrix mat_mul(const CMatrix& m, const CMatrix& n) {
    require_same_dim(m, n);
    CMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            Complex acc{};
            for (int k = 0; k < m.dim(); ++k) acc += m.at(i, k) * n.at(k, j);
            out.set(i, j, acc);
        }
    return out;
}

CMatrix mat_add(const CMatrix& m, const CMatrix& n) {
    require_same_dim(m, n);
    CMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.set(i, j, m.at(i, j) + n.at(i, j));
    return out;
}

CMatrix mat_sub(const CMatrix& m, const CMatrix& n) {
    require_same_dim(m, n);
    CMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.set(i, j, m.at(i, j) - n.at(i, j));
    return out;
}

CMatrix scale(const Complex& c, const CMatrix& m) {
    CMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.set(i, j, c * m.at(i, j));
    return out;
}

CMatrix commutator(const CMatrix& m, const CMatrix& n) {
    return mat_sub(mat_mul(m, n), mat_mul(n, m));
}

CMatrix anticommutator(const CMatrix& m, const CMatrix& n) {
    return mat_add(mat_mul(m, n), mat_mul(n, m));
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.set(i, j, std::conj(m.at(j, i)));
    return out;
}

CMatrix transpose(const CMatrix& m) {
    CMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.set(i, j, m.at(j, i));
    return out;
}

Complex trace(const CMatrix& m) {
    Complex acc{};
    for (int i = 0; i < m.dim(); ++i) acc += m.at(i, i);
    return acc;
}

double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) best = std::max(best, std::abs(m.at(i, j)));
    return best;
}

double frobenius_distance(const CMatrix& m, const CMatrix& n) {
    require_same_dim(m, n);
    double acc = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) acc += std::norm(m.at(i, j) - n.at(i, j));
    return std::sqrt(acc);
}

bool is_hermitian(const CMatrix& m, double tol) {
    return max_abs(mat_sub(m, adjoint(m))) <= tol;
}

bool is_antihermitian(const CMatrix& m, double tol) {
    return max_abs(mat_add(m, adjoint(m))) <= tol;
}

ScalarMatch scalar_multiple_of(const CMatrix& m, const CMatrix& target, double tol) {
    require_same_dim(m, target);
    Complex num{};
    double den = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) {
            num += std::conj(target.at(i, j)) * m.at(i, j);
            den += std::norm(target.at(i, j));
        }
    if (den == 0.0) throw std::invalid_argument("scalar_multiple_of: zero target");
    const Complex c = num / den;
    ScalarMatch result;
    result.residual = max_abs(mat_sub(m, scale(c, target)));
    result.matched = result.residual < tol && std::abs(c) > tol;
    if (result.matched) result.scale = c;
    return result;
}

}  // namespace polspin
