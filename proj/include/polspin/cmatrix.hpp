#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>

namespace polspin {

using Complex = std::complex<double>;

/// Dense complex matrix of dimension 2 or 3 (quartic / nonic forms).
/// Entries are stored row-major; values are immutable in practice --
/// every operation below returns a fresh matrix.
class CMatrix {
public:
    explicit CMatrix(int dim) : dim_(check_dim(dim)) { entries_.fill(Complex{}); }

    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : dim_(check_dim(static_cast<int>(rows.size()))) {
        entries_.fill(Complex{});
        int i = 0;
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != dim_)
                throw std::invalid_argument("CMatrix: ragged initializer");
            int j = 0;
            for (const Complex& v : row) set(i, j++, v);
            ++i;
        }
    }

    static CMatrix zero(int dim) { return CMatrix(dim); }

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
        return m;
    }

    int dim() const { return dim_; }

    const Complex& at(int i, int j) const { return entries_[static_cast<size_t>(i * dim_ + j)]; }

    void set(int i, int j, Complex v) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("CMatrix: non-finite entry");
        entries_[static_cast<size_t>(i * dim_ + j)] = v;
    }

    bool operator==(const CMatrix& other) const {
        if (dim_ != other.dim_) return false;
        for (int k = 0; k < dim_ * dim_; ++k)
            if (entries_[static_cast<size_t>(k)] != other.entries_[static_cast<size_t>(k)]) return false;
        return true;
    }

private:
    static int check_dim(int dim) {
        if (dim != 2 && dim != 3) throw std::invalid_argument("CMatrix: dim must be 2 or 3");
        return dim;
    }

    int dim_;
    std::array<Complex, 9> entries_;
};

/// Result of matching a matrix against a target up to one complex scalar.
/// `scale` is meaningful only when `matched` is true.
struct ScalarMatch {
    bool matched = false;
    Complex scale{};
    double residual = 0.0;
};

CMatrix mat_mul(const CMatrix& m, const CMatrix& n);
CMatrix mat_add(const CMatrix& m, const CMatrix& n);
CMatrix mat_sub(const CMatrix& m, const CMatrix& n);
CMatrix scale(const Complex& c, const CMatrix& m);

CMatrix commutator(const CMatrix& m, const CMatrix& n);
CMatrix anticommutator(const CMatrix& m, const CMatrix& n);

CMatrix adjoint(const CMatrix& m);
CMatrix transpose(const CMatrix& m);
Complex trace(const CMatrix& m);

/// Largest entrywise modulus |m_ij|.
double max_abs(const CMatrix& m);
double frobenius_distance(const CMatrix& m, const CMatrix& n);

bool is_hermitian(const CMatrix& m, double tol);
bool is_antihermitian(const CMatrix& m, double tol);

/// Finds the complex c minimizing ||m - c*target|| via the Frobenius
/// projection c = <target, m> / <target, target> (conjugate-linear in the
/// first slot). Matched iff the residual max-entry stays below tol and
/// |c| > tol, so zero matrices never match anything.
ScalarMatch scalar_multiple_of(const CMatrix& m, const CMatrix& target, double tol = 1e-9);

}  // namespace polspin
