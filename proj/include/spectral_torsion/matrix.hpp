#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "spectral_torsion/rational.hpp"

namespace storsion {

/// Dense square matrix over exact Gaussian rationals. Serves as the
/// coefficient algebra for matrix-valued symbols (M_N, End(M_N), 2x2 blocks).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix unit(std::size_t n, std::size_t row, std::size_t col);

    std::size_t size() const { return n_; }

    ComplexRational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const ComplexRational& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    bool isZero() const;
    ComplexRational trace() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(const ComplexRational& s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, const ComplexRational& s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexRational& s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator-(ComplexMatrix a) { return a *= ComplexRational(-1); }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b);
    friend bool operator!=(const ComplexMatrix& a, const ComplexMatrix& b) { return !(a == b); }

private:
    void requireSameSize(const ComplexMatrix& o) const {
        if (o.n_ != n_) throw std::invalid_argument("matrix size mismatch");
    }

    std::size_t n_ = 0;
    std::vector<ComplexRational> data_;
};

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

inline bool isZero(const ComplexMatrix& m) { return m.isZero(); }
inline ComplexRational coefficientTrace(const ComplexMatrix& m) { return m.trace(); }
inline ComplexMatrix adjoint(const ComplexMatrix& m) { return m.adjoint(); }
inline bool isIdentity(const ComplexMatrix& m) { return m == ComplexMatrix::identity(m.size()); }

}  // namespace storsion
