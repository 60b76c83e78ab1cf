#include "spectral_torsion/matrix.hpp"

namespace storsion {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ComplexMatrix ComplexMatrix::unit(std::size_t n, std::size_t row, std::size_t col) {
    ComplexMatrix m(n);
    m(row, col) = 1;
    return m;
}

bool ComplexMatrix::isZero() const {
    for (const auto& z : data_) {
        if (!z.isZero()) return false;
    }
    return true;
}

ComplexRational ComplexMatrix::trace() const {
    ComplexRational t;
    for (std::size_t k = 0; k < n_; ++k) t += (*this)(k, k);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c).conj();
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    requireSameSize(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    requireSameSize(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(const ComplexRational& s) {
    for (auto& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.requireSameSize(b);
    const std::size_t n = a.n_;
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            const auto& x = a(r, k);
            if (x.isZero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                const auto& y = b(k, c);
                if (!y.isZero()) m(r, c) += x * y;
            }
        }
    }
    return m;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.n_ == b.n_ && a.data_ == b.data_;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    const std::size_t na = a.size(), nb = b.size();
    ComplexMatrix m(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            if (a(i, j).isZero()) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l) m(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
        }
    return m;
}

}  // namespace storsion
