#pragma once

// Floating-point reference for residue densities of constant-coefficient
// first-order operators P(xi) = sum_j xi_j A_j + B with (sum xi_j A_j)^2 = |xi|^2.
// For such operators the full symbol of P |P|^{-n} is the matrix function
// itself, so its degree -n part on the unit sphere is
//     d/de [ (A.xi + e B) |A.xi + e B|^{-n} ] at e = 0,
// a quadratic polynomial in xi, integrated exactly by the cross-polytope rule.
// No symbol calculus is involved.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "spectral_torsion/matrix.hpp"
#include "spectral_torsion/torsion.hpp"

namespace oracle_test {

using Mat = Eigen::MatrixXcd;

inline Mat toEigen(const storsion::ComplexMatrix& m) {
    Mat out(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) out(r, c) = m(r, c).toComplex();
    return out;
}

inline Mat pauli(int k) {
    Mat s = Mat::Zero(2, 2);
    const std::complex<double> i(0, 1);
    if (k == 0) s << 1, 0, 0, 1;
    if (k == 1) s << 0, 1, 1, 0;
    if (k == 2) s << 0, -i, i, 0;
    if (k == 3) s << 1, 0, 0, -1;
    return s;
}

inline Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
}

/// Gamma matrices with Tr(1) = 2^m: Pauli products for even n; for odd n the
/// irreducible set (last generator = chirality of the first n-1) doubled as G (+) -G.
inline std::vector<Mat> gammas(int n) {
    const int half = n / 2;
    std::vector<Mat> g;
    for (int k = 0; k < half; ++k)
        for (int which : {1, 2}) {
            Mat m = Mat::Identity(1, 1);
            for (int slot = 0; slot < half; ++slot) m = kron(m, slot < k ? pauli(3) : slot == k ? pauli(which) : pauli(0));
            g.push_back(m);
        }
    if (n % 2 == 0) return g;
    const int dim = 1 << half;
    Mat top = Mat::Identity(dim, dim);
    for (const auto& m : g) top = top * m;
    top *= std::pow(std::complex<double>(0, -1), half);
    g.push_back(top);
    for (auto& m : g) {
        Mat d = Mat::Zero(2 * dim, 2 * dim);
        d.topLeftCorner(dim, dim) = m;
        d.bottomRightCorner(dim, dim) = -m;
        m = d;
    }
    return g;
}

inline Mat embed(const storsion::Multivector& x, const std::vector<Mat>& g) {
    const int size = static_cast<int>(g.front().rows());
    Mat out = Mat::Zero(size, size);
    for (const auto& [mask, c] : x.terms()) {
        Mat w = Mat::Identity(size, size);
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            if (mask & (storsion::BladeMask{1} << i)) w = w * g[i];
        out += c.toComplex() * w;
    }
    return out;
}

inline Mat embed(const storsion::BasicMultivector<storsion::ComplexMatrix>& x, const std::vector<Mat>& g,
                 int coefficientSize) {
    const int size = static_cast<int>(g.front().rows());
    Mat out = Mat::Zero(size * coefficientSize, size * coefficientSize);
    for (const auto& [mask, c] : x.terms()) {
        Mat w = Mat::Identity(size, size);
        for (int i = 0; i < static_cast<int>(g.size()); ++i)
            if (mask & (storsion::BladeMask{1} << i)) w = w * g[i];
        out += kron(w, toEigen(c));
    }
    return out;
}

/// Hermitian matrix power |h|^{-n}.
inline Mat absPower(const Mat& h, int n) {
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    Eigen::VectorXd d = es.eigenvalues();
    for (int i = 0; i < d.size(); ++i) d[i] = std::pow(std::abs(d[i]), -n);
    return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
}

/// Sphere average of the degree -n symbol of P |P|^{-n}.
inline Mat residueKernel(const std::vector<Mat>& a, const Mat& b, int n) {
    const Mat zero = Mat::Zero(b.rows(), b.cols());
    // The derivative is linear in b; differentiate along the unit direction.
    const double scale = b.norm();
    if (scale == 0) return zero;
    const Mat dir = b / scale;
    auto f = [&](const Mat& pxi, double e) {
        const Mat p = pxi + e * dir;
        return Mat(p * absPower(p, n));
    };
    Mat avg = zero;
    for (int j = 0; j < n; ++j)
        for (double sign : {1.0, -1.0}) {
            const Mat pxi = sign * a[j];
            // Richardson-extrapolated central difference.
            const double h = 1e-3;
            const Mat d1 = (f(pxi, h) - f(pxi, -h)) / (2 * h);
            const Mat d2 = (f(pxi, h / 2) - f(pxi, -h / 2)) / h;
            avg += (4.0 * d2 - d1) / 3.0;
        }
    return avg * (scale / (2.0 * n));
}

/// Density multiplier of W(P D_T |D_T|^{-n}) for the flat Dirac operator with torsion.
inline std::complex<double> torsionDensity(const storsion::Multivector& p, const storsion::TorsionTensor& t, int n) {
    const auto g = gammas(n);
    std::vector<Mat> a;
    for (const auto& m : g) a.push_back(-m);
    const int size = static_cast<int>(g.front().rows());
    Mat b = Mat::Zero(size, size);
    for (int j = 0; j < n; ++j)
        for (int q = 0; q < n; ++q)
            for (int s = 0; s < n; ++s) b += t(j, q, s).get_d() * g[j] * g[q] * g[s];
    b *= std::complex<double>(0, -1.0 / 8);
    return (embed(p, g) * residueKernel(a, b, n)).trace();
}

}  // namespace oracle_test
