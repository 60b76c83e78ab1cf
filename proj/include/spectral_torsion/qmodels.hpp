#pragma once

// Floating-point models of genuinely noncommutative spaces:
//  * the noncommutative torus in Weyl-ordered unitaries U^p, with
//    U^p U^q = exp(-i pi p.theta q) U^{p+q}, trace tau(U^p) = [p = 0] and
//    derivations delta_j(U^p) = i p_j U^p;
//  * the quantum disc, in the normal form sum z^a P_ac(y) z*^c with y = z*z,
//    y z = z phi(y), phi(y) = q^2 y + 1 - q^2, and its representation
//    pi(z) e_k = sqrt(1 - q^{2(k+1)}) e_{k+1};
//  * the SU_q(2) residue traces tau_1, tau_0^up, tau_0^down built on it.

#include <complex>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace storsion {

using Complex = std::complex<double>;

/// Real antisymmetric deformation matrix.
class ThetaMatrix {
public:
    explicit ThetaMatrix(int dim) : dim_(dim), data_(std::size_t(dim) * dim, 0.0) {}
    static ThetaMatrix random(int dim, std::mt19937_64& rng);

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return data_[std::size_t(i) * dim_ + j]; }
    /// Sets theta_ij = v and theta_ji = -v.
    void set(int i, int j, double v);
    /// p . theta q
    double pair(const std::vector<int>& p, const std::vector<int>& q) const;

    friend bool operator==(const ThetaMatrix& a, const ThetaMatrix& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

private:
    int dim_;
    std::vector<double> data_;
};

class TorusElement {
public:
    using Mode = std::vector<int>;

    explicit TorusElement(ThetaMatrix theta) : theta_(std::move(theta)) {}
    static TorusElement unit(const ThetaMatrix& theta) { return monomial(theta, Mode(theta.dim(), 0), 1.0); }
    static TorusElement monomial(const ThetaMatrix& theta, const Mode& p, Complex c);
    /// Self-adjoint element with `modes` Fourier modes: pairs c U^p + conj(c) U^{-p}.
    static TorusElement randomSelfAdjoint(const ThetaMatrix& theta, int modes, std::mt19937_64& rng);
    /// Random element with `modes` terms, not necessarily self-adjoint.
    static TorusElement random(const ThetaMatrix& theta, int modes, std::mt19937_64& rng);

    int dim() const { return theta_.dim(); }
    const ThetaMatrix& theta() const { return theta_; }
    const std::map<Mode, Complex>& coefficients() const { return coeffs_; }

    void add(const Mode& p, Complex c);
    TorusElement adjoint() const;

    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator*=(Complex s);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a += b * Complex(-1.0); }
    friend TorusElement operator*(TorusElement a, Complex s) { return a *= s; }
    friend TorusElement operator*(Complex s, TorusElement a) { return a *= s; }

    /// Largest coefficient modulus of a - b.
    friend double distance(const TorusElement& a, const TorusElement& b);

private:
    ThetaMatrix theta_;
    std::map<Mode, Complex> coeffs_;
};

TorusElement torusMul(const TorusElement& a, const TorusElement& b);
inline TorusElement operator*(const TorusElement& a, const TorusElement& b) { return torusMul(a, b); }
Complex torusTrace(const TorusElement& a);
TorusElement torusDerive(int j, const TorusElement& a);

/// Power series sum_k t^k c_k truncated after order K.
class FormalSeries {
public:
    FormalSeries(const ThetaMatrix& theta, int order);
    /// exp(s t h).
    static FormalSeries exponential(const TorusElement& h, double s, int order);

    int order() const { return static_cast<int>(terms_.size()) - 1; }
    const TorusElement& operator[](int k) const { return terms_.at(k); }
    TorusElement& operator[](int k) { return terms_.at(k); }

    FormalSeries derive(int j) const;
    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);

private:
    std::vector<TorusElement> terms_;
};

/// max over orders 0..K of |tau(k^alpha delta_j(k) k^beta)| with k = exp(t h).
double torusTraceIdentity(const TorusElement& h, int alpha, int beta, int j, int order);

/// Element of the quantum disc: sum z^a P_ac(y) z*^c, polynomials in y
/// stored by ascending power.
class QuantumDiscElement {
public:
    using Key = std::pair<int, int>;
    using Poly = std::vector<Complex>;

    explicit QuantumDiscElement(double q);
    static QuantumDiscElement scalar(double q, Complex c);
    static QuantumDiscElement z(double q);
    static QuantumDiscElement zStar(double q);
    /// y^k = (z* z)^k.
    static QuantumDiscElement yPower(double q, int k);

    double q() const { return q_; }
    const std::map<Key, Poly>& terms() const { return terms_; }

    void addTerm(int a, const Poly& p, int c);
    QuantumDiscElement adjoint() const;

    QuantumDiscElement& operator+=(const QuantumDiscElement& o);
    QuantumDiscElement& operator*=(Complex s);
    friend QuantumDiscElement operator+(QuantumDiscElement a, const QuantumDiscElement& b) { return a += b; }
    friend QuantumDiscElement operator-(QuantumDiscElement a, const QuantumDiscElement& b) {
        return a += b * Complex(-1.0);
    }
    friend QuantumDiscElement operator*(QuantumDiscElement a, Complex s) { return a *= s; }
    friend QuantumDiscElement operator*(const QuantumDiscElement& a, const QuantumDiscElement& b);

private:
    double q_;
    std::map<Key, Poly> terms_;
};

/// pi(x) restricted to span(e_0 .. e_N), computed from the normal form.
Eigen::MatrixXcd discRepresent(const QuantumDiscElement& x, int truncation);

/// sum_{k <= N} <e_k, pi(x) e_k>.
Complex discPartialTrace(const QuantumDiscElement& x, int truncation);
/// (1/2 pi) int_{S^1} sigma(x), sigma(z) = e^{i theta}, sigma(y) = 1.
Complex tau1(const QuantumDiscElement& x);

/// A truncated limit together with the change from the half truncation.
struct LimitEstimate {
    Complex value;
    double change;
};
LimitEstimate tau0Up(const QuantumDiscElement& x, int truncation);
LimitEstimate tau0Down(const QuantumDiscElement& x, int truncation);

/// |tau_0^up(x) - tau_0^down(x) + tau_1(x)| at the given truncation.
double suq2ResidueCancellation(const QuantumDiscElement& x, int truncation);
/// |tau_1(x)(tau_0^up - tau_0^down)(y) + (tau_0^down - tau_0^up)(x) tau_1(y)|.
double suq2PairedCombination(const QuantumDiscElement& x, const QuantumDiscElement& y, int truncation);

/// Eigenvalues 2j + 3/2 with multiplicity (2j+1)(2j+2) and -(2j + 1/2) with
/// multiplicity (2j+1)(2j), j in {0, 1/2, 1, ...}.
struct Suq2DiracSpec {
    static double upEigenvalue(double j) { return 2 * j + 1.5; }
    static double downEigenvalue(double j) { return -(2 * j + 0.5); }
    static double upMultiplicity(double j) { return (2 * j + 1) * (2 * j + 2); }
    static double downMultiplicity(double j) { return (2 * j + 1) * (2 * j); }

    /// sum over j <= cutoff of multiplicity * |eigenvalue|^{-s}.
    static double zetaPartialSum(double s, double cutoff);
    /// Ratio of the partial-sum increments over (c/2, c] and (c/4, c/2];
    /// below 1 for a convergent series, above 1 for a growing one.
    static double dyadicIncrementRatio(double s, double cutoff);
};

}  // namespace storsion
