#pragma once

// Almost-commutative models over a flat even-dimensional base:
//  * Einstein-Yang-Mills: D~ = D (x) 1 + i gamma^a Ad_{X_a} acting on spinors (x) M_N,
//    with coefficients in End(M_N) (N^2 x N^2 matrices, basis E_ab -> a*N + b).
//  * Two-sheeted space M x Z_2: Dirac operator [[D, gamma Phi], [gamma Phi*, D]]
//    with coefficients in 2x2 block matrices.

#include <array>
#include <random>
#include <vector>

#include "spectral_torsion/matrix.hpp"
#include "spectral_torsion/residue.hpp"
#include "spectral_torsion/torsion.hpp"

namespace storsion {

using BlockMultivector = BasicMultivector<ComplexMatrix>;

/// ad_X = [X, .] on M_N as an N^2 x N^2 matrix: entry ((r,t),(a,b)) = X_ra d_tb - d_ra X_bt.
ComplexMatrix adjointMatrix(const ComplexMatrix& x);
/// Left multiplication by X on M_N.
ComplexMatrix leftMultiplication(const ComplexMatrix& x);
/// Trace of ad_X; zero for every X.
ComplexRational adjointTrace(const ComplexMatrix& x);

/// Random traceless anti-Hermitian N x N matrix with small Gaussian-rational entries.
ComplexMatrix randomSuN(std::size_t n, std::mt19937_64& rng);
/// Random N x N matrix with small Gaussian-rational entries.
ComplexMatrix randomMatrix(std::size_t n, std::mt19937_64& rng);

class EymModel {
public:
    /// X_a must be anti-Hermitian and traceless; n even.
    EymModel(int dim, std::size_t matrixSize, std::vector<ComplexMatrix> fields);
    static EymModel random(int dim, std::size_t matrixSize, std::mt19937_64& rng);

    int dim() const { return dim_; }
    std::size_t matrixSize() const { return n_; }
    const std::vector<ComplexMatrix>& fields() const { return x_; }

    /// The same model with every X_a scaled by lambda (real).
    EymModel scaled(const Rational& lambda) const;

private:
    int dim_;
    std::size_t n_;
    std::vector<ComplexMatrix> x_;
};

/// One-form gamma^a u_a with M_N-valued components acting by left multiplication.
using MatrixOneForm = std::vector<ComplexMatrix>;

MatrixOneForm randomMatrixOneForm(int dim, std::size_t matrixSize, std::mt19937_64& rng);

/// sigma(D~) = -gamma^a xi_a (x) 1 + i gamma^a (x) ad_{X_a}.
SymbolSum<ComplexMatrix> eymDiracSymbol(const EymModel& model);
/// sigma_{-n}(u v w D~ |D~|^{-n}) before sphere integration and trace.
HomogeneousSymbol<ComplexMatrix> eymSigmaMinusN(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                                                const MatrixOneForm& w);
/// Sphere-integrated sigma_{-n}, still Cl (x) End(M_N) valued.
BlockMultivector eymResidueKernel(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                                  const MatrixOneForm& w);
/// Torsion functional density of D~.
ResidueValue eymTorsionDensity(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                               const MatrixOneForm& w);

/// omega = [[w+, Phi gamma f+], [Phi* gamma f-, w-]] with gamma the chirality element.
struct DoubledOneForm {
    OneForm wPlus;
    OneForm wMinus;
    Rational fPlus{0};
    Rational fMinus{0};
    ComplexRational phi;

    DoubledOneForm diagonalPart() const { return {wPlus, wMinus, 0, 0, phi}; }
    DoubledOneForm offDiagonalPart() const;

    /// Cl (x) M_2 valued multiplication operator.
    BlockMultivector toMultivector(int dim) const;
};

/// sigma(D) = -gamma^a xi_a (x) 1 + gamma (x) [[0, Phi], [Phi*, 0]].
SymbolSum<ComplexMatrix> doubledDiracSymbol(const ComplexRational& phi, int dim);

/// W(omega1 omega2 omega3 D |D|^{-n}) on the doubled space; n even; all Phi equal.
ResidueValue doubledResidue(const DoubledOneForm& w1, const DoubledOneForm& w2, const DoubledOneForm& w3, int dim);

/// The four pure cases (ddd, ddo, doo, ooo) of the diagonal/off-diagonal split,
/// each computed by the pipeline and predicted from the metric and volume functionals.
struct DoubledCase {
    const char* name;
    ResidueValue computed;
    ResidueValue predicted;
};
std::array<DoubledCase, 4> doubledFourCaseTable(const DoubledOneForm& w1, const DoubledOneForm& w2,
                                                const DoubledOneForm& w3, int dim);

/// Basis of the doubled one-forms: w+ = e^a, w- = e^a, f+ = 1, f- = 1.
std::vector<DoubledOneForm> doubledSpanningSet(const ComplexRational& phi, int dim);

/// True iff the doubled residue vanishes on every triple of the spanning set.
bool doubledTorsionFreeTest(const ComplexRational& phi, int dim = 4);

}  // namespace storsion
