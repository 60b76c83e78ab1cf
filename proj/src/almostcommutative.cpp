#include "spectral_torsion/almostcommutative.hpp"

#include <stdexcept>

namespace storsion {

ComplexMatrix leftMultiplication(const ComplexMatrix& x) { return kron(x, ComplexMatrix::identity(x.size())); }

ComplexMatrix adjointMatrix(const ComplexMatrix& x) {
    // Right multiplication M -> M X has matrix 1 (x) X^T in the row-major E basis.
    return leftMultiplication(x) - kron(ComplexMatrix::identity(x.size()), x.transpose());
}

ComplexRational adjointTrace(const ComplexMatrix& x) { return adjointMatrix(x).trace(); }

ComplexMatrix randomMatrix(std::size_t n, std::mt19937_64& rng) {
    ComplexMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = ComplexRational(randomSmallRational(rng), randomSmallRational(rng));
    return m;
}

ComplexMatrix randomSuN(std::size_t n, std::mt19937_64& rng) {
    const ComplexMatrix a = randomMatrix(n, rng);
    ComplexMatrix x = a - a.adjoint();
    const ComplexRational shift = x.trace() * ComplexRational(Rational(1, static_cast<long>(n)));
    for (std::size_t k = 0; k < n; ++k) x(k, k) -= shift;
    return x;
}

EymModel::EymModel(int dim, std::size_t matrixSize, std::vector<ComplexMatrix> fields)
    : dim_(dim), n_(matrixSize), x_(std::move(fields)) {
    if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("EYM model needs an even base dimension");
    if (matrixSize < 1) throw std::invalid_argument("matrix size must be positive");
    if (static_cast<int>(x_.size()) != dim) throw std::invalid_argument("need one gauge field component per direction");
    for (const auto& x : x_) {
        if (x.size() != n_) throw std::invalid_argument("gauge field has wrong matrix size");
        if (x.adjoint() != -x) throw std::invalid_argument("gauge field must be anti-Hermitian");
        if (!x.trace().isZero()) throw std::invalid_argument("gauge field must be traceless");
    }
}

EymModel EymModel::random(int dim, std::size_t matrixSize, std::mt19937_64& rng) {
    std::vector<ComplexMatrix> x;
    for (int a = 0; a < dim; ++a) x.push_back(randomSuN(matrixSize, rng));
    return EymModel(dim, matrixSize, std::move(x));
}

EymModel EymModel::scaled(const Rational& lambda) const {
    std::vector<ComplexMatrix> x;
    for (const auto& m : x_) x.push_back(m * ComplexRational(lambda));
    return EymModel(dim_, n_, std::move(x));
}

MatrixOneForm randomMatrixOneForm(int dim, std::size_t matrixSize, std::mt19937_64& rng) {
    MatrixOneForm u;
    for (int a = 0; a < dim; ++a) u.push_back(randomMatrix(matrixSize, rng));
    return u;
}

SymbolSum<ComplexMatrix> eymDiracSymbol(const EymModel& model) {
    using HS = HomogeneousSymbol<ComplexMatrix>;
    const int n = model.dim();
    const std::size_t big = model.matrixSize() * model.matrixSize();
    const ComplexMatrix one = ComplexMatrix::identity(big);
    std::vector<BlockMultivector> lead;
    BlockMultivector potential(n);
    for (int a = 0; a < n; ++a) {
        lead.push_back(BlockMultivector::blade(n, BladeMask{1} << a, -one));
        potential.add(BladeMask{1} << a, adjointMatrix(model.fields()[a]) * ComplexRational::i());
    }
    return SymbolSum<ComplexMatrix>::exact(n, 1, {HS::linearInXi(n, 1, lead), HS::radial(n, 0, potential)});
}

namespace {

BlockMultivector liftOneForm(const MatrixOneForm& u, const EymModel& model) {
    if (static_cast<int>(u.size()) != model.dim()) throw std::invalid_argument("one-form length does not match dimension");
    std::vector<ComplexMatrix> lifted;
    for (const auto& c : u) {
        if (c.size() != model.matrixSize()) throw std::invalid_argument("one-form component has wrong matrix size");
        lifted.push_back(leftMultiplication(c));
    }
    return cliffordAction<ComplexMatrix>(lifted, model.dim());
}

SymbolSum<ComplexMatrix> eymInsertion(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                                      const MatrixOneForm& w) {
    const BlockMultivector uvw = liftOneForm(u, model) * liftOneForm(v, model) * liftOneForm(w, model);
    const auto kernel = diracTimesAbsPower(eymDiracSymbol(model), model.dim());
    return composeSymbols(SymbolSum<ComplexMatrix>::constant(uvw), kernel, 2);
}

}  // namespace

HomogeneousSymbol<ComplexMatrix> eymSigmaMinusN(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                                                const MatrixOneForm& w) {
    return eymInsertion(model, u, v, w).atDegree(-model.dim());
}

BlockMultivector eymResidueKernel(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                                  const MatrixOneForm& w) {
    return residueKernel(eymInsertion(model, u, v, w));
}

ResidueValue eymTorsionDensity(const EymModel& model, const MatrixOneForm& u, const MatrixOneForm& v,
                               const MatrixOneForm& w) {
    return residueDensity(eymInsertion(model, u, v, w));
}

DoubledOneForm DoubledOneForm::offDiagonalPart() const {
    const std::size_t n = wPlus.size();
    return {OneForm(n, Rational(0)), OneForm(wMinus.size(), Rational(0)), fPlus, fMinus, phi};
}

BlockMultivector DoubledOneForm::toMultivector(int dim) const {
    if (static_cast<int>(wPlus.size()) != dim || static_cast<int>(wMinus.size()) != dim)
        throw std::invalid_argument("one-form length does not match dimension");
    const auto e = [](std::size_t r, std::size_t c) { return ComplexMatrix::unit(2, r, c); };
    BlockMultivector out = tensor(cliffordAction(wPlus, dim), e(0, 0)) + tensor(cliffordAction(wMinus, dim), e(1, 1));
    const Multivector g = chirality(dim);
    out += tensor(g, e(0, 1) * (phi * ComplexRational(fPlus)));
    out += tensor(g, e(1, 0) * (phi.conj() * ComplexRational(fMinus)));
    return out;
}

SymbolSum<ComplexMatrix> doubledDiracSymbol(const ComplexRational& phi, int dim) {
    using HS = HomogeneousSymbol<ComplexMatrix>;
    const ComplexMatrix one = ComplexMatrix::identity(2);
    std::vector<BlockMultivector> lead;
    for (int a = 0; a < dim; ++a) lead.push_back(BlockMultivector::blade(dim, BladeMask{1} << a, -one));
    ComplexMatrix mass(2);
    mass(0, 1) = phi;
    mass(1, 0) = phi.conj();
    return SymbolSum<ComplexMatrix>::exact(dim, 1, {HS::linearInXi(dim, 1, lead), HS::radial(dim, 0, tensor(chirality(dim), mass))});
}

namespace {

void requireSharedPhi(const DoubledOneForm& a, const DoubledOneForm& b, const DoubledOneForm& c) {
    if (a.phi != b.phi || a.phi != c.phi) throw std::invalid_argument("doubled one-forms must share the same Phi");
}

BlockMultivector doubledKernel(const ComplexRational& phi, int dim) {
    return residueKernel(diracTimesAbsPower(doubledDiracSymbol(phi, dim), dim));
}

ResidueValue evaluateDoubled(const BlockMultivector& kernel, const DoubledOneForm& w1, const DoubledOneForm& w2,
                             const DoubledOneForm& w3, int dim) {
    const BlockMultivector p = w1.toMultivector(dim) * w2.toMultivector(dim) * w3.toMultivector(dim);
    return {dim, cliffordTrace(p * kernel)};
}

}  // namespace

ResidueValue doubledResidue(const DoubledOneForm& w1, const DoubledOneForm& w2, const DoubledOneForm& w3, int dim) {
    requireSharedPhi(w1, w2, w3);
    if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("the doubled model needs an even dimension");
    const BlockMultivector p = w1.toMultivector(dim) * w2.toMultivector(dim) * w3.toMultivector(dim);
    return residueWithZeroOrder(p, diracTimesAbsPower(doubledDiracSymbol(w1.phi, dim), dim));
}

std::array<DoubledCase, 4> doubledFourCaseTable(const DoubledOneForm& w1, const DoubledOneForm& w2,
                                                const DoubledOneForm& w3, int dim) {
    requireSharedPhi(w1, w2, w3);
    const auto d1 = w1.diagonalPart(), d2 = w2.diagonalPart(), d3 = w3.diagonalPart();
    const auto o1 = w1.offDiagonalPart(), o2 = w2.offDiagonalPart(), o3 = w3.offDiagonalPart();
    const Rational phi2 = w1.phi.norm();

    const ResidueValue g = ComplexRational(phi2) * (ComplexRational(w3.fPlus) * metricFunctional(w1.wPlus, w2.wPlus, dim) +
                                                    ComplexRational(w3.fMinus) * metricFunctional(w1.wMinus, w2.wMinus, dim));
    const Rational f = w1.fPlus * w2.fMinus * w3.fPlus + w1.fMinus * w2.fPlus * w3.fMinus;
    const ResidueValue v = ComplexRational(phi2 * phi2) * volumeFunctional(f, dim);

    return {{{"ddd", doubledResidue(d1, d2, d3, dim), ResidueValue(dim, 0)},
             {"ddo", doubledResidue(d1, d2, o3, dim), g},
             {"doo", doubledResidue(d1, o2, o3, dim), ResidueValue(dim, 0)},
             {"ooo", doubledResidue(o1, o2, o3, dim), v}}};
}

std::vector<DoubledOneForm> doubledSpanningSet(const ComplexRational& phi, int dim) {
    std::vector<DoubledOneForm> basis;
    const OneForm zero(dim, Rational(0));
    for (int a = 0; a < dim; ++a) {
        basis.push_back({frameOneForm(dim, a), zero, 0, 0, phi});
        basis.push_back({zero, frameOneForm(dim, a), 0, 0, phi});
    }
    basis.push_back({zero, zero, 1, 0, phi});
    basis.push_back({zero, zero, 0, 1, phi});
    return basis;
}

bool doubledTorsionFreeTest(const ComplexRational& phi, int dim) {
    if (dim < 2 || dim % 2 != 0) throw std::invalid_argument("the doubled model needs an even dimension");
    const BlockMultivector kernel = doubledKernel(phi, dim);
    const auto basis = doubledSpanningSet(phi, dim);
    for (const auto& a : basis)
        for (const auto& b : basis)
            for (const auto& c : basis)
                if (!evaluateDoubled(kernel, a, b, c, dim).isZero()) return false;
    return true;
}

}  // namespace storsion
