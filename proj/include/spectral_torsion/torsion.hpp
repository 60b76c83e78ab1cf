#pragma once

// Torsion and contorsion tensors, the symbol of the Dirac operator with
// totally antisymmetric torsion
//     D_T = D - (i/8) T_jkl gamma^j gamma^k gamma^l,
// and residue densities W(P D_T |D_T|^{-n}) evaluated pointwise in normal
// coordinates through the symbol calculus.

#include <array>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "spectral_torsion/clifford.hpp"
#include "spectral_torsion/residue.hpp"
#include "spectral_torsion/symcalc.hpp"

namespace storsion {

/// Scalar one-form components u_a in an orthonormal frame.
using OneForm = std::vector<Rational>;

OneForm frameOneForm(int dim, int a);

/// Rational draw p/q with |p| <= 9, q in {1,2,3}.
Rational randomSmallRational(std::mt19937_64& rng);
OneForm randomOneForm(int dim, std::mt19937_64& rng);

/// Dense rank-3 array.
class Rank3Tensor {
public:
    explicit Rank3Tensor(int dim) : dim_(dim), data_(std::size_t(dim) * dim * dim) {}

    int dim() const { return dim_; }
    Rational& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
    const Rational& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
    bool isZero() const;
    friend bool operator==(const Rank3Tensor& a, const Rank3Tensor& b) { return a.dim_ == b.dim_ && a.data_ == b.data_; }

private:
    std::size_t index(int i, int j, int k) const {
        if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("tensor index out of range");
        return (std::size_t(i) * dim_ + j) * dim_ + k;
    }

    int dim_;
    std::vector<Rational> data_;
};

/// Totally antisymmetric torsion T_abc, stored for a < b < c.
class TorsionTensor {
public:
    using Key = std::array<int, 3>;

    explicit TorsionTensor(int dim);

    /// Sets T_abc (and by antisymmetry every permutation); indices must be distinct.
    void set(int a, int b, int c, const Rational& value);
    Rational operator()(int a, int b, int c) const;

    int dim() const { return dim_; }
    const std::map<Key, Rational>& components() const { return components_; }
    bool isZero() const { return components_.empty(); }

    Rank3Tensor toRank3() const;
    /// Throws unless the array is totally antisymmetric.
    static TorsionTensor fromComponents(const Rank3Tensor& t);
    static TorsionTensor random(int dim, std::mt19937_64& rng);

    friend bool operator==(const TorsionTensor& a, const TorsionTensor& b) {
        return a.dim_ == b.dim_ && a.components_ == b.components_;
    }

private:
    int dim_;
    std::map<Key, Rational> components_;
};

/// Contorsion tau_ijk, antisymmetric in the last two indices.
class ContorsionTensor {
public:
    explicit ContorsionTensor(Rank3Tensor tau);
    const Rank3Tensor& components() const { return tau_; }
    int dim() const { return tau_.dim(); }
    Rational operator()(int i, int j, int k) const { return tau_(i, j, k); }

private:
    Rank3Tensor tau_;
};

/// Structure constants [e_i, e_j] = c_ijk e_k of an orthonormal frame.
class FrameConnection {
public:
    explicit FrameConnection(Rank3Tensor structure);
    const Rank3Tensor& structure() const { return c_; }
    int dim() const { return c_.dim(); }

private:
    Rank3Tensor c_;
};

/// tau_ijk = (T_ijk + T_kij + T_kji) / 2, evaluated literally.
ContorsionTensor contorsionFromTorsion(const TorsionTensor& t);
/// T_ijk = tau_ijk - tau_jik. Antisymmetric in (i, j); totally antisymmetric
/// when tau is.
Rank3Tensor torsionFromContorsion(const ContorsionTensor& tau);
/// omega^LC_ijk = (c_ijk + c_kij + c_kji) / 2.
Rank3Tensor leviCivitaFromStructure(const FrameConnection& c);

/// Slopes d omega_jkl / dx_m of the Levi-Civita spin connection at the base
/// point (omega itself vanishes there in normal coordinates).
class SpinConnectionJet {
public:
    explicit SpinConnectionJet(int dim);
    static SpinConnectionJet fromCurvature(const CurvatureJet& r);
    static SpinConnectionJet random(int dim, std::mt19937_64& rng);

    int dim() const { return dim_; }
    /// Sets the slope and its (k, l) antisymmetric partner.
    void set(int j, int k, int l, int m, const Rational& v);
    const Rational& operator()(int j, int k, int l, int m) const { return data_[index(j, k, l, m)]; }

private:
    std::size_t index(int j, int k, int l, int m) const {
        return ((std::size_t(j) * dim_ + k) * dim_ + l) * dim_ + m;
    }
    int dim_;
    std::vector<Rational> data_;
};

/// sigma(D_T) = -gamma^j xi_j - (i/8) T_jps gamma^j gamma^p gamma^s
///              - (i/4) gamma^j omega_jkl(x) gamma^k gamma^l  (optional x-linear part).
SymbolSum<ComplexRational> diracSymbol(const TorsionTensor& t, int dim,
                                       const SpinConnectionJet* leviCivita = nullptr);

/// Degree-0 part -(i/8) sum_{jps} T_jps gamma^j gamma^p gamma^s.
Multivector torsionCliffordCube(const TorsionTensor& t);

/// sigma(D |D|^{-n}) to two leading degrees. Even n: D o (D^2)^{-n/2}.
/// Odd n: D o (D^2)^{-(n-1)/2} o |D|^{-1} with |D|^{-1} the parametrix of sqrt(D^2).
template <CoefficientAlgebra A>
SymbolSum<A> diracTimesAbsPower(const SymbolSum<A>& dirac, int n) {
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    constexpr int budget = 2;
    const auto square = composeSymbols(dirac, dirac, budget);
    SymbolSum<A> absPower;
    if (n % 2 == 0) {
        absPower = negativePower(square, n / 2, budget);
    } else {
        const auto invAbs = parametrix(sqrtSymbol(square, budget), budget);
        absPower = n == 1 ? invAbs : composeSymbols(negativePower(square, (n - 1) / 2, budget), invAbs, budget);
    }
    return composeSymbols(dirac, absPower, budget);
}

/// Sphere integral of the degree -n part, in units of V(S^{n-1}).
template <CoefficientAlgebra A>
BasicMultivector<A> residueKernel(const SymbolSum<A>& s) {
    const int n = s.dim();
    if (-n > s.top() || s.top() - (-n) >= s.budget())
        throw std::invalid_argument("symbol does not reach degree -n within its budget");
    return sphereIntegrate(s.atDegree(-n));
}

/// Wodzicki residue density: Tr(Cl (x) A) of the sphere-integrated degree -n symbol.
template <CoefficientAlgebra A>
ResidueValue residueDensity(const SymbolSum<A>& s) {
    return {s.dim(), cliffordTrace(residueKernel(s))};
}

/// W(P Q) for a zero-order multiplication operator P.
template <CoefficientAlgebra A>
ResidueValue residueWithZeroOrder(const BasicMultivector<A>& p, const SymbolSum<A>& q) {
    return residueDensity(composeSymbols(SymbolSum<A>::constant(p), q, std::min(q.budget(), 2)));
}

/// sum_abc u_a v_b w_c T_abc.
Rational torsionContraction(const OneForm& u, const OneForm& v, const OneForm& w, const TorsionTensor& t);

/// W(u^ v^ w^ D_T |D_T|^{-n}) through the full symbol pipeline.
ResidueValue torsionFunctional(const OneForm& u, const OneForm& v, const OneForm& w, const TorsionTensor& t, int n,
                               const SpinConnectionJet* leviCivita = nullptr);

/// -2^m i V(S^{n-1}) sum u_a v_b w_c T_abc, m = n/2 (even n) or (n+1)/2 (odd n).
ResidueValue closedFormTorsion(const OneForm& u, const OneForm& v, const OneForm& w, const TorsionTensor& t, int n);

/// W(gamma u^ D_T |D_T|^{-4}) with gamma the chirality element; n must be 4.
ResidueValue chiralityFunctional(const OneForm& u, const TorsionTensor& t, int n = 4);

/// W(P D |D|^{-n}) for the torsion-free Dirac operator.
ResidueValue spectralClosednessCheck(const Multivector& p, int n);

/// W(u^ v^ D^{-2m}) and W(f D^{-2m}) for the torsion-free Dirac operator, n = 2m.
ResidueValue metricFunctional(const OneForm& u, const OneForm& v, int n);
ResidueValue volumeFunctional(const Rational& f, int n);

/// Caches the integrated kernel of D_T |D_T|^{-n} so that many zero-order
/// insertions W(P D_T |D_T|^{-n}) = Tr(P K) V can be evaluated cheaply.
class TorsionFunctionalEvaluator {
public:
    TorsionFunctionalEvaluator(const TorsionTensor& t, int n);

    int dim() const { return n_; }
    const Multivector& kernel() const { return kernel_; }
    ResidueValue evaluate(const Multivector& p) const;
    ResidueValue evaluate(const OneForm& u, const OneForm& v, const OneForm& w) const;

private:
    int n_;
    Multivector kernel_;
};

}  // namespace storsion
