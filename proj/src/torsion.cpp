#include "spectral_torsion/torsion.hpp"

#include <algorithm>

namespace storsion {

OneForm frameOneForm(int dim, int a) {
    if (a < 0 || a >= dim) throw std::out_of_range("frame index out of range");
    OneForm u(dim, Rational(0));
    u[a] = 1;
    return u;
}

Rational randomSmallRational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> numer(-9, 9), denom(1, 3);
    const int p = numer(rng);
    const int q = denom(rng);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

OneForm randomOneForm(int dim, std::mt19937_64& rng) {
    OneForm u(dim);
    for (auto& x : u) x = randomSmallRational(rng);
    return u;
}

bool Rank3Tensor::isZero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

TorsionTensor::TorsionTensor(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be positive");
}

namespace {

// Sorts three distinct indices, returning the permutation sign.
int sortTriple(std::array<int, 3>& k) {
    int sign = 1;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 0; i < 2; ++i)
            if (k[i] > k[i + 1]) {
                std::swap(k[i], k[i + 1]);
                sign = -sign;
            }
    return sign;
}

}  // namespace

void TorsionTensor::set(int a, int b, int c, const Rational& value) {
    for (int x : {a, b, c})
        if (x < 0 || x >= dim_) throw std::out_of_range("torsion index out of range");
    if (a == b || b == c || a == c) throw std::invalid_argument("torsion indices must be distinct");
    Key k{a, b, c};
    const int sign = sortTriple(k);
    if (sgn(value) == 0) components_.erase(k);
    else components_[k] = sign > 0 ? value : Rational(-value);
}

Rational TorsionTensor::operator()(int a, int b, int c) const {
    if (a == b || b == c || a == c) return 0;
    Key k{a, b, c};
    const int sign = sortTriple(k);
    auto it = components_.find(k);
    if (it == components_.end()) return 0;
    return sign > 0 ? it->second : Rational(-it->second);
}

Rank3Tensor TorsionTensor::toRank3() const {
    Rank3Tensor t(dim_);
    for (int a = 0; a < dim_; ++a)
        for (int b = 0; b < dim_; ++b)
            for (int c = 0; c < dim_; ++c) t(a, b, c) = (*this)(a, b, c);
    return t;
}

TorsionTensor TorsionTensor::fromComponents(const Rank3Tensor& t) {
    TorsionTensor out(t.dim());
    const int n = t.dim();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const Rational& x = t(a, b, c);
                if (x != -t(b, a, c) || x != -t(a, c, b))
                    throw std::invalid_argument("tensor is not totally antisymmetric");
                if (a < b && b < c) out.set(a, b, c, x);
            }
    return out;
}

TorsionTensor TorsionTensor::random(int dim, std::mt19937_64& rng) {
    TorsionTensor t(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = a + 1; b < dim; ++b)
            for (int c = b + 1; c < dim; ++c) t.set(a, b, c, randomSmallRational(rng));
    return t;
}

ContorsionTensor::ContorsionTensor(Rank3Tensor tau) : tau_(std::move(tau)) {
    const int n = tau_.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (tau_(i, j, k) != -tau_(i, k, j))
                    throw std::invalid_argument("contorsion must be antisymmetric in its last two indices");
}

FrameConnection::FrameConnection(Rank3Tensor structure) : c_(std::move(structure)) {
    const int n = c_.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (c_(i, j, k) != -c_(j, i, k))
                    throw std::invalid_argument("structure constants must be antisymmetric in the first two indices");
}

ContorsionTensor contorsionFromTorsion(const TorsionTensor& t) {
    const int n = t.dim();
    Rank3Tensor tau(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) tau(i, j, k) = Rational(1, 2) * (t(i, j, k) + t(k, i, j) + t(k, j, i));
    return ContorsionTensor(std::move(tau));
}

Rank3Tensor torsionFromContorsion(const ContorsionTensor& tau) {
    const int n = tau.dim();
    Rank3Tensor t(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) t(i, j, k) = tau(i, j, k) - tau(j, i, k);
    return t;
}

Rank3Tensor leviCivitaFromStructure(const FrameConnection& c) {
    const auto& s = c.structure();
    const int n = s.dim();
    Rank3Tensor w(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) w(i, j, k) = Rational(1, 2) * (s(i, j, k) + s(k, i, j) + s(k, j, i));
    return w;
}

SpinConnectionJet::SpinConnectionJet(int dim) : dim_(dim), data_(std::size_t(dim) * dim * dim * dim) {}

void SpinConnectionJet::set(int j, int k, int l, int m, const Rational& v) {
    if (k == l && sgn(v) != 0) throw std::invalid_argument("spin connection is antisymmetric in (k, l)");
    data_[index(j, k, l, m)] = v;
    data_[index(j, l, k, m)] = -v;
}

SpinConnectionJet SpinConnectionJet::fromCurvature(const CurvatureJet& r) {
    const int n = r.dim();
    SpinConnectionJet w(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l)
                for (int m = 0; m < n; ++m) w.set(j, k, l, m, r.spinConnectionSlope(j, k, l, m));
    return w;
}

SpinConnectionJet SpinConnectionJet::random(int dim, std::mt19937_64& rng) {
    SpinConnectionJet w(dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k)
            for (int l = k + 1; l < dim; ++l)
                for (int m = 0; m < dim; ++m) w.set(j, k, l, m, randomSmallRational(rng));
    return w;
}

Multivector torsionCliffordCube(const TorsionTensor& t) {
    const int n = t.dim();
    Multivector cube(n);
    for (const auto& [key, value] : t.components()) {
        // Sum over the 3! orderings: each contributes sign(perm)^2 = +1 times the blade.
        const BladeMask mask = (BladeMask{1} << key[0]) | (BladeMask{1} << key[1]) | (BladeMask{1} << key[2]);
        cube.add(mask, ComplexRational(6 * value));
    }
    return cube * ComplexRational(Rational(0), Rational(-1, 8));
}

SymbolSum<ComplexRational> diracSymbol(const TorsionTensor& t, int dim, const SpinConnectionJet* leviCivita) {
    if (t.dim() != dim) throw std::invalid_argument("torsion dimension mismatch");
    using HS = HomogeneousSymbol<ComplexRational>;
    std::vector<Multivector> lead;
    for (int j = 0; j < dim; ++j) lead.push_back(-generator(dim, j));
    HS principal = HS::linearInXi(dim, 1, lead);

    HS zeroOrder = HS::radial(dim, 0, torsionCliffordCube(t));
    if (leviCivita != nullptr) {
        if (leviCivita->dim() != dim) throw std::invalid_argument("spin connection dimension mismatch");
        Jet<ComplexRational> jet;
        jet.value = Multivector(dim);
        const ComplexRational factor(Rational(0), Rational(-1, 4));
        for (int m = 0; m < dim; ++m) {
            Multivector slope(dim);
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k)
                    for (int l = 0; l < dim; ++l) {
                        const Rational& w = (*leviCivita)(j, k, l, m);
                        if (sgn(w) == 0) continue;
                        slope += canonicalize({{j, k, l}, factor * ComplexRational(w)}, dim);
                    }
            jet.addSlope(m, slope);
        }
        zeroOrder.addTerm(MultiIndex(dim, 0), jet);
    }
    return SymbolSum<ComplexRational>::exact(dim, 1, {principal, zeroOrder});
}

Rational torsionContraction(const OneForm& u, const OneForm& v, const OneForm& w, const TorsionTensor& t) {
    Rational s = 0;
    for (const auto& [key, value] : t.components()) {
        std::array<int, 3> p = key;
        // Sum over permutations of (a, b, c) with the antisymmetric sign.
        std::sort(p.begin(), p.end());
        int sign = 1;
        do {
            // sign of p relative to key
            std::array<int, 3> q = p;
            sign = sortTriple(q);
            s += sign * value * u[p[0]] * v[p[1]] * w[p[2]];
        } while (std::next_permutation(p.begin(), p.end()));
    }
    return s;
}

namespace {

void requireOneForms(std::initializer_list<const OneForm*> forms, int n) {
    for (const OneForm* f : forms)
        if (static_cast<int>(f->size()) != n) throw std::invalid_argument("one-form length does not match dimension");
}

}  // namespace

ResidueValue torsionFunctional(const OneForm& u, const OneForm& v, const OneForm& w, const TorsionTensor& t, int n,
                               const SpinConnectionJet* leviCivita) {
    requireOneForms({&u, &v, &w}, n);
    const auto kernel = diracTimesAbsPower(diracSymbol(t, n, leviCivita), n);
    const Multivector uvw = cliffordAction(u, n) * cliffordAction(v, n) * cliffordAction(w, n);
    return residueWithZeroOrder(uvw, kernel);
}

ResidueValue closedFormTorsion(const OneForm& u, const OneForm& v, const OneForm& w, const TorsionTensor& t, int n) {
    requireOneForms({&u, &v, &w}, n);
    if (n < 2) throw std::invalid_argument("dimension must be at least 2");
    const Rational pow2 = Rational(mpz_class(1) << traceExponent(n));
    return {n, ComplexRational(Rational(0), -pow2 * torsionContraction(u, v, w, t))};
}

ResidueValue chiralityFunctional(const OneForm& u, const TorsionTensor& t, int n) {
    if (n != 4) throw std::invalid_argument("chirality functional is defined for n = 4");
    requireOneForms({&u}, n);
    const auto kernel = diracTimesAbsPower(diracSymbol(t, n), n);
    return residueWithZeroOrder(chirality(n) * cliffordAction(u, n), kernel);
}

ResidueValue spectralClosednessCheck(const Multivector& p, int n) {
    if (p.dim() != n && !p.isZero()) throw std::invalid_argument("operator dimension mismatch");
    const auto kernel = diracTimesAbsPower(diracSymbol(TorsionTensor(n), n), n);
    return residueWithZeroOrder(p.isZero() ? Multivector(n) : p, kernel);
}

namespace {

SymbolSum<ComplexRational> inverseSquarePower(int n) {
    if (n % 2 != 0) throw std::invalid_argument("metric and volume functionals need an even dimension");
    const auto d = diracSymbol(TorsionTensor(n), n);
    return negativePower(composeSymbols(d, d, 2), n / 2, 2);
}

}  // namespace

ResidueValue metricFunctional(const OneForm& u, const OneForm& v, int n) {
    requireOneForms({&u, &v}, n);
    return residueWithZeroOrder(cliffordAction(u, n) * cliffordAction(v, n), inverseSquarePower(n));
}

ResidueValue volumeFunctional(const Rational& f, int n) {
    return residueWithZeroOrder(scalarMultivector(n, ComplexRational(f)), inverseSquarePower(n));
}

TorsionFunctionalEvaluator::TorsionFunctionalEvaluator(const TorsionTensor& t, int n)
    : n_(n), kernel_(residueKernel(diracTimesAbsPower(diracSymbol(t, n), n))) {}

ResidueValue TorsionFunctionalEvaluator::evaluate(const Multivector& p) const {
    return {n_, cliffordTrace(p * kernel_)};
}

ResidueValue TorsionFunctionalEvaluator::evaluate(const OneForm& u, const OneForm& v, const OneForm& w) const {
    requireOneForms({&u, &v, &w}, n_);
    return evaluate(cliffordAction(u, n_) * cliffordAction(v, n_) * cliffordAction(w, n_));
}

}  // namespace storsion
