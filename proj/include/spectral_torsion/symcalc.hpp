#pragma once

// Truncated pseudodifferential symbol calculus at one point of normal
// coordinates.
//
// A homogeneous symbol of degree d is a finite sum
//     sum_alpha c_alpha(x) xi^alpha |xi|^{d - |alpha|}
// with Clifford (x) A valued coefficients. The radial power is implied by the
// degree, so a term is keyed by its xi multi-index alone. Coefficients are
// first-order jets c(x) = c_0 + sum_j x_j c_j; everything is evaluated at x = 0
// in the end.
//
// Jet depth: a SymbolSum with budget b carries x-linear jets only on its levels
// k <= b - 2 (level k has degree top - k). For b = 2 this is exactly what the
// second symbol of a composition needs: one x-derivative of the leading
// symbols. Deeper budgets are supported for x-independent symbols only;
// extending them to curved data requires second-order jets.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "spectral_torsion/clifford.hpp"

namespace storsion {

/// Exponents of xi_0 .. xi_{n-1}.
using MultiIndex = std::vector<int>;

inline int totalDegree(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

/// Exact rational multiple of an integer power of pi.
struct PiMultiple {
    Rational coefficient{0};
    int piPower = 0;
    double value() const;
};

/// V(S^{n-1}) = 2 pi^{n/2} / Gamma(n/2), exact.
PiMultiple sphereVolume(int n);

/// Integral of xi^alpha over S^{n-1} divided by V(S^{n-1}):
/// prod_j (alpha_j - 1)!! / (n (n+2) ... (n + |alpha| - 2)) for all-even alpha, else 0.
Rational sphereMoment(const MultiIndex& alpha, int n);

/// Points on the unit sphere with rational coordinates (inverse stereographic
/// projection of random rational points), deterministic in the seed.
std::vector<std::vector<Rational>> rationalSpherePoints(int n, int count, std::uint64_t seed);

template <CoefficientAlgebra A>
struct Jet {
    BasicMultivector<A> value;
    std::map<int, BasicMultivector<A>> slope;  // coefficient of x_j

    bool isZero() const { return value.isZero() && slope.empty(); }
    bool hasSlope() const { return !slope.empty(); }

    void addSlope(int j, const BasicMultivector<A>& c) {
        if (c.isZero()) return;
        auto [it, inserted] = slope.try_emplace(j, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) slope.erase(it);
        }
    }

    Jet& operator+=(const Jet& o) {
        value += o.value;
        for (const auto& [j, c] : o.slope) addSlope(j, c);
        return *this;
    }
    Jet& operator*=(const ComplexRational& s) {
        value *= s;
        if (s.isZero()) slope.clear();
        for (auto& [j, c] : slope) c *= s;
        return *this;
    }
    /// Product truncated at first order in x.
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet out;
        out.value = a.value * b.value;
        for (const auto& [j, c] : b.slope) out.addSlope(j, a.value * c);
        for (const auto& [j, c] : a.slope) out.addSlope(j, c * b.value);
        return out;
    }
    friend Jet operator*(const Jet& a, const BasicMultivector<A>& c) {
        Jet out;
        out.value = a.value * c;
        for (const auto& [j, s] : a.slope) out.addSlope(j, s * c);
        return out;
    }
    friend Jet operator*(const BasicMultivector<A>& c, const Jet& a) {
        Jet out;
        out.value = c * a.value;
        for (const auto& [j, s] : a.slope) out.addSlope(j, c * s);
        return out;
    }
};

template <CoefficientAlgebra A>
class HomogeneousSymbol {
public:
    using Coeff = BasicMultivector<A>;
    using JetType = Jet<A>;
    using TermMap = std::map<MultiIndex, JetType>;

    HomogeneousSymbol() = default;
    HomogeneousSymbol(int dim, int degree) : dim_(dim), degree_(degree) {}

    /// c * xi^alpha * |xi|^{degree - |alpha|}.
    static HomogeneousSymbol monomial(int dim, int degree, const MultiIndex& alpha, const Coeff& c) {
        HomogeneousSymbol s(dim, degree);
        s.addTerm(alpha, JetType{c, {}});
        return s;
    }
    /// c * |xi|^degree.
    static HomogeneousSymbol radial(int dim, int degree, const Coeff& c) {
        return monomial(dim, degree, MultiIndex(dim, 0), c);
    }
    /// sum_j c_j xi_j |xi|^{degree-1}.
    static HomogeneousSymbol linearInXi(int dim, int degree, std::span<const Coeff> c) {
        HomogeneousSymbol s(dim, degree);
        for (int j = 0; j < dim; ++j) {
            MultiIndex alpha(dim, 0);
            alpha[j] = 1;
            s.addTerm(alpha, JetType{c[j], {}});
        }
        return s;
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    bool hasJets() const {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.hasSlope(); });
    }

    void addTerm(const MultiIndex& alpha, const JetType& c) {
        if (static_cast<int>(alpha.size()) != dim_) throw std::invalid_argument("multi-index length mismatch");
        if (c.isZero()) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second.isZero()) terms_.erase(it);
        }
    }

    HomogeneousSymbol& operator+=(const HomogeneousSymbol& o) {
        if (o.isZero()) return *this;
        if (isZero() && terms_.empty() && dim_ == 0) {
            *this = o;
            return *this;
        }
        requireCompatible(o);
        for (const auto& [alpha, c] : o.terms_) addTerm(alpha, c);
        return *this;
    }
    HomogeneousSymbol& operator-=(const HomogeneousSymbol& o) { return *this += o * ComplexRational(-1); }
    HomogeneousSymbol& operator*=(const ComplexRational& s) {
        if (s.isZero()) terms_.clear();
        for (auto& [alpha, c] : terms_) c *= s;
        return *this;
    }

    friend HomogeneousSymbol operator+(HomogeneousSymbol a, const HomogeneousSymbol& b) { return a += b; }
    friend HomogeneousSymbol operator-(HomogeneousSymbol a, const HomogeneousSymbol& b) { return a -= b; }
    friend HomogeneousSymbol operator*(HomogeneousSymbol a, const ComplexRational& s) { return a *= s; }
    friend HomogeneousSymbol operator*(const ComplexRational& s, HomogeneousSymbol a) { return a *= s; }

    /// Pointwise product (ordered, jets truncated at first order); degrees add.
    friend HomogeneousSymbol operator*(const HomogeneousSymbol& a, const HomogeneousSymbol& b) {
        if (a.dim_ != b.dim_) throw std::invalid_argument("symbol dimension mismatch");
        HomogeneousSymbol out(a.dim_, a.degree_ + b.degree_);
        MultiIndex gamma(a.dim_);
        for (const auto& [alpha, ca] : a.terms_) {
            for (const auto& [beta, cb] : b.terms_) {
                for (int j = 0; j < a.dim_; ++j) gamma[j] = alpha[j] + beta[j];
                out.addTerm(gamma, ca * cb);
            }
        }
        return out;
    }

    /// Constant left multiplication by a zero-order coefficient.
    HomogeneousSymbol leftMultiply(const Coeff& c) const {
        HomogeneousSymbol out(dim_, degree_);
        for (const auto& [alpha, v] : terms_) out.addTerm(alpha, c * v);
        return out;
    }
    HomogeneousSymbol rightMultiply(const Coeff& c) const {
        HomogeneousSymbol out(dim_, degree_);
        for (const auto& [alpha, v] : terms_) out.addTerm(alpha, v * c);
        return out;
    }

    /// Multiplication by |xi|^r.
    HomogeneousSymbol radialShift(int r) const {
        HomogeneousSymbol out = *this;
        out.degree_ += r;
        return out;
    }

    /// d/dxi_j; lowers the degree by one.
    HomogeneousSymbol dXi(int j) const {
        HomogeneousSymbol out(dim_, degree_ - 1);
        for (const auto& [alpha, c] : terms_) {
            const int radialPower = degree_ - totalDegree(alpha);
            if (alpha[j] > 0) {
                MultiIndex lower = alpha;
                --lower[j];
                JetType t = c;
                t *= ComplexRational(alpha[j]);
                out.addTerm(lower, t);
            }
            if (radialPower != 0) {
                MultiIndex higher = alpha;
                ++higher[j];
                JetType t = c;
                t *= ComplexRational(radialPower);
                out.addTerm(higher, t);
            }
        }
        return out;
    }

    /// -i d/dx_j at x = 0; the result has no jets.
    HomogeneousSymbol dX(int j) const {
        HomogeneousSymbol out(dim_, degree_);
        for (const auto& [alpha, c] : terms_) {
            auto it = c.slope.find(j);
            if (it == c.slope.end()) continue;
            out.addTerm(alpha, JetType{it->second * ComplexRational(0, -1), {}});
        }
        return out;
    }

    /// Drops all x-linear parts.
    HomogeneousSymbol atOrigin() const {
        HomogeneousSymbol out(dim_, degree_);
        for (const auto& [alpha, c] : terms_) out.addTerm(alpha, JetType{c.value, {}});
        return out;
    }

    /// Value at a point xi of the unit sphere, x = 0.
    Coeff evaluateOnSphere(std::span<const Rational> xi) const {
        Coeff out(dim_);
        for (const auto& [alpha, c] : terms_) {
            Rational w = 1;
            for (int j = 0; j < dim_; ++j)
                for (int p = 0; p < alpha[j]; ++p) w *= xi[j];
            out += c.value * ComplexRational(w);
        }
        return out;
    }

    /// Canonical polynomial form at x = 0: the symbol times |xi|^R (R making all
    /// radial powers non-negative) written as P(xi) + |xi| Q(xi) with
    /// |xi|^2 expanded as sum xi_j^2. Two symbols of equal degree are equal
    /// iff their normal forms coincide.
    std::pair<std::map<MultiIndex, Coeff>, std::map<MultiIndex, Coeff>> normalForm() const;

private:
    void requireCompatible(const HomogeneousSymbol& o) const {
        if (o.dim_ != dim_ || o.degree_ != degree_)
            throw std::invalid_argument("adding symbols of different dimension or degree");
    }

    int dim_ = 0;
    int degree_ = 0;
    TermMap terms_;
};

namespace detail {

/// Monomials of (xi . xi)^k with multinomial coefficients.
std::map<MultiIndex, Rational> radialSquarePower(int n, int k);

}  // namespace detail

template <CoefficientAlgebra A>
auto HomogeneousSymbol<A>::normalForm() const -> std::pair<std::map<MultiIndex, Coeff>, std::map<MultiIndex, Coeff>> {
    std::map<MultiIndex, Coeff> even, odd;
    if (terms_.empty()) return {even, odd};
    int minRadial = INT_MAX;
    for (const auto& [alpha, c] : terms_) minRadial = std::min(minRadial, degree_ - totalDegree(alpha));
    // Shift so the smallest radial power becomes 0 or 1, preserving parity.
    const int shift = minRadial >= 0 ? 0 : (-minRadial + 1) / 2 * 2;
    auto accumulate = [&](std::map<MultiIndex, Coeff>& target, const MultiIndex& base, const Coeff& c, int k) {
        for (const auto& [mono, w] : detail::radialSquarePower(dim_, k)) {
            MultiIndex alpha = base;
            for (int j = 0; j < dim_; ++j) alpha[j] += mono[j];
            auto [it, inserted] = target.try_emplace(alpha, c * ComplexRational(w));
            if (!inserted) {
                it->second += c * ComplexRational(w);
                if (it->second.isZero()) target.erase(it);
            }
        }
    };
    for (const auto& [alpha, c] : terms_) {
        if (c.value.isZero()) continue;
        const int r = degree_ - totalDegree(alpha) + shift;
        if (r % 2 == 0) accumulate(even, alpha, c.value, r / 2);
        else accumulate(odd, alpha, c.value, (r - 1) / 2);
    }
    return {even, odd};
}

/// True when the symbol vanishes identically at x = 0 (exact normal form test).
template <CoefficientAlgebra A>
bool isZeroSymbol(const HomogeneousSymbol<A>& s) {
    auto [even, odd] = s.normalForm();
    return even.empty() && odd.empty();
}

/// Exact equality of two homogeneous symbols at x = 0.
template <CoefficientAlgebra A>
bool symbolEquals(const HomogeneousSymbol<A>& a, const HomogeneousSymbol<A>& b) {
    if (a.isZero()) return isZeroSymbol(b);
    if (b.isZero()) return isZeroSymbol(a);
    if (a.degree() != b.degree()) return isZeroSymbol(a) && isZeroSymbol(b);
    return isZeroSymbol(a - b);
}

/// Graded symbol sum: levels k = 0 .. budget-1 hold the degree (top - k) parts.
/// An exact sum (symbol of a differential operator) has no terms below its
/// stored levels and may be used at any budget.
template <CoefficientAlgebra A>
class SymbolSum {
public:
    static constexpr int kUnbounded = INT_MAX;

    SymbolSum() = default;

    static SymbolSum exact(int dim, int top, std::vector<HomogeneousSymbol<A>> levels) {
        return SymbolSum(dim, top, std::move(levels), true);
    }
    static SymbolSum truncated(int dim, int top, std::vector<HomogeneousSymbol<A>> levels) {
        return SymbolSum(dim, top, std::move(levels), false);
    }
    /// A constant zero-order symbol (multiplication operator).
    static SymbolSum constant(const BasicMultivector<A>& c) {
        return exact(c.dim(), 0, {HomogeneousSymbol<A>::radial(c.dim(), 0, c)});
    }

    int dim() const { return dim_; }
    int top() const { return top_; }
    bool isExact() const { return exact_; }
    int budget() const { return exact_ ? kUnbounded : static_cast<int>(levels_.size()); }
    int storedLevels() const { return static_cast<int>(levels_.size()); }

    /// Degree (top - k) part; zero past the stored levels of an exact sum.
    HomogeneousSymbol<A> level(int k) const {
        if (k < 0) throw std::out_of_range("negative symbol level");
        if (k < static_cast<int>(levels_.size())) return levels_[k];
        if (!exact_) throw std::out_of_range("symbol level beyond budget");
        return HomogeneousSymbol<A>(dim_, top_ - k);
    }
    HomogeneousSymbol<A> atDegree(int degree) const { return level(top_ - degree); }

    bool hasJets() const {
        return std::any_of(levels_.begin(), levels_.end(), [](const auto& s) { return s.hasJets(); });
    }

    /// Keeps the leading `budget` levels, dropping jets where they are no longer valid.
    SymbolSum truncate(int budget) const {
        if (budget > this->budget()) throw std::invalid_argument("insufficient symbol budget");
        std::vector<HomogeneousSymbol<A>> lv;
        for (int k = 0; k < budget; ++k) lv.push_back(jetPolicy(level(k), k, budget));
        return truncated(dim_, top_, std::move(lv));
    }

    static HomogeneousSymbol<A> jetPolicy(const HomogeneousSymbol<A>& s, int k, int budget) {
        return k <= budget - 2 ? s : s.atOrigin();
    }

private:
    SymbolSum(int dim, int top, std::vector<HomogeneousSymbol<A>> levels, bool exact)
        : dim_(dim), top_(top), exact_(exact), levels_(std::move(levels)) {
        for (std::size_t k = 0; k < levels_.size(); ++k) {
            if (levels_[k].dim() == 0 && levels_[k].isZero()) levels_[k] = HomogeneousSymbol<A>(dim_, top_ - static_cast<int>(k));
            if (levels_[k].dim() != dim_ || levels_[k].degree() != top_ - static_cast<int>(k))
                throw std::invalid_argument("symbol level has wrong degree or dimension");
        }
    }

    int dim_ = 0;
    int top_ = 0;
    bool exact_ = true;
    std::vector<HomogeneousSymbol<A>> levels_;
};

namespace detail {

template <CoefficientAlgebra A>
void requireBudget(const SymbolSum<A>& s, int budget) {
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    if (s.budget() < budget) throw std::invalid_argument("insufficient symbol budget");
}

template <CoefficientAlgebra A>
void requireJetDepth(bool jets, int budget) {
    if (jets && budget > 2)
        throw std::domain_error("budget > 2 with x-dependent symbols needs second-order jets");
}

/// Level-k terms of a o b that involve only a_0..a_{k-1} on the left when
/// `skipLeftLevel` equals k (used by the parametrix and square-root solvers).
template <CoefficientAlgebra A>
HomogeneousSymbol<A> composeLevel(const SymbolSum<A>& a, const SymbolSum<A>& b, int k, int skipLeft = -1,
                                  int skipRight = -1) {
    HomogeneousSymbol<A> out(a.dim(), a.top() + b.top() - k);
    for (int i = 0; i <= k; ++i) {
        const int j = k - i;
        if (i == skipLeft || j == skipRight) continue;
        out += a.level(i) * b.level(j);
    }
    // One xi-derivative on the left paired with one x-derivative on the right.
    for (int i = 0; i + 1 <= k; ++i) {
        const int j = k - 1 - i;
        if (i == skipLeft || j == skipRight) continue;
        const auto bj = b.level(j);
        if (!bj.hasJets()) continue;
        const auto ai = a.level(i);
        for (int l = 0; l < a.dim(); ++l) {
            auto dx = bj.dX(l);
            if (dx.isZero()) continue;
            out += ai.dXi(l) * dx;
        }
    }
    return out;
}

template <CoefficientAlgebra A>
BasicMultivector<A> requireScalarLeading(const HomogeneousSymbol<A>& lead) {
    // The leading symbol must be |xi|^p times the unit: check the exact normal form.
    const auto one = [&]() -> BasicMultivector<A> {
        auto pts = rationalSpherePoints(lead.dim(), 1, 7);
        return lead.evaluateOnSphere(pts.front());
    }();
    const A* unit = one.find(0);
    if (unit == nullptr || one.terms().size() != 1 || !isIdentity(*unit))
        throw std::domain_error("leading symbol is not a scalar multiple of the unit");
    const auto expected = HomogeneousSymbol<A>::radial(lead.dim(), lead.degree(), one);
    if (!symbolEquals(lead.atOrigin(), expected))
        throw std::domain_error("leading symbol is not |xi|^p times the unit");
    return one;
}

}  // namespace detail

/// Leading `budget` degrees of sigma(A o B) =
/// sum_alpha (1/alpha!) d_xi^alpha a . (-i d_x)^alpha b at x = 0.
template <CoefficientAlgebra A>
SymbolSum<A> composeSymbols(const SymbolSum<A>& a, const SymbolSum<A>& b, int budget) {
    if (a.dim() != b.dim()) throw std::invalid_argument("symbol dimension mismatch");
    detail::requireBudget(a, budget);
    detail::requireBudget(b, budget);
    detail::requireJetDepth<A>(a.hasJets() || b.hasJets(), budget);
    std::vector<HomogeneousSymbol<A>> levels;
    levels.reserve(budget);
    for (int k = 0; k < budget; ++k)
        levels.push_back(SymbolSum<A>::jetPolicy(detail::composeLevel(a, b, k), k, budget));
    if (a.isExact() && b.isExact()) {
        // Product of differential operators: still finite if nothing lies below.
        const int depth = a.storedLevels() + b.storedLevels() - 1;
        if (budget >= depth && !a.hasJets() && !b.hasJets())
            return SymbolSum<A>::exact(a.dim(), a.top() + b.top(), std::move(levels));
    }
    return SymbolSum<A>::truncated(a.dim(), a.top() + b.top(), std::move(levels));
}

/// Left parametrix b with b o a = 1 up to `budget` degrees, for a leading
/// symbol |xi|^p times the unit.
template <CoefficientAlgebra A>
SymbolSum<A> parametrix(const SymbolSum<A>& a, int budget) {
    detail::requireBudget(a, budget);
    detail::requireJetDepth<A>(a.hasJets(), budget);
    const auto lead = a.level(0);
    const auto unit = detail::requireScalarLeading(lead);
    const int p = a.top();
    // b_0 = |xi|^{-p} - |xi|^{-2p} L(x) for a_0 = |xi|^p + L(x).
    HomogeneousSymbol<A> b0 = HomogeneousSymbol<A>::radial(a.dim(), -p, unit);
    if (budget >= 2) {
        const auto slopePart = lead - lead.atOrigin();
        b0 -= slopePart.radialShift(-2 * p);
    }
    std::vector<HomogeneousSymbol<A>> levels{SymbolSum<A>::jetPolicy(b0, 0, budget)};
    for (int k = 1; k < budget; ++k) {
        // Level k of partial o a without the unknown b_k a_0 term.
        std::vector<HomogeneousSymbol<A>> padded = levels;
        padded.push_back(HomogeneousSymbol<A>(a.dim(), -p - k));
        auto known = SymbolSum<A>::truncated(a.dim(), -p, padded);
        auto rest = detail::composeLevel(known, a, k, k);
        auto bk = (rest * levels.front()) * ComplexRational(-1);
        levels.push_back(SymbolSum<A>::jetPolicy(bk, k, budget));
    }
    return SymbolSum<A>::truncated(a.dim(), -p, std::move(levels));
}

/// Leading degrees of a^{-m}: parametrix composed m times with itself.
template <CoefficientAlgebra A>
SymbolSum<A> negativePower(const SymbolSum<A>& a, int m, int budget) {
    if (m < 1) throw std::invalid_argument("negativePower requires m >= 1");
    const auto b = parametrix(a, budget);
    auto out = b;
    for (int k = 1; k < m; ++k) out = composeSymbols(out, b, budget);
    return out;
}

/// Square root s with s o s = a up to `budget` degrees; leading |xi|^{p/2}.
template <CoefficientAlgebra A>
SymbolSum<A> sqrtSymbol(const SymbolSum<A>& a, int budget) {
    detail::requireBudget(a, budget);
    detail::requireJetDepth<A>(a.hasJets(), budget);
    const auto lead = a.level(0);
    const auto unit = detail::requireScalarLeading(lead);
    const int p = a.top();
    if (p % 2 != 0) throw std::domain_error("square root needs an even leading order");
    const int h = p / 2;
    HomogeneousSymbol<A> s0 = HomogeneousSymbol<A>::radial(a.dim(), h, unit);
    if (budget >= 2) {
        const auto slopePart = lead - lead.atOrigin();
        s0 += slopePart.radialShift(-h) * ComplexRational(Rational(1, 2));
    }
    std::vector<HomogeneousSymbol<A>> levels{SymbolSum<A>::jetPolicy(s0, 0, budget)};
    for (int k = 1; k < budget; ++k) {
        std::vector<HomogeneousSymbol<A>> padded = levels;
        padded.push_back(HomogeneousSymbol<A>(a.dim(), h - k));
        auto known = SymbolSum<A>::truncated(a.dim(), h, padded);
        // s_k s_0 + s_0 s_k = 2 |xi|^h s_k at x = 0.
        auto rest = detail::composeLevel(known, known, k, k, k);
        auto sk = (a.level(k) - rest).radialShift(-h) * ComplexRational(Rational(1, 2));
        levels.push_back(SymbolSum<A>::jetPolicy(sk.atOrigin(), k, budget));
    }
    return SymbolSum<A>::truncated(a.dim(), h, std::move(levels));
}

/// Integral over |xi| = 1 of a degree -n symbol at x = 0, in units of V(S^{n-1}).
template <CoefficientAlgebra A>
BasicMultivector<A> sphereIntegrate(const HomogeneousSymbol<A>& s) {
    const int n = s.dim();
    if (s.isZero()) return BasicMultivector<A>(n);
    if (s.degree() != -n) throw std::invalid_argument("sphereIntegrate needs a symbol of degree -n");
    BasicMultivector<A> out(n);
    for (const auto& [alpha, c] : s.terms()) {
        const Rational w = sphereMoment(alpha, n);
        if (sgn(w) != 0) out += c.value * ComplexRational(w);
    }
    return out;
}

/// Riemann tensor jet at the base point of normal coordinates.
class CurvatureJet {
public:
    /// Validates R_abcd = -R_bacd = -R_abdc = R_cdab and the first Bianchi identity.
    CurvatureJet(int dim, std::vector<Rational> riemann);

    /// Random algebraic curvature tensor: sum of Gauss-type terms h_ac h_bd - h_ad h_bc.
    static CurvatureJet random(int dim, std::mt19937_64& rng);
    static CurvatureJet flat(int dim) { return CurvatureJet(dim, std::vector<Rational>(std::size_t(dim) * dim * dim * dim)); }

    int dim() const { return dim_; }
    const Rational& riemann(int a, int b, int c, int d) const { return riemann_[index(a, b, c, d)]; }
    /// Ric_ab = sum_c R_cacb.
    Rational ricci(int a, int b) const;
    /// Linear coefficient of Gamma^a_bc in x^d: -(1/3)(R_abcd + R_acbd).
    Rational christoffelSlope(int a, int b, int c, int d) const;
    /// Slope d omega_jkl / dx_m of the spin connection in radial gauge: (1/2) R_klmj.
    Rational spinConnectionSlope(int j, int k, int l, int m) const;

private:
    std::size_t index(int a, int b, int c, int d) const {
        return ((std::size_t(a) * dim_ + b) * dim_ + c) * dim_ + d;
    }

    int dim_;
    std::vector<Rational> riemann_;
};

}  // namespace storsion
