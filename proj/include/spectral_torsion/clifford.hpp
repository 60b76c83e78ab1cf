#pragma once

// Exact arithmetic in the complexified Euclidean Clifford algebra Cl(R^n),
// gamma^a gamma^b + gamma^b gamma^a = 2 delta^{ab}, optionally tensored with
// a coefficient algebra A that commutes with all generators.
//
// Frame indices are zero-based: generators gamma^0 .. gamma^{n-1}. A basis
// blade is the ordered product over a strictly increasing index set, stored
// as a bit mask.

#include <bit>
#include <concepts>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral_torsion/matrix.hpp"
#include "spectral_torsion/rational.hpp"

namespace storsion {

inline constexpr int kMaxCliffordDim = 16;

using BladeMask = std::uint32_t;

/// Associative unital *-algebra with a trace, scalable by Gaussian rationals.
template <class A>
concept CoefficientAlgebra = requires(A a, A b, ComplexRational s) {
    { a + b } -> std::convertible_to<A>;
    { a - b } -> std::convertible_to<A>;
    { a * b } -> std::convertible_to<A>;
    { a * s } -> std::convertible_to<A>;
    { isZero(a) } -> std::convertible_to<bool>;
    { coefficientTrace(a) } -> std::convertible_to<ComplexRational>;
    { adjoint(a) } -> std::convertible_to<A>;
};

/// Sign of blade(a) * blade(b) after reordering into blade(a ^ b).
inline int bladeProductSign(BladeMask a, BladeMask b) {
    int swaps = 0;
    for (BladeMask x = a >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b);
    return (swaps & 1) ? -1 : 1;
}

inline int bladeGrade(BladeMask m) { return std::popcount(m); }

/// Product of generators with a scalar prefactor; repetitions allowed.
struct GammaWord {
    std::vector<int> indices;
    ComplexRational scalar{1};
};

template <CoefficientAlgebra A>
class BasicMultivector {
public:
    using Coefficient = A;
    using TermMap = std::map<BladeMask, A>;

    BasicMultivector() = default;
    explicit BasicMultivector(int dim) : dim_(dim) { checkDim(dim); }

    static BasicMultivector scalar(int dim, const A& value) {
        BasicMultivector m(dim);
        m.add(0, value);
        return m;
    }
    static BasicMultivector blade(int dim, BladeMask mask, const A& value) {
        BasicMultivector m(dim);
        if (dim < 32 && (mask >> dim) != 0) throw std::out_of_range("blade index exceeds dimension");
        m.add(mask, value);
        return m;
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    /// Coefficient of a blade; nullptr when absent.
    const A* find(BladeMask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? nullptr : &it->second;
    }

    void add(BladeMask mask, const A& value) {
        if (storsion::isZero(value)) return;
        auto [it, inserted] = terms_.try_emplace(mask, value);
        if (!inserted) {
            it->second = it->second + value;
            if (storsion::isZero(it->second)) terms_.erase(it);
        }
    }

    BasicMultivector& operator+=(const BasicMultivector& o) {
        adoptDim(o);
        for (const auto& [mask, c] : o.terms_) add(mask, c);
        return *this;
    }
    BasicMultivector& operator-=(const BasicMultivector& o) {
        adoptDim(o);
        for (const auto& [mask, c] : o.terms_) add(mask, c * ComplexRational(-1));
        return *this;
    }
    BasicMultivector& operator*=(const ComplexRational& s) {
        if (s.isZero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [mask, c] : terms_) c = c * s;
        return *this;
    }

    friend BasicMultivector operator+(BasicMultivector a, const BasicMultivector& b) { return a += b; }
    friend BasicMultivector operator-(BasicMultivector a, const BasicMultivector& b) { return a -= b; }
    friend BasicMultivector operator-(BasicMultivector a) { return a *= ComplexRational(-1); }
    friend BasicMultivector operator*(BasicMultivector a, const ComplexRational& s) { return a *= s; }
    friend BasicMultivector operator*(const ComplexRational& s, BasicMultivector a) { return a *= s; }

    /// Clifford product; coefficients multiply in the order a * b.
    friend BasicMultivector operator*(const BasicMultivector& a, const BasicMultivector& b) {
        if (a.isZero() || b.isZero()) return BasicMultivector(a.dim_ ? a.dim_ : b.dim_);
        if (a.dim_ != b.dim_) throw std::invalid_argument("multivector dimension mismatch");
        BasicMultivector out(a.dim_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                A prod = ca * cb;
                if (bladeProductSign(ma, mb) < 0) prod = prod * ComplexRational(-1);
                out.add(ma ^ mb, prod);
            }
        }
        return out;
    }

    friend bool operator==(const BasicMultivector& a, const BasicMultivector& b) {
        if (a.isZero() || b.isZero()) return a.isZero() && b.isZero();
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BasicMultivector& a, const BasicMultivector& b) { return !(a == b); }

    /// Right multiplication of every coefficient by a (commutes with Clifford part).
    BasicMultivector timesCoefficient(const A& c) const {
        BasicMultivector out(dim_);
        for (const auto& [mask, v] : terms_) out.add(mask, v * c);
        return out;
    }
    BasicMultivector coefficientTimes(const A& c) const {
        BasicMultivector out(dim_);
        for (const auto& [mask, v] : terms_) out.add(mask, c * v);
        return out;
    }

    /// Hermitian adjoint: reverses each blade and conjugates coefficients.
    BasicMultivector adjoint() const {
        BasicMultivector out(dim_);
        for (const auto& [mask, c] : terms_) {
            const int k = bladeGrade(mask);
            A v = storsion::adjoint(c);
            if ((k * (k - 1) / 2) % 2) v = v * ComplexRational(-1);
            out.add(mask, v);
        }
        return out;
    }

    /// Part of the given grade.
    BasicMultivector gradePart(int grade) const {
        BasicMultivector out(dim_);
        for (const auto& [mask, c] : terms_)
            if (bladeGrade(mask) == grade) out.add(mask, c);
        return out;
    }

private:
    static void checkDim(int dim) {
        if (dim < 1 || dim > kMaxCliffordDim) throw std::invalid_argument("Clifford dimension out of range");
    }
    void adoptDim(const BasicMultivector& o) {
        if (dim_ == 0) dim_ = o.dim_;
        else if (o.dim_ != 0 && o.dim_ != dim_ && !o.isZero())
            throw std::invalid_argument("multivector dimension mismatch");
    }

    int dim_ = 0;
    TermMap terms_;
};

using Multivector = BasicMultivector<ComplexRational>;

/// Reduces a gamma word by adjacent transpositions (sign flip per swap) and
/// contraction of equal neighbours (gamma^a gamma^a = 1).
Multivector canonicalize(const GammaWord& word, int dim);

Multivector generator(int dim, int index);
Multivector scalarMultivector(int dim, const ComplexRational& value);

/// Clifford product; throws on dimension mismatch.
Multivector mul(const Multivector& a, const Multivector& b);

/// Exponent m of the trace normalisation Tr(1) = 2^m: n/2 for even n,
/// (n+1)/2 for odd n (doubled representation gamma -> gamma (+) -gamma).
int traceExponent(int dim);

/// Normalised trace of Cl(R^n) (x) A: 2^m times the trace of the scalar part.
/// In the doubled odd-dimensional representation every non-scalar blade is traceless.
template <CoefficientAlgebra A>
ComplexRational cliffordTrace(const BasicMultivector<A>& x) {
    if (x.isZero()) return {};
    const A* s = x.find(0);
    if (s == nullptr) return {};
    return coefficientTrace(*s) * ComplexRational(Rational(1) << traceExponent(x.dim()));
}

/// (-i)^{n/2} gamma^0 ... gamma^{n-1}: self-adjoint, squares to one.
Multivector chirality(int dim);

/// Sum_a u_a gamma^a.
Multivector cliffordAction(std::span<const Rational> u, int dim);

/// Lifts a scalar multivector into Cl (x) A by tensoring with c.
template <CoefficientAlgebra A>
BasicMultivector<A> tensor(const Multivector& m, const A& c) {
    BasicMultivector<A> out(m.dim());
    for (const auto& [mask, v] : m.terms()) out.add(mask, c * v);
    return out;
}

/// Sum_a gamma^a (x) u_a for A-valued components.
template <CoefficientAlgebra A>
BasicMultivector<A> cliffordAction(std::span<const A> u, int dim) {
    if (static_cast<int>(u.size()) != dim) throw std::invalid_argument("one-form length does not match dimension");
    BasicMultivector<A> out(dim);
    for (int a = 0; a < dim; ++a) out.add(BladeMask{1} << a, u[a]);
    return out;
}

std::string toString(const Multivector& m);

}  // namespace storsion
