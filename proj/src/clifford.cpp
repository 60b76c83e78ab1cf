#include "spectral_torsion/clifford.hpp"

#include <sstream>
#include <utility>

namespace storsion {

Multivector canonicalize(const GammaWord& word, int dim) {
    std::vector<int> w = word.indices;
    for (int a : w) {
        if (a < 0 || a >= dim) throw std::out_of_range("gamma index out of range: " + std::to_string(a));
    }
    Multivector out(dim);
    if (word.scalar.isZero()) return out;
    int sign = 1;
    // Bubble pass: swap descending neighbours, cancel equal neighbours, repeat.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < w.size();) {
            if (w[k] == w[k + 1]) {
                w.erase(w.begin() + static_cast<std::ptrdiff_t>(k), w.begin() + static_cast<std::ptrdiff_t>(k) + 2);
                changed = true;
                if (k > 0) --k;
            } else if (w[k] > w[k + 1]) {
                std::swap(w[k], w[k + 1]);
                sign = -sign;
                changed = true;
                ++k;
            } else {
                ++k;
            }
        }
    }
    BladeMask mask = 0;
    for (int a : w) mask |= BladeMask{1} << a;
    out.add(mask, sign > 0 ? word.scalar : -word.scalar);
    return out;
}

Multivector generator(int dim, int index) {
    if (index < 0 || index >= dim) throw std::out_of_range("gamma index out of range");
    return Multivector::blade(dim, BladeMask{1} << index, ComplexRational(1));
}

Multivector scalarMultivector(int dim, const ComplexRational& value) {
    return Multivector::scalar(dim, value);
}

Multivector mul(const Multivector& a, const Multivector& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("multivector dimension mismatch");
    return a * b;
}

int traceExponent(int dim) { return dim % 2 == 0 ? dim / 2 : (dim + 1) / 2; }

Multivector chirality(int dim) {
    if (dim % 2 != 0) throw std::invalid_argument("chirality requires an even dimension");
    const BladeMask top = dim == 32 ? ~BladeMask{0} : ((BladeMask{1} << dim) - 1);
    return Multivector::blade(dim, top, powerOfI(-dim / 2));
}

Multivector cliffordAction(std::span<const Rational> u, int dim) {
    if (static_cast<int>(u.size()) != dim) throw std::invalid_argument("one-form length does not match dimension");
    Multivector out(dim);
    for (int a = 0; a < dim; ++a) out.add(BladeMask{1} << a, ComplexRational(u[a]));
    return out;
}

std::string toString(const Multivector& m) {
    if (m.isZero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : m.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int a = 0; a < m.dim(); ++a)
            if (mask & (BladeMask{1} << a)) os << "g" << a;
    }
    return os.str();
}

}  // namespace storsion
