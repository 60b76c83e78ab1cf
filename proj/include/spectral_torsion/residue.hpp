#pragma once

#include <complex>
#include <string>

#include "spectral_torsion/rational.hpp"
#include "spectral_torsion/symcalc.hpp"

namespace storsion {

/// Exact residue density: multiplier * V(S^{n-1}), per unit volume.
class ResidueValue {
public:
    ResidueValue() = default;
    ResidueValue(int dim, ComplexRational multiplier) : dim_(dim), multiplier_(std::move(multiplier)) {}

    int dim() const { return dim_; }
    /// Coefficient of the V(S^{n-1}) unit.
    const ComplexRational& multiplier() const { return multiplier_; }
    bool isZero() const { return multiplier_.isZero(); }

    /// The same value as an exact multiple of pi^piPower().
    ComplexRational piCoefficient() const;
    int piPower() const;
    std::complex<double> numeric() const;

    /// e.g. "-4i V(S^3) = -8i pi^2".
    std::string str() const;

    ResidueValue& operator+=(const ResidueValue& o);
    friend ResidueValue operator+(ResidueValue a, const ResidueValue& b) { return a += b; }
    friend ResidueValue operator*(const ComplexRational& s, const ResidueValue& r) {
        return {r.dim_, s * r.multiplier_};
    }
    friend bool operator==(const ResidueValue& a, const ResidueValue& b) {
        if (a.isZero() && b.isZero()) return true;
        return a.dim_ == b.dim_ && a.multiplier_ == b.multiplier_;
    }
    friend bool operator!=(const ResidueValue& a, const ResidueValue& b) { return !(a == b); }

private:
    int dim_ = 0;
    ComplexRational multiplier_;
};

}  // namespace storsion
