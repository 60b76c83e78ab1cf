#include "spectral_torsion/residue.hpp"

#include <sstream>
#include <stdexcept>

namespace storsion {

ComplexRational ResidueValue::piCoefficient() const {
    if (dim_ < 2) return multiplier_;
    return multiplier_ * ComplexRational(sphereVolume(dim_).coefficient);
}

int ResidueValue::piPower() const { return dim_ < 2 ? 0 : sphereVolume(dim_).piPower; }

std::complex<double> ResidueValue::numeric() const {
    if (dim_ < 2) return multiplier_.toComplex();
    return multiplier_.toComplex() * sphereVolume(dim_).value();
}

std::string ResidueValue::str() const {
    if (isZero()) return "0";
    std::ostringstream os;
    os << "(" << multiplier_ << ") V(S^" << dim_ - 1 << ") = (" << piCoefficient() << ")";
    if (piPower() == 1) os << " pi";
    else if (piPower() > 1) os << " pi^" << piPower();
    return os.str();
}

ResidueValue& ResidueValue::operator+=(const ResidueValue& o) {
    if (o.isZero()) return *this;
    if (isZero()) return *this = o;
    if (o.dim_ != dim_) throw std::invalid_argument("adding residues of different dimension");
    multiplier_ += o.multiplier_;
    return *this;
}

}  // namespace storsion
