#include "spectral_torsion/rational.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace storsion {

Rational parseRational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.front() == '+') s.erase(s.begin());
    const auto slash = s.find('/');
    auto checkDigits = [&](const std::string& part, bool allowSign) {
        std::size_t start = (allowSign && !part.empty() && part[0] == '-') ? 1 : 0;
        if (part.size() == start) throw std::invalid_argument("malformed rational: " + text);
        for (std::size_t k = start; k < part.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(part[k])))
                throw std::invalid_argument("malformed rational: " + text);
        }
    };
    if (slash == std::string::npos) {
        checkDigits(s, true);
    } else {
        checkDigits(s.substr(0, slash), true);
        checkDigits(s.substr(slash + 1), false);
    }
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string toString(const Rational& r) { return r.get_str(); }

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    const Rational d = o.norm();
    if (sgn(d) == 0) throw std::domain_error("division by zero complex rational");
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::string ComplexRational::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    if (sgn(z.im()) == 0) return os << z.re().get_str();
    if (sgn(z.re()) != 0) {
        os << z.re().get_str() << (sgn(z.im()) > 0 ? "+" : "-");
        Rational a = abs(z.im());
        if (a != 1) os << a.get_str();
        return os << "i";
    }
    if (z.im() == 1) return os << "i";
    if (z.im() == -1) return os << "-i";
    return os << z.im().get_str() << "i";
}

ComplexRational parseComplexRational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw std::invalid_argument("empty complex literal");
    if (s.back() != 'i' && s.back() != 'j') return parseRational(s);
    s.pop_back();
    // Split at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if (s[k] == '+' || s[k] == '-') {
            split = k;
            break;
        }
    }
    std::string rePart = split == std::string::npos ? "" : s.substr(0, split);
    std::string imPart = split == std::string::npos ? s : s.substr(split);
    auto imag = [&](std::string p) -> Rational {
        if (p.empty() || p == "+") return 1;
        if (p == "-") return -1;
        return parseRational(p);
    };
    return {rePart.empty() ? Rational(0) : parseRational(rePart), imag(imPart)};
}

ComplexRational powerOfI(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

}  // namespace storsion
