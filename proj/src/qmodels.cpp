#include "spectral_torsion/qmodels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace storsion {

ThetaMatrix ThetaMatrix::random(int dim, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    ThetaMatrix t(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) t.set(i, j, u(rng));
    return t;
}

void ThetaMatrix::set(int i, int j, double v) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::out_of_range("theta index out of range");
    if (i == j && v != 0.0) throw std::invalid_argument("theta must be antisymmetric");
    data_[std::size_t(i) * dim_ + j] = v;
    data_[std::size_t(j) * dim_ + i] = -v;
}

double ThetaMatrix::pair(const std::vector<int>& p, const std::vector<int>& q) const {
    double s = 0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) s += p[i] * (*this)(i, j) * q[j];
    return s;
}

TorusElement TorusElement::monomial(const ThetaMatrix& theta, const Mode& p, Complex c) {
    if (static_cast<int>(p.size()) != theta.dim()) throw std::invalid_argument("mode length does not match dimension");
    TorusElement a(theta);
    a.add(p, c);
    return a;
}

namespace {

TorusElement::Mode randomMode(int dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-2, 2);
    TorusElement::Mode p(dim);
    do {
        for (auto& x : p) x = d(rng);
    } while (std::all_of(p.begin(), p.end(), [](int x) { return x == 0; }));
    return p;
}

Complex randomCoefficient(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double re = u(rng);
    return {re, u(rng)};
}

TorusElement::Mode negate(TorusElement::Mode p) {
    for (auto& x : p) x = -x;
    return p;
}

}  // namespace

TorusElement TorusElement::randomSelfAdjoint(const ThetaMatrix& theta, int modes, std::mt19937_64& rng) {
    TorusElement h(theta);
    int placed = 0;
    if (modes % 2 == 1) {
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        h.add(Mode(theta.dim(), 0), u(rng));
        ++placed;
    }
    while (placed < modes) {
        const Mode p = randomMode(theta.dim(), rng);
        if (h.coeffs_.count(p) != 0) continue;
        const Complex c = randomCoefficient(rng);
        h.add(p, c);
        h.add(negate(p), std::conj(c));
        placed += 2;
    }
    return h;
}

TorusElement TorusElement::random(const ThetaMatrix& theta, int modes, std::mt19937_64& rng) {
    TorusElement a(theta);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int k = 0; k < modes; ++k) {
        Mode p(theta.dim());
        for (auto& x : p) x = d(rng);
        a.add(p, randomCoefficient(rng));
    }
    return a;
}

void TorusElement::add(const Mode& p, Complex c) {
    if (static_cast<int>(p.size()) != dim()) throw std::invalid_argument("mode length does not match dimension");
    if (c == Complex(0.0)) return;
    auto [it, inserted] = coeffs_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == Complex(0.0)) coeffs_.erase(it);
    }
}

TorusElement TorusElement::adjoint() const {
    TorusElement out(theta_);
    for (const auto& [p, c] : coeffs_) out.add(negate(p), std::conj(c));
    return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    if (!(o.theta_ == theta_)) throw std::invalid_argument("torus elements with different theta");
    for (const auto& [p, c] : o.coeffs_) add(p, c);
    return *this;
}

TorusElement& TorusElement::operator*=(Complex s) {
    if (s == Complex(0.0)) coeffs_.clear();
    for (auto& [p, c] : coeffs_) c *= s;
    return *this;
}

double distance(const TorusElement& a, const TorusElement& b) {
    const TorusElement diff = a - b;
    double m = 0;
    for (const auto& [p, c] : diff.coefficients()) m = std::max(m, std::abs(c));
    return m;
}

TorusElement torusMul(const TorusElement& a, const TorusElement& b) {
    if (!(a.theta() == b.theta())) throw std::invalid_argument("torus elements with different theta");
    TorusElement out(a.theta());
    TorusElement::Mode r(a.dim());
    for (const auto& [p, x] : a.coefficients())
        for (const auto& [q, y] : b.coefficients()) {
            for (int i = 0; i < a.dim(); ++i) r[i] = p[i] + q[i];
            const double phase = -std::numbers::pi * a.theta().pair(p, q);
            out.add(r, x * y * std::polar(1.0, phase));
        }
    return out;
}

Complex torusTrace(const TorusElement& a) {
    auto it = a.coefficients().find(TorusElement::Mode(a.dim(), 0));
    return it == a.coefficients().end() ? Complex(0.0) : it->second;
}

TorusElement torusDerive(int j, const TorusElement& a) {
    if (j < 0 || j >= a.dim()) throw std::out_of_range("derivation index out of range");
    TorusElement out(a.theta());
    for (const auto& [p, c] : a.coefficients()) out.add(p, Complex(0.0, p[j]) * c);
    return out;
}

FormalSeries::FormalSeries(const ThetaMatrix& theta, int order) : terms_(order + 1, TorusElement(theta)) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
}

FormalSeries FormalSeries::exponential(const TorusElement& h, double s, int order) {
    FormalSeries e(h.theta(), order);
    TorusElement power = TorusElement::unit(h.theta());
    double factor = 1.0;
    for (int k = 0; k <= order; ++k) {
        e[k] = power * Complex(factor);
        power = power * h;
        factor *= s / (k + 1);
    }
    return e;
}

FormalSeries FormalSeries::derive(int j) const {
    FormalSeries out = *this;
    for (auto& t : out.terms_) t = torusDerive(j, t);
    return out;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    const int k = std::min(a.order(), b.order());
    FormalSeries out(a[0].theta(), k);
    for (int i = 0; i <= k; ++i)
        for (int j = 0; i + j <= k; ++j) out[i + j] += a[i] * b[j];
    return out;
}

double torusTraceIdentity(const TorusElement& h, int alpha, int beta, int j, int order) {
    if (order < 1) throw std::invalid_argument("truncation order must be at least 1");
    if (distance(h, h.adjoint()) > 1e-12) throw std::invalid_argument("h must be self-adjoint");
    const auto ka = FormalSeries::exponential(h, alpha, order);
    const auto kb = FormalSeries::exponential(h, beta, order);
    const auto dk = FormalSeries::exponential(h, 1.0, order).derive(j);
    const auto product = ka * dk * kb;
    double residual = 0;
    for (int k = 0; k <= order; ++k) residual = std::max(residual, std::abs(torusTrace(product[k])));
    return residual;
}

namespace {

using Poly = QuantumDiscElement::Poly;

void trim(Poly& p) {
    while (!p.empty() && p.back() == Complex(0.0)) p.pop_back();
}

Poly polyAdd(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

Poly polyMul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

/// p(s y + t) by Horner's rule.
Poly polyComposeLinear(const Poly& p, double s, double t) {
    Poly out;
    const Poly lin{t, s};
    for (std::size_t i = p.size(); i-- > 0;) out = polyAdd(polyMul(out, lin), Poly{p[i]});
    return out;
}

/// p(phi^m(y)) with phi^m(y) = q^{2m} y + 1 - q^{2m}.
Poly shiftBy(const Poly& p, double q, int m) {
    const double s = std::pow(q, 2 * m);
    return polyComposeLinear(p, s, 1 - s);
}

/// z*^c z^c = prod_{i<c} phi^i(y).
Poly starPower(double q, int c) {
    Poly out{1.0};
    for (int i = 0; i < c; ++i) out = polyMul(out, shiftBy(Poly{0.0, 1.0}, q, i));
    return out;
}

Complex polyEval(const Poly& p, double y) {
    Complex s = 0;
    for (std::size_t i = p.size(); i-- > 0;) s = s * y + p[i];
    return s;
}

}  // namespace

QuantumDiscElement::QuantumDiscElement(double q) : q_(q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0, 1)");
}

QuantumDiscElement QuantumDiscElement::scalar(double q, Complex c) {
    QuantumDiscElement x(q);
    x.addTerm(0, Poly{c}, 0);
    return x;
}

QuantumDiscElement QuantumDiscElement::z(double q) {
    QuantumDiscElement x(q);
    x.addTerm(1, Poly{1.0}, 0);
    return x;
}

QuantumDiscElement QuantumDiscElement::zStar(double q) {
    QuantumDiscElement x(q);
    x.addTerm(0, Poly{1.0}, 1);
    return x;
}

QuantumDiscElement QuantumDiscElement::yPower(double q, int k) {
    if (k < 0) throw std::invalid_argument("negative power");
    QuantumDiscElement x(q);
    Poly p(k + 1, 0.0);
    p[k] = 1.0;
    x.addTerm(0, p, 0);
    return x;
}

void QuantumDiscElement::addTerm(int a, const Poly& p, int c) {
    if (a < 0 || c < 0) throw std::invalid_argument("negative generator power");
    Poly& slot = terms_[{a, c}];
    slot = polyAdd(slot, p);
    if (slot.empty()) terms_.erase({a, c});
}

QuantumDiscElement QuantumDiscElement::adjoint() const {
    QuantumDiscElement out(q_);
    for (const auto& [key, p] : terms_) {
        Poly bar = p;
        for (auto& x : bar) x = std::conj(x);
        out.addTerm(key.second, bar, key.first);
    }
    return out;
}

QuantumDiscElement& QuantumDiscElement::operator+=(const QuantumDiscElement& o) {
    if (o.q_ != q_) throw std::invalid_argument("quantum disc elements with different q");
    for (const auto& [key, p] : o.terms_) addTerm(key.first, p, key.second);
    return *this;
}

QuantumDiscElement& QuantumDiscElement::operator*=(Complex s) {
    if (s == Complex(0.0)) terms_.clear();
    for (auto& [key, p] : terms_) {
        for (auto& x : p) x *= s;
    }
    return *this;
}

QuantumDiscElement operator*(const QuantumDiscElement& x, const QuantumDiscElement& y) {
    if (x.q() != y.q()) throw std::invalid_argument("quantum disc elements with different q");
    const double q = x.q();
    QuantumDiscElement out(q);
    for (const auto& [k1, p] : x.terms()) {
        const auto [a, c] = k1;
        for (const auto& [k2, r] : y.terms()) {
            const auto [b, d] = k2;
            if (c >= b) {
                // z*^c z^b = z*^{c-b} G_b(y), then move y-polynomials left past z*^{c-b}.
                const int e = c - b;
                const Poly mid = polyMul(shiftBy(starPower(q, b), q, e), shiftBy(r, q, e));
                out.addTerm(a, polyMul(p, mid), e + d);
            } else {
                // z*^c z^b = G_c(y) z^{b-c}, then move P G_c right past z^{b-c}.
                const int e = b - c;
                out.addTerm(a + e, polyMul(shiftBy(polyMul(p, starPower(q, c)), q, e), r), d);
            }
        }
    }
    return out;
}

namespace {

double weight(double q, int k) { return std::sqrt(1 - std::pow(q, 2 * (k + 1))); }
double yValue(double q, int k) { return 1 - std::pow(q, 2 * (k + 1)); }

void requireTruncation(int n) {
    if (n < 1) throw std::invalid_argument("truncation must be at least 1");
}

}  // namespace

Eigen::MatrixXcd discRepresent(const QuantumDiscElement& x, int truncation) {
    requireTruncation(truncation);
    const double q = x.q();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(truncation + 1, truncation + 1);
    for (const auto& [key, p] : x.terms()) {
        const auto [a, c] = key;
        for (int k = c; k <= truncation; ++k) {
            const int mid = k - c;
            const int row = mid + a;
            if (row > truncation) break;
            double w = 1;
            for (int i = 1; i <= c; ++i) w *= weight(q, k - i);
            for (int i = 0; i < a; ++i) w *= weight(q, mid + i);
            m(row, k) += w * polyEval(p, yValue(q, mid));
        }
    }
    return m;
}

Complex discPartialTrace(const QuantumDiscElement& x, int truncation) {
    requireTruncation(truncation);
    const double q = x.q();
    Complex s = 0;
    for (const auto& [key, p] : x.terms()) {
        const auto [a, c] = key;
        if (a != c) continue;
        for (int k = a; k <= truncation; ++k) {
            double w = 1;
            for (int i = 1; i <= a; ++i) {
                const double wi = weight(q, k - i);
                w *= wi * wi;
            }
            s += w * polyEval(p, yValue(q, k - a));
        }
    }
    return s;
}

Complex tau1(const QuantumDiscElement& x) {
    Complex s = 0;
    for (const auto& [key, p] : x.terms())
        if (key.first == key.second) s += polyEval(p, 1.0);
    return s;
}

namespace {

LimitEstimate tau0(const QuantumDiscElement& x, int truncation, double offset) {
    const Complex t1 = tau1(x);
    auto at = [&](int n) { return discPartialTrace(x, n) - (n + offset) * t1; };
    const Complex v = at(truncation);
    return {v, std::abs(v - at(std::max(1, truncation / 2)))};
}

}  // namespace

LimitEstimate tau0Up(const QuantumDiscElement& x, int truncation) { return tau0(x, truncation, 1.5); }
LimitEstimate tau0Down(const QuantumDiscElement& x, int truncation) { return tau0(x, truncation, 0.5); }

double suq2ResidueCancellation(const QuantumDiscElement& x, int truncation) {
    return std::abs(tau0Up(x, truncation).value - tau0Down(x, truncation).value + tau1(x));
}

double suq2PairedCombination(const QuantumDiscElement& x, const QuantumDiscElement& y, int truncation) {
    const Complex dx = tau0Up(x, truncation).value - tau0Down(x, truncation).value;
    const Complex dy = tau0Up(y, truncation).value - tau0Down(y, truncation).value;
    return std::abs(tau1(x) * dy - dx * tau1(y));
}

double Suq2DiracSpec::zetaPartialSum(double s, double cutoff) {
    double sum = 0;
    for (int twoJ = 0; twoJ <= static_cast<int>(std::floor(2 * cutoff)); ++twoJ) {
        const double j = twoJ / 2.0;
        sum += upMultiplicity(j) * std::pow(std::abs(upEigenvalue(j)), -s);
        sum += downMultiplicity(j) * std::pow(std::abs(downEigenvalue(j)), -s);
    }
    return sum;
}

double Suq2DiracSpec::dyadicIncrementRatio(double s, double cutoff) {
    const double outer = zetaPartialSum(s, cutoff) - zetaPartialSum(s, cutoff / 2);
    const double inner = zetaPartialSum(s, cutoff / 2) - zetaPartialSum(s, cutoff / 4);
    return outer / inner;
}

}  // namespace storsion
