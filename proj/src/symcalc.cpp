#include "spectral_torsion/symcalc.hpp"

#include <cmath>
#include <numbers>

namespace storsion {

double PiMultiple::value() const { return coefficient.get_d() * std::pow(std::numbers::pi, piPower); }

PiMultiple sphereVolume(int n) {
    if (n < 2) throw std::invalid_argument("sphereVolume needs n >= 2");
    if (n % 2 == 0) {
        // 2 pi^{n/2} / (n/2 - 1)!
        Rational fact = 1;
        for (int k = 2; k < n / 2; ++k) fact *= k;
        return {Rational(2) / fact, n / 2};
    }
    // 2^{(n+1)/2} pi^{(n-1)/2} / (n-2)!!
    Rational dfact = 1;
    for (int k = n - 2; k > 1; k -= 2) dfact *= k;
    return {Rational(mpz_class(1) << ((n + 1) / 2)) / dfact, (n - 1) / 2};
}

Rational sphereMoment(const MultiIndex& alpha, int n) {
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("multi-index length mismatch");
    Rational num = 1;
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("negative exponent");
        if (a % 2 != 0) return 0;
        for (int k = a - 1; k > 1; k -= 2) num *= k;
        total += a;
    }
    Rational den = 1;
    for (int k = 0; k < total / 2; ++k) den *= n + 2 * k;
    return num / den;
}

std::vector<std::vector<Rational>> rationalSpherePoints(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numer(-5, 5), denom(1, 4);
    std::vector<std::vector<Rational>> pts;
    while (static_cast<int>(pts.size()) < count) {
        std::vector<Rational> t(n - 1);
        Rational t2 = 0;
        for (auto& v : t) {
            v = Rational(numer(rng), denom(rng));
            v.canonicalize();
            t2 += v * v;
        }
        std::vector<Rational> xi(n);
        for (int j = 0; j + 1 < n; ++j) xi[j] = 2 * t[j] / (1 + t2);
        xi[n - 1] = (1 - t2) / (1 + t2);
        pts.push_back(std::move(xi));
    }
    return pts;
}

namespace detail {

std::map<MultiIndex, Rational> radialSquarePower(int n, int k) {
    std::map<MultiIndex, Rational> out;
    MultiIndex beta(n, 0);
    mpz_class kfact = 1;
    for (int j = 2; j <= k; ++j) kfact *= j;
    // Enumerate compositions of k into n parts.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            beta[pos] = left;
            mpz_class den = 1;
            MultiIndex alpha(n);
            for (int j = 0; j < n; ++j) {
                for (int f = 2; f <= beta[j]; ++f) den *= f;
                alpha[j] = 2 * beta[j];
            }
            out[alpha] = Rational(kfact, den);
            return;
        }
        for (int b = 0; b <= left; ++b) {
            beta[pos] = b;
            self(self, pos + 1, left - b);
        }
    };
    rec(rec, 0, k);
    for (auto& [a, w] : out) w.canonicalize();
    return out;
}

}  // namespace detail

CurvatureJet::CurvatureJet(int dim, std::vector<Rational> riemann) : dim_(dim), riemann_(std::move(riemann)) {
    if (riemann_.size() != std::size_t(dim) * dim * dim * dim) throw std::invalid_argument("Riemann tensor size mismatch");
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d) {
                    const Rational& r = riemann_[index(a, b, c, d)];
                    if (r != -riemann_[index(b, a, c, d)] || r != -riemann_[index(a, b, d, c)] ||
                        r != riemann_[index(c, d, a, b)])
                        throw std::invalid_argument("Riemann tensor violates pair symmetries");
                    if (r + riemann_[index(a, c, d, b)] + riemann_[index(a, d, b, c)] != 0)
                        throw std::invalid_argument("Riemann tensor violates the Bianchi identity");
                }
}

CurvatureJet CurvatureJet::random(int dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-3, 3);
    std::vector<Rational> r(std::size_t(dim) * dim * dim * dim);
    auto at = [&](int a, int b, int c, int d) -> Rational& {
        return r[((std::size_t(a) * dim + b) * dim + c) * dim + d];
    };
    for (int term = 0; term < 2; ++term) {
        std::vector<Rational> h(std::size_t(dim) * dim);
        for (int a = 0; a < dim; ++a)
            for (int b = a; b < dim; ++b) h[a * dim + b] = h[b * dim + a] = entry(rng);
        const int sign = term == 0 ? 1 : -1;
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b)
                for (int c = 0; c < dim; ++c)
                    for (int d = 0; d < dim; ++d)
                        at(a, b, c, d) += sign * (h[a * dim + c] * h[b * dim + d] - h[a * dim + d] * h[b * dim + c]);
    }
    return CurvatureJet(dim, std::move(r));
}

Rational CurvatureJet::ricci(int a, int b) const {
    Rational s = 0;
    for (int c = 0; c < dim_; ++c) s += riemann(c, a, c, b);
    return s;
}

Rational CurvatureJet::christoffelSlope(int a, int b, int c, int d) const {
    return -Rational(1, 3) * (riemann(a, b, c, d) + riemann(a, c, b, d));
}

Rational CurvatureJet::spinConnectionSlope(int j, int k, int l, int m) const {
    return Rational(1, 2) * riemann(k, l, m, j);
}

}  // namespace storsion
