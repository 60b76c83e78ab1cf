#include "spectral_torsion/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include "spectral_torsion/torsion.hpp"

namespace storsion::oracle {

namespace {

ComplexMatrix pauli(int k) {
    ComplexMatrix s(2);
    switch (k) {
        case 0:
            s(0, 0) = 1;
            s(1, 1) = 1;
            break;
        case 1:
            s(0, 1) = 1;
            s(1, 0) = 1;
            break;
        case 2:
            s(0, 1) = ComplexRational(0, -1);
            s(1, 0) = ComplexRational(0, 1);
            break;
        default:
            s(0, 0) = 1;
            s(1, 1) = -1;
    }
    return s;
}

}  // namespace

std::vector<ComplexMatrix> pauliGammaMatrices(int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("explicit gamma matrices need an even dimension");
    const int m = n / 2;
    std::vector<ComplexMatrix> gammas;
    for (int k = 0; k < m; ++k) {
        for (int which : {1, 2}) {
            ComplexMatrix g = ComplexMatrix::identity(1);
            for (int slot = 0; slot < m; ++slot) g = kron(g, slot < k ? pauli(3) : slot == k ? pauli(which) : pauli(0));
            gammas.push_back(g);
        }
    }
    return gammas;
}

ComplexMatrix wordMatrix(const GammaWord& word, const std::vector<ComplexMatrix>& gammas) {
    ComplexMatrix out = ComplexMatrix::identity(gammas.front().size());
    for (int i : word.indices) out = out * gammas.at(i);
    return out * word.scalar;
}

ComplexMatrix multivectorMatrix(const Multivector& m, const std::vector<ComplexMatrix>& gammas) {
    ComplexMatrix out(gammas.front().size());
    for (const auto& [mask, c] : m.terms()) {
        GammaWord w;
        for (int i = 0; i < static_cast<int>(gammas.size()); ++i)
            if (mask & (BladeMask{1} << i)) w.indices.push_back(i);
        w.scalar = c;
        out += wordMatrix(w, gammas);
    }
    return out;
}

GammaWord randomWord(int n, int maxLength, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> len(0, maxLength), idx(0, n - 1);
    GammaWord w;
    const int k = len(rng);
    for (int i = 0; i < k; ++i) w.indices.push_back(idx(rng));
    w.scalar = ComplexRational(randomSmallRational(rng), randomSmallRational(rng));
    return w;
}

namespace {

// Number of perfect matchings of `items` pairing equal labels only.
long countPairings(std::vector<int> items) {
    if (items.empty()) return 1;
    const int first = items.front();
    items.erase(items.begin());
    long total = 0;
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (items[k] != first) continue;
        std::vector<int> rest = items;
        rest.erase(rest.begin() + static_cast<long>(k));
        total += countPairings(rest);
    }
    return total;
}

}  // namespace

Rational pairingSphereMoment(const MultiIndex& alpha, int n) {
    std::vector<int> items;
    for (int j = 0; j < static_cast<int>(alpha.size()); ++j)
        for (int r = 0; r < alpha[j]; ++r) items.push_back(j);
    if (items.size() % 2 != 0) return 0;
    // E|x|^{2k} for a standard Gaussian in R^n, i.e. all pairings of 2k
    // labels summed over n values per pair: n (n+2) ... (n+2k-2).
    Rational radial = 1;
    for (std::size_t k = 0; k < items.size() / 2; ++k) radial *= n + 2 * static_cast<long>(k);
    return Rational(countPairings(items)) / radial;
}

std::vector<double> monteCarloSphereMoments(const std::vector<MultiIndex>& monomials, int n, int points,
                                            std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<double> sums(monomials.size(), 0.0);
    std::vector<double> x(n);
    for (int p = 0; p < points; ++p) {
        double r2 = 0;
        for (auto& v : x) {
            v = gauss(rng);
            r2 += v * v;
        }
        const double inv = 1.0 / std::sqrt(r2);
        for (auto& v : x) v *= inv;
        for (std::size_t i = 0; i < monomials.size(); ++i) {
            double t = 1;
            for (int j = 0; j < n; ++j)
                for (int e = 0; e < monomials[i][j]; ++e) t *= x[j];
            sums[i] += t;
        }
    }
    for (auto& s : sums) s /= points;
    return sums;
}

}  // namespace storsion::oracle
