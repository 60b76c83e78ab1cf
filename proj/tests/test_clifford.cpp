#include <random>

#include "doctest.h"

#include "spectral_torsion/clifford.hpp"
#include "spectral_torsion/oracles.hpp"
#include "spectral_torsion/torsion.hpp"

using namespace storsion;

namespace {

// Indices below are 0-based: gamma^1 in the usual notation is index 0.
Multivector word(std::vector<int> idx, int n) { return canonicalize({std::move(idx), 1}, n); }

// Tr(gamma^{a1} ... gamma^{a2k}) by the pairing recursion, with Tr(1) = 2^m.
ComplexRational pairingTrace(const std::vector<int>& a, int n) {
    if (a.empty()) return ComplexRational(Rational(1) << traceExponent(n));
    if (a.size() % 2 != 0) return {};
    ComplexRational total;
    for (std::size_t j = 1; j < a.size(); ++j) {
        if (a[0] != a[j]) continue;
        std::vector<int> rest;
        for (std::size_t k = 1; k < a.size(); ++k)
            if (k != j) rest.push_back(a[k]);
        const ComplexRational t = pairingTrace(rest, n);
        total += (j % 2 == 1) ? t : -t;
    }
    return total;
}

}  // namespace

TEST_CASE("canonicalize examples") {
    CHECK(word({0, 0}, 4) == scalarMultivector(4, 1));
    CHECK(word({1, 0}, 4) == -word({0, 1}, 4));
    CHECK(word({0, 1, 0}, 4) == -generator(4, 1));
    const auto g = oracle::pauliGammaMatrices(4);
    CHECK(oracle::multivectorMatrix(word({0, 1, 0}, 4), g) == oracle::wordMatrix({{0, 1, 0}, 1}, g));
    CHECK(word({}, 3) == scalarMultivector(3, 1));
    CHECK_THROWS_AS(word({4}, 4), std::out_of_range);
    CHECK_THROWS_AS(word({-1}, 4), std::out_of_range);
}

TEST_CASE("mul examples") {
    const auto x = word({0, 2, 3}, 4) * ComplexRational(3, 1);
    CHECK(mul(scalarMultivector(4, 1), x) == x);
    CHECK(mul(generator(4, 0), generator(4, 0)) == scalarMultivector(4, 1));
    CHECK(mul(word({0, 1}, 4), word({1, 2}, 4)) == word({0, 2}, 4));
    const auto g = oracle::pauliGammaMatrices(4);
    CHECK(oracle::multivectorMatrix(word({0, 2}, 4), g) ==
          oracle::wordMatrix({{0, 1}, 1}, g) * oracle::wordMatrix({{1, 2}, 1}, g));
    CHECK_THROWS_AS(mul(generator(3, 0), generator(4, 0)), std::invalid_argument);
}

TEST_CASE("clifford trace examples") {
    CHECK(cliffordTrace(scalarMultivector(4, 1)) == ComplexRational(4));
    CHECK(cliffordTrace(word({0, 1}, 4)).isZero());
    CHECK(cliffordTrace(word({0, 1, 1, 0}, 6)) == ComplexRational(8));
    CHECK(oracle::wordMatrix({{0, 1, 1, 0}, 1}, oracle::pauliGammaMatrices(6)).trace() == ComplexRational(8));
    CHECK(cliffordTrace(scalarMultivector(3, 1)) == ComplexRational(4));
    CHECK(cliffordTrace(scalarMultivector(5, 1)) == ComplexRational(8));
}

TEST_CASE("chirality") {
    CHECK(chirality(2) == word({0, 1}, 2) * ComplexRational(0, -1));
    CHECK(chirality(4) == -word({0, 1, 2, 3}, 4));
    for (int n : {2, 4, 6}) {
        const auto g = chirality(n);
        CHECK(mul(g, g) == scalarMultivector(n, 1));
        CHECK(g.adjoint() == g);
        for (int a = 0; a < n; ++a) CHECK(mul(g, generator(n, a)) == -mul(generator(n, a), g));
    }
    CHECK_THROWS_AS(chirality(3), std::invalid_argument);
}

TEST_CASE("clifford action") {
    CHECK(cliffordAction(frameOneForm(3, 0), 3) == generator(3, 0));
    CHECK(cliffordAction(OneForm(4, Rational(0)), 4).isZero());
    const OneForm u{1, 2, 0, 0};
    CHECK(cliffordAction(u, 4) == generator(4, 0) + generator(4, 1) * ComplexRational(2));
    CHECK_THROWS_AS(cliffordAction(u, 3), std::invalid_argument);
}

TEST_CASE("properties on random words") {
    std::mt19937_64 rng(11);
    for (int n : {2, 3, 4, 5, 6}) {
        for (int k = 0; k < 60; ++k) {
            const auto w1 = oracle::randomWord(n, 8, rng), w2 = oracle::randomWord(n, 8, rng),
                       w3 = oracle::randomWord(n, 8, rng);
            const auto a = canonicalize(w1, n), b = canonicalize(w2, n), c = canonicalize(w3, n);
            CHECK(cliffordTrace(mul(a, b)) == cliffordTrace(mul(b, a)));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(cliffordTrace(word(w1.indices, n)) == pairingTrace(w1.indices, n));
            if (w1.indices.size() % 2 == 1) CHECK(cliffordTrace(word(w1.indices, n)).isZero());
            CHECK(mul(a, b).adjoint() == mul(b.adjoint(), a.adjoint()));
            if (n % 2 == 0) {
                const auto g = oracle::pauliGammaMatrices(n);
                CHECK(oracle::multivectorMatrix(a, g) == oracle::wordMatrix(w1, g));
            }
        }
    }
}

TEST_CASE("tensor lift into a matrix coefficient algebra") {
    const auto m = ComplexMatrix::unit(2, 0, 1);
    const auto x = tensor(generator(3, 0), m);
    const auto y = tensor(generator(3, 0), m.adjoint());
    CHECK(cliffordTrace(x * y) == ComplexRational(4));
    CHECK(cliffordTrace(y * x) == ComplexRational(4));
}
