#include <complex>
#include <random>

#include "doctest.h"

#include "numeric_oracle.hpp"
#include "spectral_torsion/oracles.hpp"
#include "spectral_torsion/torsion.hpp"

using namespace storsion;

namespace {

using HS = HomogeneousSymbol<ComplexRational>;

TorsionTensor unitTorsion(int n) {
    TorsionTensor t(n);
    t.set(0, 1, 2, 1);
    return t;
}

ComplexRational cr(long re, long im) { return {Rational(re), Rational(im)}; }

Multivector randomMultivector(int n, std::mt19937_64& rng) {
    Multivector p(n);
    std::uniform_int_distribution<int> mask(0, (1 << n) - 1);
    for (int k = 0; k < 6; ++k)
        p += Multivector::blade(n, static_cast<BladeMask>(mask(rng)),
                                ComplexRational(randomSmallRational(rng), randomSmallRational(rng)));
    return p;
}

Multivector oneFormProduct(const OneForm& u, const OneForm& v, const OneForm& w, int n) {
    return cliffordAction(u, n) * cliffordAction(v, n) * cliffordAction(w, n);
}

}  // namespace

TEST_CASE("contorsion from torsion") {
    CHECK(contorsionFromTorsion(TorsionTensor(3)).components().isZero());
    const auto tau = contorsionFromTorsion(unitTorsion(3));
    CHECK(tau(0, 1, 2) == Rational(1, 2));
    CHECK(tau(0, 2, 1) == Rational(-1, 2));
    CHECK(tau(2, 0, 1) == Rational(1, 2));
    const auto back = torsionFromContorsion(tau);
    CHECK(back(0, 1, 2) == 1);
    CHECK(back == unitTorsion(3).toRank3());
}

TEST_CASE("torsion contorsion roundtrip") {
    std::mt19937_64 rng(11);
    for (int n = 3; n <= 6; ++n)
        for (int k = 0; k < 10; ++k) {
            const auto t = TorsionTensor::random(n, rng);
            CHECK(TorsionTensor::fromComponents(torsionFromContorsion(contorsionFromTorsion(t))) == t);
        }
}

TEST_CASE("torsion from a general contorsion") {
    std::mt19937_64 rng(12);
    const int n = 4;
    for (int trial = 0; trial < 10; ++trial) {
        Rank3Tensor raw(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    raw(i, j, k) = randomSmallRational(rng);
                    raw(i, k, j) = -raw(i, j, k);
                }
        const auto t = torsionFromContorsion(ContorsionTensor(raw));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) CHECK(t(i, j, k) == -t(j, i, k));
    }
    // T_ijk = -T_kij needs a totally antisymmetric contorsion: tau_001 = 1 alone breaks it.
    Rank3Tensor single(3);
    single(0, 0, 1) = 1;
    single(0, 1, 0) = -1;
    const auto t = torsionFromContorsion(ContorsionTensor(single));
    CHECK(t(0, 1, 0) == -1);
    CHECK(t(0, 0, 1) == 0);
    CHECK(t(0, 1, 0) != -t(0, 0, 1));
}

TEST_CASE("Levi-Civita connection from structure constants") {
    CHECK(leviCivitaFromStructure(FrameConnection(Rank3Tensor(3))).isZero());
    Rank3Tensor c(3);
    c(0, 1, 2) = 1;
    c(1, 0, 2) = -1;
    const auto omega = leviCivitaFromStructure(FrameConnection(c));
    CHECK(omega(0, 1, 2) == Rational(1, 2));
}

TEST_CASE("tensor validation") {
    TorsionTensor t(3);
    CHECK_THROWS_AS(t.set(0, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(t.set(0, 1, 3, 1), std::out_of_range);
    t.set(2, 1, 0, 1);
    CHECK(t(0, 1, 2) == -1);
    CHECK(t(1, 2, 0) == -1);
    CHECK(t(0, 0, 2) == 0);
    CHECK(TorsionTensor(2).isZero());
    Rank3Tensor bad(3);
    bad(0, 1, 2) = 1;
    CHECK_THROWS_AS(TorsionTensor::fromComponents(bad), std::invalid_argument);
    CHECK_THROWS_AS(ContorsionTensor{bad}, std::invalid_argument);
    CHECK_THROWS_AS(FrameConnection{bad}, std::invalid_argument);
}

TEST_CASE("Dirac symbol") {
    const auto flat = diracSymbol(TorsionTensor(4), 4);
    std::vector<Multivector> minusGamma;
    for (int j = 0; j < 4; ++j) minusGamma.push_back(generator(4, j) * ComplexRational(-1));
    CHECK(symbolEquals(flat.level(0), HS::linearInXi(4, 1, minusGamma)));
    CHECK(isZeroSymbol(flat.level(1)));

    const auto d = diracSymbol(unitTorsion(3), 3);
    const auto expected = canonicalize({{0, 1, 2}, ComplexRational(0, Rational(-3, 4))}, 3);
    CHECK(symbolEquals(d.level(1), HS::radial(3, 0, expected)));
    CHECK((torsionCliffordCube(unitTorsion(3)) == expected));
}

TEST_CASE("square of the Dirac symbol") {
    std::mt19937_64 rng(13);
    for (int n = 3; n <= 5; ++n) {
        const auto t = TorsionTensor::random(n, rng);
        const auto d = diracSymbol(t, n);
        const auto sq = composeSymbols(d, d, 2);
        CHECK(symbolEquals(sq.level(0), HS::radial(n, 2, scalarMultivector(n, 1))));
        // First-order part -(gamma^j C + C gamma^j) xi_j with C the degree-0 part,
        // i.e. +(i/8) T_abc (gamma^j gamma^a gamma^b gamma^c + gamma^a gamma^b gamma^c gamma^j) xi_j.
        const auto c = torsionCliffordCube(t);
        Multivector theta(n);
        for (const auto& [key, v] : t.components()) theta += canonicalize({{key[0], key[1], key[2]}, ComplexRational(v * 6)}, n);
        std::vector<Multivector> a1, literal;
        for (int j = 0; j < n; ++j) {
            a1.push_back((generator(n, j) * c + c * generator(n, j)) * ComplexRational(-1));
            literal.push_back((generator(n, j) * theta + theta * generator(n, j)) * ComplexRational(0, Rational(1, 8)));
        }
        CHECK(symbolEquals(sq.level(1), HS::linearInXi(n, 1, a1)));
        CHECK(symbolEquals(sq.level(1), HS::linearInXi(n, 1, literal)));
    }
}

TEST_CASE("torsion functional agrees with a floating-point matrix computation") {
    std::mt19937_64 rng(14);
    for (int n = 3; n <= 6; ++n)
        for (int k = 0; k < 3; ++k) {
            const auto t = TorsionTensor::random(n, rng);
            const auto u = randomOneForm(n, rng), v = randomOneForm(n, rng), w = randomOneForm(n, rng);
            const auto exact = torsionFunctional(u, v, w, t, n).multiplier().toComplex();
            const auto numeric = oracle_test::torsionDensity(oneFormProduct(u, v, w, n), t, n);
            CHECK(std::abs(exact - numeric) <= 1e-6 * (1 + std::abs(numeric)));
        }
}

TEST_CASE("pipeline constant relative to the closed form") {
    // The pipeline value is (i/4) V Tr(u^ v^ w^ Theta) with Theta = sum T_abc gamma^a gamma^b gamma^c,
    // which is 3/2 times -2^m i V T(u, v, w).
    std::mt19937_64 rng(15);
    for (int n = 3; n <= 6; ++n)
        for (int k = 0; k < 4; ++k) {
            const auto t = TorsionTensor::random(n, rng);
            const auto u = randomOneForm(n, rng), v = randomOneForm(n, rng), w = randomOneForm(n, rng);
            CHECK(torsionFunctional(u, v, w, t, n) ==
                  ComplexRational(Rational(3, 2)) * closedFormTorsion(u, v, w, t, n));
        }
    const auto e = [](int n, int a) { return frameOneForm(n, a); };
    const auto three = torsionFunctional(e(3, 0), e(3, 1), e(3, 2), unitTorsion(3), 3);
    CHECK(three == ResidueValue(3, cr(0, -6)));
    CHECK(three.piCoefficient() == cr(0, -24));
    const auto four = torsionFunctional(e(4, 0), e(4, 1), e(4, 2), unitTorsion(4), 4);
    CHECK(four == ResidueValue(4, cr(0, -6)));
    CHECK(four.piCoefficient() == cr(0, -12));
    CHECK(four.piPower() == 2);
    const auto numeric = oracle_test::torsionDensity(oneFormProduct(e(4, 0), e(4, 1), e(4, 2), 4), unitTorsion(4), 4);
    CHECK(numeric.imag() == doctest::Approx(-6.0));
}

TEST_CASE("closed form evaluator") {
    const auto e = [](int n, int a) { return frameOneForm(n, a); };
    const auto four = closedFormTorsion(e(4, 0), e(4, 1), e(4, 2), unitTorsion(4), 4);
    CHECK(four == ResidueValue(4, cr(0, -4)));
    CHECK(four.piCoefficient() == cr(0, -8));
    const auto three = closedFormTorsion(e(3, 0), e(3, 1), e(3, 2), unitTorsion(3), 3);
    CHECK(three.piCoefficient() == cr(0, -16));
    CHECK(closedFormTorsion(e(3, 0), e(3, 0), e(3, 2), unitTorsion(3), 3).isZero());
    std::mt19937_64 rng(16);
    const auto t = TorsionTensor::random(5, rng);
    const auto u = randomOneForm(5, rng), v = randomOneForm(5, rng), w = randomOneForm(5, rng);
    CHECK(closedFormTorsion(u, v, w, t, 5) == ResidueValue(5, ComplexRational(0, -8 * torsionContraction(u, v, w, t))));
}

TEST_CASE("torsion functional properties") {
    std::mt19937_64 rng(17);
    for (int n = 3; n <= 5; ++n) {
        const auto t = TorsionTensor::random(n, rng);
        const auto u = randomOneForm(n, rng), u2 = randomOneForm(n, rng), v = randomOneForm(n, rng),
                   w = randomOneForm(n, rng);
        const Rational a = randomSmallRational(rng), b = randomSmallRational(rng);
        OneForm mix(n);
        for (int j = 0; j < n; ++j) mix[j] = a * u[j] + b * u2[j];
        CHECK(torsionFunctional(mix, v, w, t, n) ==
              ComplexRational(a) * torsionFunctional(u, v, w, t, n) + ComplexRational(b) * torsionFunctional(u2, v, w, t, n));
        CHECK(torsionFunctional(u, mix, w, t, n) ==
              ComplexRational(a) * torsionFunctional(u, u, w, t, n) + ComplexRational(b) * torsionFunctional(u, u2, w, t, n));
        CHECK(torsionFunctional(u, v, w, TorsionTensor(n), n).isZero());

        TorsionFunctionalEvaluator eval(t, n);
        CHECK(eval.evaluate(u, v, w) == torsionFunctional(u, v, w, t, n));
    }
    CHECK(torsionFunctional(frameOneForm(2, 0), frameOneForm(2, 1), frameOneForm(2, 0), TorsionTensor(2), 2).isZero());
}

TEST_CASE("curvature does not enter the residue density") {
    std::mt19937_64 rng(18);
    for (int n : {3, 4}) {
        const auto t = TorsionTensor::random(n, rng);
        const auto u = randomOneForm(n, rng), v = randomOneForm(n, rng), w = randomOneForm(n, rng);
        const auto base = torsionFunctional(u, v, w, t, n);
        const auto fromCurvature = SpinConnectionJet::fromCurvature(CurvatureJet::random(n, rng));
        const auto generic = SpinConnectionJet::random(n, rng);
        CHECK(torsionFunctional(u, v, w, t, n, &fromCurvature) == base);
        CHECK(torsionFunctional(u, v, w, t, n, &generic) == base);
    }
}

TEST_CASE("chirality functional") {
    CHECK(chiralityFunctional(frameOneForm(4, 3), TorsionTensor(4)).isZero());
    const auto value = chiralityFunctional(frameOneForm(4, 3), unitTorsion(4));
    CHECK(value == ResidueValue(4, cr(0, 6)));
    // Direct trace with explicit matrices: (i/4) Tr(chirality gamma^4 Theta), Theta = 6 gamma^1 gamma^2 gamma^3.
    const auto g = oracle::pauliGammaMatrices(4);
    const auto chir = g[0] * g[1] * g[2] * g[3] * ComplexRational(-1);
    const auto direct = (chir * g[3] * g[0] * g[1] * g[2]).trace() * ComplexRational(0, Rational(3, 2));
    CHECK(direct == cr(0, 6));
    const auto numeric = oracle_test::torsionDensity(chirality(4) * generator(4, 3), unitTorsion(4), 4);
    CHECK(numeric.imag() == doctest::Approx(6.0));
    CHECK(chiralityFunctional(frameOneForm(4, 0), unitTorsion(4)).isZero());
    CHECK_THROWS_AS(chiralityFunctional(frameOneForm(3, 0), unitTorsion(3), 3), std::invalid_argument);
}

TEST_CASE("spectral closedness of the torsion-free Dirac operator") {
    std::mt19937_64 rng(19);
    for (int n : {3, 4}) {
        CHECK(spectralClosednessCheck(scalarMultivector(n, 1), n).isZero());
        for (int k = 0; k < 20; ++k) CHECK(spectralClosednessCheck(randomMultivector(n, rng), n).isZero());
    }
}

TEST_CASE("metric and volume functionals") {
    const auto e1 = frameOneForm(4, 0), e2 = frameOneForm(4, 1);
    CHECK(metricFunctional(e1, e1, 4) == ResidueValue(4, 4));
    CHECK(metricFunctional(e1, e1, 4).piCoefficient() == 8);
    CHECK(metricFunctional(e1, e2, 4).isZero());
    CHECK(volumeFunctional(1, 4).piCoefficient() == 8);
    std::mt19937_64 rng(20);
    const auto g = oracle::pauliGammaMatrices(6);
    for (int k = 0; k < 5; ++k) {
        const auto u = randomOneForm(6, rng), v = randomOneForm(6, rng);
        const auto trace = oracle::multivectorMatrix(cliffordAction(u, 6) * cliffordAction(v, 6), g).trace();
        CHECK(metricFunctional(u, v, 6) == ResidueValue(6, trace));
    }
    CHECK_THROWS_AS(metricFunctional(frameOneForm(3, 0), frameOneForm(3, 0), 3), std::invalid_argument);
    CHECK_THROWS_AS(volumeFunctional(1, 5), std::invalid_argument);
}
