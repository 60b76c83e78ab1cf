#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"

#include "spectral_torsion/qmodels.hpp"

using namespace storsion;

namespace {

constexpr double kPi = 3.14159265358979323846;

ThetaMatrix theta2(double v) {
    ThetaMatrix t(2);
    t.set(0, 1, v);
    return t;
}

}  // namespace

TEST_CASE("Weyl phases") {
    const double th = std::sqrt(2.0) - 1;
    const auto t = theta2(th);
    const auto u1 = TorusElement::monomial(t, {1, 0}, 1.0), u2 = TorusElement::monomial(t, {0, 1}, 1.0);
    const auto ab = u1 * u2, ba = u2 * u1;
    CHECK(std::abs(ab.coefficients().at({1, 1}) - std::exp(Complex(0, -kPi * th))) < 1e-15);
    CHECK(std::abs(ba.coefficients().at({1, 1}) - std::exp(Complex(0, kPi * th))) < 1e-15);
    CHECK(std::abs(ab.coefficients().at({1, 1}) / ba.coefficients().at({1, 1}) - std::exp(Complex(0, -2 * kPi * th))) < 1e-14);
    CHECK(torusTrace(u1) == Complex(0));
    CHECK(torusTrace(TorusElement::unit(t)) == Complex(1));
    CHECK(distance(u1 * u1.adjoint(), TorusElement::unit(t)) < 1e-15);
}

TEST_CASE("torus trace and derivations") {
    std::mt19937_64 rng(31);
    for (int n = 2; n <= 4; ++n) {
        const auto t = ThetaMatrix::random(n, rng);
        for (int k = 0; k < 10; ++k) {
            const auto a = TorusElement::random(t, 4, rng), b = TorusElement::random(t, 4, rng);
            CHECK(std::abs(torusTrace(a * b) - torusTrace(b * a)) < 1e-12);
            for (int j = 0; j < n; ++j) {
                CHECK(std::abs(torusTrace(torusDerive(j, a))) == 0.0);
                const auto lhs = torusDerive(j, a * b);
                const auto rhs = torusDerive(j, a) * b + a * torusDerive(j, b);
                CHECK(distance(lhs, rhs) < 1e-12);
            }
            const auto h = TorusElement::randomSelfAdjoint(t, 3, rng);
            CHECK(distance(h, h.adjoint()) < 1e-15);
        }
    }
    CHECK_THROWS_AS(torusMul(TorusElement::unit(theta2(0.1)), TorusElement::unit(theta2(0.2))), std::invalid_argument);
}

TEST_CASE("formal exponential series") {
    const auto t = theta2(0.3);
    const auto h = TorusElement::monomial(t, {1, 0}, 1.0) + TorusElement::monomial(t, {-1, 0}, 1.0);
    const auto k = FormalSeries::exponential(h, 1.0, 6);
    const auto kinv = FormalSeries::exponential(h, -1.0, 6);
    const auto prod = k * kinv;
    CHECK(distance(prod[0], TorusElement::unit(t)) < 1e-15);
    for (int o = 1; o <= 6; ++o) CHECK(distance(prod[o], TorusElement(t)) < 1e-13);
    CHECK(distance(k[2], (h * h) * Complex(0.5)) < 1e-15);
}

TEST_CASE("torus trace identity") {
    const auto t = theta2(std::sqrt(2.0) - 1);
    const auto h = TorusElement::monomial(t, {1, 0}, 1.0) + TorusElement::monomial(t, {-1, 0}, 1.0);
    CHECK(torusTraceIdentity(h, 1, 0, 0, 6) < 1e-10);
    CHECK(torusTraceIdentity(h, 0, -1, 0, 6) < 1e-10);
    CHECK(torusTraceIdentity(TorusElement(t), 2, 3, 1, 6) == 0.0);
    std::mt19937_64 rng(32);
    for (int n = 2; n <= 4; ++n) {
        const auto th = ThetaMatrix::random(n, rng);
        for (int k = 0; k < 3; ++k) {
            const auto g = TorusElement::randomSelfAdjoint(th, 4, rng);
            for (auto [a, b] : {std::pair{1, 1}, {2, -1}, {0, -1}, {-2, 1}})
                for (int j = 0; j < n; ++j) CHECK(torusTraceIdentity(g, a, b, j, 6) < 1e-10);
        }
    }
}

TEST_CASE("quantum disc representation") {
    const double q = 0.5;
    const int n = 8;
    CHECK((discRepresent(QuantumDiscElement::scalar(q, 1.0), n) - Eigen::MatrixXcd::Identity(n + 1, n + 1)).norm() == 0.0);
    const auto oneMinusY = QuantumDiscElement::scalar(q, 1.0) - QuantumDiscElement::yPower(q, 1);
    const auto m = discRepresent(oneMinusY, n);
    for (int k = 0; k <= n; ++k) CHECK(m(k, k).real() == doctest::Approx(std::pow(q, 2 * (k + 1))));
    const auto z = discRepresent(QuantumDiscElement::z(q), n);
    for (int k = 0; k < n; ++k) CHECK(z(k + 1, k).real() == doctest::Approx(std::sqrt(1 - std::pow(q, 2 * (k + 1)))));
    CHECK(z.diagonal().norm() == 0.0);
}

TEST_CASE("quantum disc products agree with matrix products") {
    const double q = 0.6;
    const int n = 30;
    const auto z = QuantumDiscElement::z(q), zs = QuantumDiscElement::zStar(q);
    const auto x = z * z * zs + QuantumDiscElement::yPower(q, 2) * Complex(0, 2) + zs * zs;
    const auto y = zs * z * z + QuantumDiscElement::scalar(q, 3.0);
    // Compare away from the truncation edge where the finite matrices lose rows.
    const Eigen::MatrixXcd lhs = discRepresent(x * y, n + 6).topLeftCorner(n, n);
    const Eigen::MatrixXcd rhs = (discRepresent(x, n + 6) * discRepresent(y, n + 6)).topLeftCorner(n, n);
    CHECK((lhs - rhs).norm() < 1e-12);
    CHECK((discRepresent(x.adjoint(), n) - discRepresent(x, n).adjoint()).norm() < 1e-12);
    // y z = z phi(y) with phi(y) = q^2 y + 1 - q^2, equivalently z* z - q^2 z z* = 1 - q^2.
    const auto yz = QuantumDiscElement::yPower(q, 1) * z;
    const auto phiY = QuantumDiscElement::yPower(q, 1) * Complex(q * q) + QuantumDiscElement::scalar(q, 1 - q * q);
    CHECK(discRepresent(yz - z * phiY, n).norm() < 1e-14);
    const auto relation = zs * z - z * zs * Complex(q * q) - QuantumDiscElement::scalar(q, 1 - q * q);
    CHECK(discRepresent(relation, n).topLeftCorner(n, n).norm() < 1e-14);
}

TEST_CASE("SU_q(2) residue traces") {
    const double q = 0.5;
    const int n = 2000;
    const auto one = QuantumDiscElement::scalar(q, 1.0);
    CHECK(tau1(one) == Complex(1));
    CHECK(tau0Up(one, n).value.real() == doctest::Approx(-0.5));
    CHECK(tau0Down(one, n).value.real() == doctest::Approx(0.5));
    CHECK(suq2ResidueCancellation(one, n) < 1e-12);

    const auto oneMinusY = one - QuantumDiscElement::yPower(q, 1);
    CHECK(std::abs(tau1(oneMinusY)) < 1e-15);
    CHECK(tau0Up(oneMinusY, n).value.real() == doctest::Approx(q * q / (1 - q * q)));
    CHECK(tau0Down(oneMinusY, n).value.real() == doctest::Approx(q * q / (1 - q * q)));
    CHECK(tau0Up(oneMinusY, n).change < 1e-12);

    const auto z = QuantumDiscElement::z(q);
    CHECK(std::abs(tau1(z)) < 1e-15);
    CHECK(std::abs(tau0Up(z, n).value) < 1e-12);

    CHECK(suq2ResidueCancellation(QuantumDiscElement::yPower(q, 3), n) < 1e-8);
    CHECK(suq2PairedCombination(one, oneMinusY, n) < 1e-8);
    std::mt19937_64 rng(33);
    std::uniform_real_distribution<double> c(-1, 1);
    for (int k = 0; k < 5; ++k) {
        auto x = QuantumDiscElement(q);
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b) x.addTerm(a, {Complex(c(rng), c(rng)), Complex(c(rng), 0)}, b);
        CHECK(suq2ResidueCancellation(x, n) < 1e-8);
    }
}

TEST_CASE("Dirac spectrum summability") {
    CHECK(Suq2DiracSpec::upEigenvalue(0) == 1.5);
    CHECK(Suq2DiracSpec::downEigenvalue(0.5) == -1.5);
    CHECK(Suq2DiracSpec::upMultiplicity(0) == 2);
    CHECK(Suq2DiracSpec::downMultiplicity(0) == 0);
    CHECK(Suq2DiracSpec::dyadicIncrementRatio(3.5, 200) < 0.9);
    CHECK(Suq2DiracSpec::dyadicIncrementRatio(2.5, 200) > 1.1);
    CHECK(Suq2DiracSpec::zetaPartialSum(3.5, 200) < Suq2DiracSpec::zetaPartialSum(2.5, 200));
    CHECK(Suq2DiracSpec::zetaPartialSum(3.5, 400) - Suq2DiracSpec::zetaPartialSum(3.5, 200) < 0.1);
}
