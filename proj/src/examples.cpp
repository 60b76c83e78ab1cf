#include "spectral_torsion/examples.hpp"

#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "spectral_torsion/almostcommutative.hpp"
#include "spectral_torsion/qmodels.hpp"
#include "spectral_torsion/torsion.hpp"

namespace storsion {

namespace {

void add(CheckRecord& r, CheckSample s) {
    r.passed = r.passed && s.passed;
    r.samples.push_back(std::move(s));
}

CheckSample exact(std::string label, const ResidueValue& expected, const ResidueValue& computed) {
    return {std::move(label), expected, computed, std::nullopt, std::nullopt, expected == computed};
}

CheckSample residual(std::string label, double value, double tolerance) {
    return {std::move(label), std::nullopt, std::nullopt, value, tolerance, value < tolerance};
}

CheckSample flag(std::string label, bool ok) {
    return {std::move(label), std::nullopt, std::nullopt, std::nullopt, std::nullopt, ok};
}

std::string dimLabel(int n) { return "n=" + std::to_string(n); }

void requireEven(const std::vector<int>& dims, const char* model) {
    for (int n : dims)
        if (n < 2 || n % 2 != 0) throw std::invalid_argument(std::string(model) + " needs even dimensions");
}

void runEym(CheckRecord& r, const ExampleConfig& c) {
    requireEven(c.dims, "the EYM model");
    if (c.matrixSize < 1) throw std::invalid_argument("matrix size must be positive");
    std::mt19937_64 rng(c.seed);
    for (std::size_t mu = 0; mu < c.matrixSize; ++mu)
        for (std::size_t nu = 0; nu < c.matrixSize; ++nu)
            add(r, flag("Tr ad(E_" + std::to_string(mu + 1) + std::to_string(nu + 1) + ") = 0",
                        adjointTrace(ComplexMatrix::unit(c.matrixSize, mu, nu)).isZero()));
    for (int n : c.dims)
        for (int k = 0; k < c.trials; ++k) {
            const auto model = EymModel::random(n, c.matrixSize, rng);
            const auto u = randomMatrixOneForm(n, c.matrixSize, rng), v = randomMatrixOneForm(n, c.matrixSize, rng),
                       w = randomMatrixOneForm(n, c.matrixSize, rng);
            add(r, exact(dimLabel(n) + " N=" + std::to_string(c.matrixSize) + " model " + std::to_string(k),
                         ResidueValue(n, 0), eymTorsionDensity(model, u, v, w)));
        }
}

void runDoubled(CheckRecord& r, const ExampleConfig& c) {
    requireEven(c.dims, "the two-sheeted model");
    std::mt19937_64 rng(c.seed);
    const ComplexRational phi = c.phi;
    const Rational phi2 = phi.norm();
    for (int n : c.dims) {
        const OneForm zero(n, Rational(0)), e1 = frameOneForm(n, 0);
        const Rational unit = Rational(1) << (n / 2);  // 2^m from Tr(1)
        const DoubledOneForm diag{e1, zero, 0, 0, phi}, off{zero, zero, 1, 0, phi}, allOff{zero, zero, 1, 1, phi};
        add(r, exact(dimLabel(n) + " ddd frame", ResidueValue(n, 0), doubledResidue(diag, diag, diag, n)));
        add(r, exact(dimLabel(n) + " ddo w1+=w2+=e1 f3+=1", ResidueValue(n, ComplexRational(phi2 * unit)),
                     doubledResidue(diag, diag, off, n)));
        add(r, exact(dimLabel(n) + " ooo f=1", ResidueValue(n, ComplexRational(2 * phi2 * phi2 * unit)),
                     doubledResidue(allOff, allOff, allOff, n)));
        for (int k = 0; k < c.trials; ++k) {
            auto draw = [&] {
                return DoubledOneForm{randomOneForm(n, rng), randomOneForm(n, rng), randomSmallRational(rng),
                                      randomSmallRational(rng), phi};
            };
            const auto w1 = draw(), w2 = draw(), w3 = draw();
            for (const auto& cs : doubledFourCaseTable(w1, w2, w3, n))
                add(r, exact(dimLabel(n) + " trial " + std::to_string(k) + " " + cs.name, cs.predicted, cs.computed));
        }
        const bool free = doubledTorsionFreeTest(phi, n);
        add(r, flag(dimLabel(n) + " torsion-free=" + (free ? "true" : "false"), free == phi.isZero()));
    }
    r.detail = "Phi=" + phi.str();
}

void runTorus(CheckRecord& r, const ExampleConfig& c) {
    for (int n : c.dims)
        if (n < 2) throw std::invalid_argument("the torus needs dimension at least 2");
    if (c.torusOrder < 1) throw std::invalid_argument("truncation order must be at least 1");
    std::mt19937_64 rng(c.seed);
    std::uniform_int_distribution<int> modes(1, kMaxTorusModes);
    const std::vector<std::pair<int, int>> exponents{{1, 0}, {0, -1}, {2, -1}, {-1, -1}};
    for (int n : c.dims)
        for (int s = 0; s < c.trials; ++s) {
            const auto theta = ThetaMatrix::random(n, rng);
            const auto h = TorusElement::randomSelfAdjoint(theta, modes(rng), rng);
            for (const auto& [alpha, beta] : exponents)
                for (int j = 0; j < n; ++j)
                    add(r, residual(dimLabel(n) + " h" + std::to_string(s) + " (" + std::to_string(alpha) + "," +
                                        std::to_string(beta) + ") j=" + std::to_string(j + 1),
                                    torusTraceIdentity(h, alpha, beta, j, c.torusOrder), kTorusTol));
        }
    r.detail = "order " + std::to_string(c.torusOrder);
}

void runSuq2(CheckRecord& r, const ExampleConfig& c) {
    if (!(c.q > 0 && c.q < 1)) throw std::invalid_argument("q must lie in (0, 1)");
    if (c.discTruncation < 4) throw std::invalid_argument("disc truncation must be at least 4");
    const double q = c.q;
    const int n = c.discTruncation;
    const auto one = QuantumDiscElement::scalar(q, 1.0);
    const auto oneMinusY = one - QuantumDiscElement::yPower(q, 1);
    add(r, residual("tau0_up(1) = -1/2", std::abs(tau0Up(one, n).value - Complex(-0.5)), kSuq2Tol));
    add(r, residual("tau0_down(1) = 1/2", std::abs(tau0Down(one, n).value - Complex(0.5)), kSuq2Tol));
    const double geometric = q * q / (1 - q * q);
    add(r, residual("tau0_up(1 - z*z) = q^2/(1-q^2)", std::abs(tau0Up(oneMinusY, n).value - geometric), kSuq2Tol));
    add(r, residual("x=(z*z)^3 cancellation", suq2ResidueCancellation(QuantumDiscElement::yPower(q, 3), n), kSuq2Tol));
    add(r, residual("x=z cancellation", suq2ResidueCancellation(QuantumDiscElement::z(q), n), kSuq2Tol));
    add(r, residual("pair 1 (x) (1 - z*z)", suq2PairedCombination(one, oneMinusY, n), kSuq2Tol));
    const double conv = Suq2DiracSpec::dyadicIncrementRatio(kZetaConvergentS, kZetaCutoff);
    const double grow = Suq2DiracSpec::dyadicIncrementRatio(kZetaDivergentS, kZetaCutoff);
    add(r, flag("zeta s=3.5 increments shrink", conv < kZetaConvergentMaxRatio));
    add(r, flag("zeta s=2.5 increments grow", grow > kZetaDivergentMinRatio));
    std::ostringstream os;
    os << "q=" << q << " N=" << n;
    r.detail = os.str();
}

}  // namespace

std::vector<int> defaultExampleDims(const std::string& name) {
    if (name == "nctorus") return {2, 3};
    if (name == "suq2") return {};
    return {4};
}

CheckRecord runExample(const std::string& name, const ExampleConfig& config) {
    CheckRecord r;
    r.key = name;
    const auto start = std::chrono::steady_clock::now();
    if (name == "eym") {
        r.id = 6;
        r.title = "EYM torsion density vanishes";
        runEym(r, config);
    } else if (name == "doubled") {
        r.id = 7;
        r.title = "two-sheeted residue table";
        runDoubled(r, config);
    } else if (name == "nctorus") {
        r.id = 8;
        r.title = "noncommutative torus trace identity";
        runTorus(r, config);
    } else if (name == "suq2") {
        r.id = 9;
        r.title = "SU_q(2) residue cancellation";
        runSuq2(r, config);
    } else {
        throw std::invalid_argument("unknown example '" + name + "'");
    }
    r.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace storsion
