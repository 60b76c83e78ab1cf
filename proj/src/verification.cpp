#include "spectral_torsion/verification.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "spectral_torsion/almostcommutative.hpp"
#include "spectral_torsion/oracles.hpp"
#include "spectral_torsion/qmodels.hpp"
#include "spectral_torsion/torsion.hpp"

namespace storsion {

namespace {

std::mt19937_64 streamFor(const AcceptanceConfig& config, int id) {
    std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return std::mt19937_64(seq);
}

template <class Body>
CheckRecord timed(int id, const char* key, const char* title, Body&& body) {
    CheckRecord r;
    r.id = id;
    r.key = key;
    r.title = title;
    const auto start = std::chrono::steady_clock::now();
    body(r);
    r.elapsedSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void addExact(CheckRecord& r, std::string label, const ResidueValue& expected, const ResidueValue& computed) {
    CheckSample s{std::move(label), expected, computed, std::nullopt, std::nullopt, expected == computed};
    r.passed = r.passed && s.passed;
    r.samples.push_back(std::move(s));
}

void addResidual(CheckRecord& r, std::string label, double residual, double tolerance) {
    CheckSample s{std::move(label), std::nullopt, std::nullopt, residual, tolerance, residual < tolerance};
    r.passed = r.passed && s.passed;
    r.samples.push_back(std::move(s));
}

void addFlag(CheckRecord& r, std::string label, bool ok) {
    CheckSample s{std::move(label), std::nullopt, std::nullopt, std::nullopt, std::nullopt, ok};
    r.passed = r.passed && ok;
    r.samples.push_back(std::move(s));
}

std::string str(const ComplexRational& z) { return z.str(); }

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

Multivector randomMultivector(int n, std::mt19937_64& rng) {
    Multivector p(n);
    for (BladeMask m = 0; m < (BladeMask{1} << n); ++m)
        p.add(m, ComplexRational(randomSmallRational(rng), randomSmallRational(rng)));
    return p;
}

}  // namespace

CheckRecord checkTheorem(const AcceptanceConfig& config) {
    return timed(1, "theorem", "torsion functional equals the closed form", [&](CheckRecord& r) {
        auto rng = streamFor(config, 1);
        std::set<std::string> ratios;
        int compared = 0;
        for (int n : config.theoremDims) {
            if (n < 3) {
                // Antisymmetric rank-3 tensors vanish; both sides are zero.
                TorsionTensor t(n);
                const auto u = randomOneForm(n, rng), v = randomOneForm(n, rng), w = randomOneForm(n, rng);
                addExact(r, "n=" + std::to_string(n) + " vacuous", closedFormTorsion(u, v, w, t, n),
                         torsionFunctional(u, v, w, t, n));
                if (!r.detail.empty()) r.detail += "; ";
                r.detail += "n=" + std::to_string(n) + ": antisymmetric rank-3 tensor vanishes";
                continue;
            }
            if (n == 3 || n == 4) {
                TorsionTensor t(n);
                t.set(0, 1, 2, 1);
                const auto e1 = frameOneForm(n, 0), e2 = frameOneForm(n, 1), e3 = frameOneForm(n, 2);
                addExact(r, "n=" + std::to_string(n) + " frame anchor", ResidueValue(n, ComplexRational(0, -4)),
                         torsionFunctional(e1, e2, e3, t, n));
            }
            for (int k = 0; k < config.trials; ++k) {
                const auto t = TorsionTensor::random(n, rng);
                const auto u = randomOneForm(n, rng), v = randomOneForm(n, rng), w = randomOneForm(n, rng);
                const auto lhs = torsionFunctional(u, v, w, t, n);
                const auto rhs = closedFormTorsion(u, v, w, t, n);
                addExact(r, "n=" + std::to_string(n) + " trial " + std::to_string(k), rhs, lhs);
                if (!rhs.isZero()) {
                    ratios.insert(str(lhs.multiplier() / rhs.multiplier()));
                    ++compared;
                }
            }
        }
        if (!ratios.empty()) {
            if (!r.detail.empty()) r.detail += "; ";
            r.detail += "pipeline/closed-form ratio over " + std::to_string(compared) + " nonzero trials: {";
            for (auto it = ratios.begin(); it != ratios.end(); ++it) r.detail += (it == ratios.begin() ? "" : ", ") + *it;
            r.detail += "}";
        }
    });
}

CheckRecord checkTorsionFreeCharacterisation(const AcceptanceConfig& config) {
    (void)config;
    return timed(2, "torsion-free", "functional vanishes iff torsion vanishes", [&](CheckRecord& r) {
        for (int n : {3, 4}) {
            const TorsionTensor zero(n);
            TorsionFunctionalEvaluator flat(zero, n);
            bool allZero = true;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        allZero = allZero &&
                                  flat.evaluate(frameOneForm(n, a), frameOneForm(n, b), frameOneForm(n, c)).isZero();
            addFlag(r, "n=" + std::to_string(n) + " T=0 vanishes on all frame triples", allZero);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        TorsionTensor t(n);
                        t.set(a, b, c, 1);
                        const auto value =
                            torsionFunctional(frameOneForm(n, a), frameOneForm(n, b), frameOneForm(n, c), t, n);
                        addFlag(r, "n=" + std::to_string(n) + " T_" + std::to_string(a + 1) + std::to_string(b + 1) +
                                       std::to_string(c + 1) + "=1 detected",
                                !value.isZero());
                    }
        }
    });
}

CheckRecord checkCliffordOracle(const AcceptanceConfig& config) {
    return timed(3, "clifford-oracle", "Clifford kernel matches Pauli gamma matrices", [&](CheckRecord& r) {
        auto rng = streamFor(config, 3);
        for (int n : {2, 4, 6}) {
            const auto gammas = oracle::pauliGammaMatrices(n);
            int bad = 0;
            for (int k = 0; k < kWordSamples; ++k) {
                const auto w1 = oracle::randomWord(n, kMaxWordLength, rng);
                const auto w2 = oracle::randomWord(n, kMaxWordLength, rng);
                const auto a = canonicalize(w1, n), b = canonicalize(w2, n);
                const auto ma = oracle::wordMatrix(w1, gammas), mb = oracle::wordMatrix(w2, gammas);
                if (oracle::multivectorMatrix(a, gammas) != ma) ++bad;
                if (oracle::multivectorMatrix(mul(a, b), gammas) != ma * mb) ++bad;
                if (cliffordTrace(a) != ma.trace()) ++bad;
                if (cliffordTrace(mul(a, b)) != (ma * mb).trace()) ++bad;
            }
            addFlag(r, "n=" + std::to_string(n) + " " + std::to_string(kWordSamples) + " word pairs", bad == 0);
        }
    });
}

CheckRecord checkSphereMoments(const AcceptanceConfig& config) {
    return timed(4, "sphere-moments", "sphere moments match Monte Carlo and pairing values", [&](CheckRecord& r) {
        auto rng = streamFor(config, 4);
        double worst = 0;
        for (int n = 3; n <= 6; ++n) {
            std::vector<MultiIndex> monomials;
            std::uniform_int_distribution<int> half(1, kMaxMonteCarloDegree / 2), idx(0, n - 1);
            for (int k = 0; k < kMonteCarloMonomials; ++k) {
                MultiIndex alpha(n, 0);
                const int pairs = half(rng);
                for (int p = 0; p < pairs; ++p) alpha[idx(rng)] += 2;
                monomials.push_back(alpha);
            }
            const auto mc = oracle::monteCarloSphereMoments(monomials, n, kMonteCarloPoints, rng());
            for (std::size_t k = 0; k < monomials.size(); ++k) {
                const double exact = sphereMoment(monomials[k], n).get_d();
                const double rel = std::abs(mc[k] - exact) / exact;
                worst = std::max(worst, rel);
                addResidual(r, "n=" + std::to_string(n) + " monomial " + std::to_string(k), rel, kMonteCarloRelTol);
            }
            bool quadratic = true;
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    MultiIndex alpha(n, 0);
                    ++alpha[j];
                    ++alpha[k];
                    quadratic = quadratic && sphereMoment(alpha, n) == (j == k ? Rational(1, n) : Rational(0));
                }
            addFlag(r, "n=" + std::to_string(n) + " int xi_j xi_k = V delta_jk / n", quadratic);
        }
        r.detail = "worst relative deviation " + fmt(worst);
    });
}

CheckRecord checkSpectralClosedness(const AcceptanceConfig& config) {
    return timed(5, "spectral-closedness", "W(P D|D|^-n) vanishes for zero-order P", [&](CheckRecord& r) {
        auto rng = streamFor(config, 5);
        for (int n : {3, 4}) {
            int nonzero = 0;
            for (int k = 0; k < kClosednessSamples; ++k)
                if (!spectralClosednessCheck(randomMultivector(n, rng), n).isZero()) ++nonzero;
            addFlag(r, "n=" + std::to_string(n) + " " + std::to_string(kClosednessSamples) + " random P", nonzero == 0);
        }
    });
}

CheckRecord checkEinsteinYangMills(const AcceptanceConfig& config) {
    return timed(6, "eym", "adjoint traces and EYM torsion density vanish", [&](CheckRecord& r) {
        auto rng = streamFor(config, 6);
        for (std::size_t n = 1; n <= kMaxAdjointSize; ++n) {
            bool ok = true;
            for (std::size_t mu = 0; mu < n; ++mu)
                for (std::size_t nu = 0; nu < n; ++nu) ok = ok && adjointTrace(ComplexMatrix::unit(n, mu, nu)).isZero();
            addFlag(r, "Tr ad(E_mu,nu) = 0 for N=" + std::to_string(n), ok);
        }
        for (int dim : {2, 4})
            for (std::size_t n : {2, 3})
                for (int k = 0; k < kEymModels; ++k) {
                    const auto model = EymModel::random(dim, n, rng);
                    const auto u = randomMatrixOneForm(dim, n, rng), v = randomMatrixOneForm(dim, n, rng),
                               w = randomMatrixOneForm(dim, n, rng);
                    addExact(r, "n=" + std::to_string(dim) + " N=" + std::to_string(n) + " model " + std::to_string(k),
                             ResidueValue(dim, 0), eymTorsionDensity(model, u, v, w));
                }
    });
}

CheckRecord checkTwoSheeted(const AcceptanceConfig& config) {
    return timed(7, "two-sheeted", "two-sheeted four-case table and torsion-free test", [&](CheckRecord& r) {
        auto rng = streamFor(config, 7);
        std::vector<ComplexRational> phis{0, 1, ComplexRational::i(), ComplexRational(Rational(1, 2), Rational(-3, 4))};
        if (config.phi) phis.push_back(*config.phi);
        for (const auto& phi : phis) {
            for (int dim : {2, 4})
                for (int k = 0; k < kDoubledSamples; ++k) {
                    auto draw = [&] {
                        return DoubledOneForm{randomOneForm(dim, rng), randomOneForm(dim, rng), randomSmallRational(rng),
                                              randomSmallRational(rng), phi};
                    };
                    const auto w1 = draw(), w2 = draw(), w3 = draw();
                    for (const auto& c : doubledFourCaseTable(w1, w2, w3, dim))
                        addExact(r, "Phi=" + str(phi) + " n=" + std::to_string(dim) + " " + c.name, c.predicted,
                                 c.computed);
                }
            const bool free = doubledTorsionFreeTest(phi, 4);
            addFlag(r, "Phi=" + str(phi) + " torsion-free=" + (free ? "true" : "false"), free == phi.isZero());
        }
    });
}

CheckRecord checkTorusIdentity(const AcceptanceConfig& config) {
    return timed(8, "torus", "noncommutative torus trace identity", [&](CheckRecord& r) {
        auto rng = streamFor(config, 8);
        const std::vector<std::pair<int, int>> exponents{{1, 0}, {0, -1}, {2, -1}, {-1, -1}};
        std::uniform_int_distribution<int> modes(1, kMaxTorusModes);
        double worst = 0;
        for (int n : {2, 3}) {
            for (int s = 0; s < kTorusSamples; ++s) {
                const auto theta = ThetaMatrix::random(n, rng);
                const auto h = TorusElement::randomSelfAdjoint(theta, modes(rng), rng);
                for (const auto& [alpha, beta] : exponents)
                    for (int j = 0; j < n; ++j) {
                        const double res = torusTraceIdentity(h, alpha, beta, j, config.torusOrder);
                        worst = std::max(worst, res);
                        addResidual(r,
                                    "n=" + std::to_string(n) + " h" + std::to_string(s) + " (" + std::to_string(alpha) +
                                        "," + std::to_string(beta) + ") j=" + std::to_string(j + 1),
                                    res, kTorusTol);
                    }
            }
        }
        r.detail = "worst residual " + fmt(worst) + " through order " + std::to_string(config.torusOrder);
    });
}

CheckRecord checkQuantumSphere(const AcceptanceConfig& config) {
    return timed(9, "suq2", "SU_q(2) residue cancellation and summability", [&](CheckRecord& r) {
        const double q = config.q;
        const int n = config.discTruncation;
        std::vector<std::pair<std::string, QuantumDiscElement>> xs{{"1", QuantumDiscElement::scalar(q, 1.0)},
                                                                  {"z", QuantumDiscElement::z(q)}};
        for (int k = 1; k <= 3; ++k) xs.emplace_back("(z*z)^" + std::to_string(k), QuantumDiscElement::yPower(q, k));
        for (const auto& [name, x] : xs) addResidual(r, "x=" + name, suq2ResidueCancellation(x, n), kSuq2Tol);
        for (const auto& [a, x] : xs)
            for (const auto& [b, y] : xs) addResidual(r, "pair " + a + " (x) " + b, suq2PairedCombination(x, y, n), kSuq2Tol);
        const double conv = Suq2DiracSpec::dyadicIncrementRatio(kZetaConvergentS, kZetaCutoff);
        const double grow = Suq2DiracSpec::dyadicIncrementRatio(kZetaDivergentS, kZetaCutoff);
        addFlag(r, "zeta s=3.5 increments shrink (ratio " + fmt(conv) + ")", conv < kZetaConvergentMaxRatio);
        addFlag(r, "zeta s=2.5 increments grow (ratio " + fmt(grow) + ")", grow > kZetaDivergentMinRatio);
        r.detail = "zeta partial sums to j=200: s=3.5 -> " + fmt(Suq2DiracSpec::zetaPartialSum(kZetaConvergentS, kZetaCutoff)) +
                   ", s=2.5 -> " + fmt(Suq2DiracSpec::zetaPartialSum(kZetaDivergentS, kZetaCutoff));
    });
}

std::vector<CheckRecord> runAcceptance(const AcceptanceConfig& config) {
    return {checkTheorem(config),        checkTorsionFreeCharacterisation(config),
            checkCliffordOracle(config), checkSphereMoments(config),
            checkSpectralClosedness(config), checkEinsteinYangMills(config),
            checkTwoSheeted(config),     checkTorusIdentity(config),
            checkQuantumSphere(config)};
}

std::string formatCheckLine(const CheckRecord& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.key << ": " << r.title;
    int failed = 0;
    for (const auto& s : r.samples) failed += s.passed ? 0 : 1;
    os << " (" << r.samples.size() - failed << "/" << r.samples.size() << " samples";
    os.precision(3);
    os << ", " << std::fixed << r.elapsedSeconds << " s)";
    if (!r.detail.empty()) os << " -- " << r.detail;
    return os.str();
}

}  // namespace storsion
