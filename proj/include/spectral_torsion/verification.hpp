#pragma once

// Acceptance checks shared by the test suite and the command-line tool. Each
// check is deterministic in its configuration and seed.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectral_torsion/rational.hpp"
#include "spectral_torsion/residue.hpp"

namespace storsion {

inline constexpr int kWordSamples = 200;
inline constexpr int kMaxWordLength = 8;
inline constexpr int kMonteCarloPoints = 1'000'000;
inline constexpr int kMonteCarloMonomials = 20;
inline constexpr int kMaxMonteCarloDegree = 6;
inline constexpr double kMonteCarloRelTol = 1e-2;
inline constexpr int kClosednessSamples = 100;
inline constexpr int kMaxAdjointSize = 6;
inline constexpr int kEymModels = 3;
inline constexpr int kDoubledSamples = 2;
inline constexpr int kTorusSamples = 10;
inline constexpr int kMaxTorusModes = 4;
inline constexpr double kTorusTol = 1e-10;
inline constexpr double kSuq2Tol = 1e-8;
inline constexpr double kZetaCutoff = 200;
inline constexpr double kZetaConvergentS = 3.5;
inline constexpr double kZetaDivergentS = 2.5;
/// Dyadic increment ratio thresholds: about 2^{3-s}, so 0.71 and 1.41 for the two exponents.
inline constexpr double kZetaConvergentMaxRatio = 0.9;
inline constexpr double kZetaDivergentMinRatio = 1.1;

struct AcceptanceConfig {
    std::vector<int> theoremDims{3, 4, 5, 6};
    int trials = 20;
    std::uint64_t seed = 1;
    double q = 0.5;
    int discTruncation = 2000;
    int torusOrder = 6;
    /// Extra Phi value for the two-sheeted checks.
    std::optional<ComplexRational> phi;
};

/// One compared quantity inside a check.
struct CheckSample {
    std::string label;
    std::optional<ResidueValue> expected;
    std::optional<ResidueValue> computed;
    std::optional<double> residual;
    std::optional<double> tolerance;
    bool passed = true;
};

struct CheckRecord {
    int id = 0;
    std::string key;
    std::string title;
    bool passed = true;
    std::string detail;
    std::vector<CheckSample> samples;
    double elapsedSeconds = 0;
};

CheckRecord checkTheorem(const AcceptanceConfig& config);
CheckRecord checkTorsionFreeCharacterisation(const AcceptanceConfig& config);
CheckRecord checkCliffordOracle(const AcceptanceConfig& config);
CheckRecord checkSphereMoments(const AcceptanceConfig& config);
CheckRecord checkSpectralClosedness(const AcceptanceConfig& config);
CheckRecord checkEinsteinYangMills(const AcceptanceConfig& config);
CheckRecord checkTwoSheeted(const AcceptanceConfig& config);
CheckRecord checkTorusIdentity(const AcceptanceConfig& config);
CheckRecord checkQuantumSphere(const AcceptanceConfig& config);

/// All checks in order.
std::vector<CheckRecord> runAcceptance(const AcceptanceConfig& config);

/// "PASS [3] clifford-oracle: ..." style line.
std::string formatCheckLine(const CheckRecord& r);

}  // namespace storsion
