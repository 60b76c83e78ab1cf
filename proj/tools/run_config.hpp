#pragma once

// Configuration and JSON report plumbing for the spectral-torsion tool.
// Indices are 1-based at this boundary and 0-based inside the library.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "spectral_torsion/residue.hpp"
#include "spectral_torsion/torsion.hpp"
#include "spectral_torsion/verification.hpp"

namespace storsion::cli {

/// Invalid user configuration; mapped to exit code 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TorsionEntry {
    std::array<int, 3> indices;  // 1-based, strictly increasing
    Rational value;
};

struct RunConfig {
    std::string command;
    std::string example;
    std::optional<std::vector<int>> dims;
    std::optional<int> trials;
    std::uint64_t seed = 1;
    std::optional<double> q;
    std::optional<int> truncation;  // --N
    std::optional<int> order;       // --K
    std::optional<ComplexRational> phi;
    std::vector<TorsionEntry> torsion;
    std::optional<OneForm> u, v, w;
    std::string outPath;
};

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 8;

/// "3,4,5" -> {3, 4, 5}, each in [2, 8].
std::vector<int> parseDims(const std::string& text);
Rational parseRationalValue(const nlohmann::json& j);
OneForm parseOneForm(const nlohmann::json& j);
TorsionEntry parseTorsionEntry(const nlohmann::json& j);

/// Merges a JSON config document into `config`; command-line values applied afterwards win.
void applyConfigJson(const nlohmann::json& doc, RunConfig& config);

/// Checks ranges and cross-field consistency; throws ConfigError.
void validate(const RunConfig& config);

/// Dimension used by `eval`: explicit dims, else the one-form length, else 4.
int evalDimension(const RunConfig& config);
TorsionTensor buildTorsion(const RunConfig& config, int n);

/// {"re":[num,den],"im":[num,den],"Vpow":k,"piPow":p,"decimal":"..."}.
nlohmann::json exactScalar(const ComplexRational& value, int vPow, int piPow);
/// A residue in V(S^{n-1}) units plus its pi form.
nlohmann::json residueJson(const ResidueValue& r);
std::string decimalString(std::complex<double> z);

nlohmann::json configEcho(const RunConfig& config);
nlohmann::json checkJson(const CheckRecord& r);

/// Full report. Everything but the "timing" member is deterministic in the configuration.
nlohmann::json buildReport(const RunConfig& config, const std::vector<CheckRecord>& checks,
                           const nlohmann::json& extra = nlohmann::json::object());

}  // namespace storsion::cli
