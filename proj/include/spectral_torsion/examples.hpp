#pragma once

// Configurable runs of the model computations, used by the `examples`
// command. Each returns a single check record.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectral_torsion/verification.hpp"

namespace storsion {

struct ExampleConfig {
    std::vector<int> dims;
    int trials = 3;
    std::uint64_t seed = 1;
    std::size_t matrixSize = 3;
    ComplexRational phi{1};
    double q = 0.5;
    int discTruncation = 2000;
    int torusOrder = 6;
};

inline const std::vector<std::string> kExampleNames{"eym", "doubled", "nctorus", "suq2"};

/// Default base dimensions per example: eym and doubled {4}, nctorus {2, 3}, suq2 unused.
std::vector<int> defaultExampleDims(const std::string& name);

/// Throws std::invalid_argument for unknown names or dimensions the model does not support.
CheckRecord runExample(const std::string& name, const ExampleConfig& config);

}  // namespace storsion
