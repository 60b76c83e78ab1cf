// Acceptance suite: one line per criterion, non-zero exit if any fails.
#include <iostream>

#include "spectral_torsion/verification.hpp"

int main() {
    const storsion::AcceptanceConfig config;
    bool ok = true;
    for (const auto& record : storsion::runAcceptance(config)) {
        std::cout << storsion::formatCheckLine(record) << std::endl;
        for (const auto& s : record.samples)
            if (!s.passed) {
                std::cout << "    failed sample: " << s.label;
                if (s.expected && s.computed)
                    std::cout << " expected " << s.expected->str() << ", got " << s.computed->str();
                if (s.residual) std::cout << " residual " << *s.residual;
                std::cout << "\n";
                if (record.id == 1) break;
            }
        ok = ok && record.passed;
    }
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
    return ok ? 0 : 1;
}
