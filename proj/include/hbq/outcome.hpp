#pragma once

// Two-sided comparison record shared by all identity verifiers.

#include "hbq/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hbq {

struct VerificationOutcome {
    std::string name;
    Complex lhs{};
    Complex rhs{};
    double abs_diff = 0.0;
    double tolerance = 0.0;
    std::vector<std::pair<std::string, std::string>> params;
    bool pass = false;
    // secondary quantities (alternative readings, ratios, error estimates)
    std::vector<std::pair<std::string, Complex>> extras;
    std::vector<std::string> notes;

    void settle()
    {
        abs_diff = std::abs(lhs - rhs);
        pass = abs_diff <= tolerance;
    }
};

}  // namespace hbq
