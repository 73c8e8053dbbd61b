#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace qha {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // failure detail or recorded data
};

struct SuiteReport {
    std::string suite;
    unsigned seed = 0;
    std::vector<Check> checks;

    bool passed() const;
    void add(std::string name, bool pass, std::string witness = "");
    /// Versioned report ("schema": 1); timing is optional so byte-identical
    /// reruns can be compared directly.
    nlohmann::json to_json(bool include_timing, double timing_ms) const;
};

}  // namespace qha
