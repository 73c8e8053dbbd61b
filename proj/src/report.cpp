#include "qha/report.hpp"

namespace qha {

bool SuiteReport::passed() const {
    for (const Check& c : checks)
        if (!c.pass)
            return false;
    return true;
}

void SuiteReport::add(std::string name, bool pass, std::string witness) {
    checks.push_back({std::move(name), pass, std::move(witness)});
}

nlohmann::json SuiteReport::to_json(bool include_timing, double timing_ms) const {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["seed"] = seed;
    nlohmann::json arr = nlohmann::json::array();
    for (const Check& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["status"] = c.pass ? "pass" : "fail";
        if (!c.witness.empty())
            cj["witness"] = c.witness;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    j["passed"] = passed();
    if (include_timing)
        j["timing_ms"] = timing_ms;
    return j;
}

}  // namespace qha
