#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace padicsum {

// One verification criterion of the one-shot suite. Notes are deterministic
// strings: two runs of the suite must serialize byte-identically.
struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::vector<std::string> notes;
};

struct SelfcheckReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const {
        for (const auto& c : criteria)
            if (!c.passed) return false;
        return true;
    }
};

// Runs one criterion (1..8) at full scale.
CriterionResult run_criterion(int id);

// Runs all eight criteria.
SelfcheckReport run_selfcheck();

std::string selfcheck_to_text(const SelfcheckReport& report);
nlohmann::ordered_json selfcheck_to_json(const SelfcheckReport& report);

} // namespace padicsum
